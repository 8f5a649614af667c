// Copyright 2026 The Guesswork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "guesswork/numbering.h"

#include <numeric>
#include <string>

#include "guesswork/errors.h"
#include "guesswork/rng.h"

namespace guesswork {

Numbering::Numbering(std::vector<int> zero_based) : map_(std::move(zero_based)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[v]) {
            throw InputError("not a bijection of {1.." + std::to_string(map_.size()) + "}");
        }
        seen[v] = true;
    }
}

Numbering Numbering::identity(std::size_t size) {
    std::vector<int> m(size);
    std::iota(m.begin(), m.end(), 0);
    return Numbering(std::move(m));
}

Numbering Numbering::reversal(std::size_t size) {
    std::vector<int> m(size);
    for (std::size_t t = 0; t < size; ++t) {
        m[t] = static_cast<int>(size - 1 - t);
    }
    return Numbering(std::move(m));
}

Numbering Numbering::from_one_based(std::span<const int> values) {
    std::vector<int> m(values.begin(), values.end());
    for (int &v : m) {
        --v;
    }
    return Numbering(std::move(m));
}

Numbering Numbering::random(std::size_t size, Rng &rng) {
    std::vector<int> m(size);
    std::iota(m.begin(), m.end(), 0);
    // Fisher-Yates with the portable integer draw.
    for (std::size_t i = size; i > 1; --i) {
        std::size_t j = rng.below(i);
        std::swap(m[i - 1], m[j]);
    }
    return Numbering(std::move(m));
}

std::vector<int> Numbering::one_based() const {
    std::vector<int> out(map_);
    for (int &v : out) {
        ++v;
    }
    return out;
}

Numbering compose(const Numbering &a, const Numbering &b) {
    if (a.size() != b.size()) {
        throw DimensionError("cannot compose numberings of different sizes");
    }
    std::vector<int> m(a.size());
    for (std::size_t t = 0; t < m.size(); ++t) {
        m[t] = a(b(t));
    }
    return Numbering(std::move(m));
}

Numbering invert(const Numbering &n) {
    std::vector<int> m(n.size());
    for (std::size_t t = 0; t < m.size(); ++t) {
        m[n(t)] = static_cast<int>(t);
    }
    return Numbering(std::move(m));
}

int apply(const Numbering &n, std::size_t t) {
    if (t >= n.size()) {
        throw DimensionError("position out of range");
    }
    return n(t);
}

}  // namespace guesswork
