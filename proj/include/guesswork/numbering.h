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

#ifndef GUESSWORK_NUMBERING_H
#define GUESSWORK_NUMBERING_H

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace guesswork {

class Rng;

/// A bijection of {0, ..., M-1}. Query position t maps to ensemble label n(t).
///
/// Internally zero-based; the one-based helpers exist for JSON, the CLI, and
/// the Python bindings, which all present numberings as (n(1), ..., n(M)).
class Numbering {
   public:
    Numbering() = default;
    /// Throws InputError unless `zero_based` is a permutation of 0..M-1.
    explicit Numbering(std::vector<int> zero_based);

    static Numbering identity(std::size_t size);
    /// (M, M-1, ..., 1).
    static Numbering reversal(std::size_t size);
    static Numbering from_one_based(std::span<const int> values);
    static Numbering random(std::size_t size, Rng &rng);

    std::size_t size() const { return map_.size(); }
    int operator()(std::size_t t) const { return map_[t]; }
    const std::vector<int> &map() const { return map_; }
    std::vector<int> one_based() const;

    auto operator<=>(const Numbering &) const = default;

   private:
    std::vector<int> map_;
};

/// (a o b)(t) = a(b(t)).
Numbering compose(const Numbering &a, const Numbering &b);
Numbering invert(const Numbering &n);
int apply(const Numbering &n, std::size_t t);

}  // namespace guesswork

#endif
