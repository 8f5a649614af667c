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

#ifndef GUESSWORK_ENUMERATION_H
#define GUESSWORK_ENUMERATION_H

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "guesswork/numbering.h"

namespace guesswork {

inline constexpr std::size_t kDefaultFactorialCap = 10;

struct EnumerationOptions {
    /// Largest M for which all M! numberings may be enumerated.
    std::size_t factorial_cap = kDefaultFactorialCap;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Cap from GUESSWORK_FACTORIAL_CAP, or kDefaultFactorialCap when unset or
/// unparsable.
std::size_t factorial_cap_from_env();

/// Throws CapExceededError when size > cap.
void require_within_cap(std::size_t size, std::size_t cap, const char *what);

namespace detail {

/// The permutation space of {0..M-1} split into lexicographically ordered
/// blocks sharing a fixed prefix of length `prefix_len`. Blocks are visited in
/// parallel but every reduction combines per-block results in block order, so
/// results never depend on scheduling or thread count.
class PermutationBlocks {
   public:
    explicit PermutationBlocks(std::size_t size) : size_(size) {
        prefix_len_ = size >= 3 ? 2 : (size >= 1 ? 1 : 0);
        count_ = 1;
        for (std::size_t i = 0; i < prefix_len_; ++i) {
            count_ *= size - i;
        }
    }

    std::size_t count() const { return count_; }

    /// Visits every permutation of block `b` in lexicographic order. `visit`
    /// returns false to stop early.
    template <class Visit>
    void visit_block(std::size_t b, Visit &&visit) const {
        std::vector<int> perm(size_);
        std::vector<int> rest(size_);
        std::iota(rest.begin(), rest.end(), 0);
        std::size_t radix = count_;
        for (std::size_t i = 0; i < prefix_len_; ++i) {
            radix /= size_ - i;
            const std::size_t pick = b / radix;
            b %= radix;
            perm[i] = rest[pick];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        std::copy(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(size_ - prefix_len_),
                  perm.begin() + static_cast<std::ptrdiff_t>(prefix_len_));
        const auto tail = perm.begin() + static_cast<std::ptrdiff_t>(prefix_len_);
        do {
            if (!visit(static_cast<const std::vector<int> &>(perm))) {
                return;
            }
        } while (std::next_permutation(tail, perm.end()));
    }

   private:
    std::size_t size_;
    std::size_t prefix_len_;
    std::size_t count_;
};

template <class Work>
void run_blocks(std::size_t blocks, unsigned threads, Work &&work) {
    unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n = static_cast<unsigned>(std::min<std::size_t>(n, blocks));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            work(b);
        }
    };
    if (n <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        pool.emplace_back(worker);
    }
}

}  // namespace detail

struct ArgmaxResult {
    Numbering numbering;
    double score = 0.0;
};

/// Maximizes `score(map)` over all numberings. Among numberings whose score
/// is within `tie_tol * max(1, |max|)` of the maximum, the lexicographically smallest mapping
/// wins. Two passes (max, then first near-max) keep this well defined under
/// floating-point ties.
template <class Score>
ArgmaxResult parallel_argmax(std::size_t size, Score &&score, double tie_tol, unsigned threads = 0) {
    detail::PermutationBlocks blocks(size);
    std::vector<double> block_max(blocks.count(), -std::numeric_limits<double>::infinity());
    detail::run_blocks(blocks.count(), threads, [&](std::size_t b) {
        double best = -std::numeric_limits<double>::infinity();
        blocks.visit_block(b, [&](const std::vector<int> &perm) {
            best = std::max(best, score(perm));
            return true;
        });
        block_max[b] = best;
    });
    const double top = *std::max_element(block_max.begin(), block_max.end());
    const double threshold = top - tie_tol * std::max(1.0, std::abs(top));

    std::vector<std::optional<std::pair<std::vector<int>, double>>> first(blocks.count());
    detail::run_blocks(blocks.count(), threads, [&](std::size_t b) {
        if (block_max[b] < threshold) {
            return;
        }
        blocks.visit_block(b, [&](const std::vector<int> &perm) {
            const double s = score(perm);
            if (s >= threshold) {
                first[b] = std::make_pair(perm, s);
                return false;
            }
            return true;
        });
    });
    for (auto &hit : first) {
        if (hit) {
            return {Numbering(std::move(hit->first)), hit->second};
        }
    }
    // Unreachable: the block holding `top` always records a hit.
    return {Numbering::identity(size), top};
}

/// True iff `pred(map)` holds for every numbering.
template <class Pred>
bool parallel_all_of(std::size_t size, Pred &&pred, unsigned threads = 0) {
    detail::PermutationBlocks blocks(size);
    std::atomic<bool> ok{true};
    detail::run_blocks(blocks.count(), threads, [&](std::size_t b) {
        if (!ok.load(std::memory_order_relaxed)) {
            return;
        }
        blocks.visit_block(b, [&](const std::vector<int> &perm) {
            if (!pred(perm)) {
                ok.store(false, std::memory_order_relaxed);
                return false;
            }
            return ok.load(std::memory_order_relaxed);
        });
    });
    return ok.load();
}

}  // namespace guesswork

#endif
