/*
   Copyright 2026 The sympair Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SYMPAIR_PAIRMETRIC_HPP
#define SYMPAIR_PAIRMETRIC_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sympair {

using i64 = std::int64_t;

// The cyclic pair read of a word: [(x_0,x_1), (x_1,x_2), ..., (x_{n-1},x_0)].
// Words must have length >= 2; a length-1 pair read is degenerate.
std::vector<std::pair<i64, i64>> pair_read(std::span<const i64> word);

// Number of indices i with (x_i, x_{i+1}) != (0,0), wrapping cyclically.
// Depends on the word only through its support: equals |S u (S-1)|.
int pair_weight(std::span<const i64> word);

// Number of positions where the pair reads of x and y differ.
int pair_distance(std::span<const i64> x, std::span<const i64> y);

int hamming_weight(std::span<const i64> word);

// Sorted set of nonzero coordinates of a length-n word.
struct SupportSet {
    int n{0};
    std::vector<int> positions;
};

SupportSet support_of(std::span<const i64> word);

// |S u (S-1)| with indices mod n; 0 for an empty support.
int support_pair_weight(const SupportSet& s);

// Mask kernel used by the search engines (requires n <= 64): the support as
// a bit set, and its pair weight in a handful of instructions.
std::uint64_t support_mask(const SupportSet& s);
int mask_pair_weight(std::uint64_t mask, int n);

}  // namespace sympair

#endif
