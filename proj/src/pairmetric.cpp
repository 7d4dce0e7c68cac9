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

#include "pairmetric.hpp"

#include <bit>

namespace sympair {

namespace {

void check_length(std::size_t n) {
    if (n < 2) fail(Errc::invalid_argument, "pair metrics need word length >= 2");
}

}  // namespace

std::vector<std::pair<i64, i64>> pair_read(std::span<const i64> word) {
    check_length(word.size());
    const std::size_t n = word.size();
    std::vector<std::pair<i64, i64>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = {word[i], word[(i + 1) % n]};
    return out;
}

int pair_weight(std::span<const i64> word) {
    check_length(word.size());
    const std::size_t n = word.size();
    int w = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (word[i] != 0 || word[(i + 1) % n] != 0) ++w;
    return w;
}

int pair_distance(std::span<const i64> x, std::span<const i64> y) {
    if (x.size() != y.size()) fail(Errc::invalid_argument, "pair distance of unequal lengths");
    check_length(x.size());
    const std::size_t n = x.size();
    int d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (x[i] != y[i] || x[j] != y[j]) ++d;
    }
    return d;
}

int hamming_weight(std::span<const i64> word) {
    int w = 0;
    for (i64 v : word)
        if (v != 0) ++w;
    return w;
}

SupportSet support_of(std::span<const i64> word) {
    SupportSet s;
    s.n = static_cast<int>(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) s.positions.push_back(static_cast<int>(i));
    return s;
}

int support_pair_weight(const SupportSet& s) {
    if (s.positions.empty()) return 0;
    if (s.n < 2) fail(Errc::invalid_argument, "pair metrics need word length >= 2");
    if (s.n <= 64) return mask_pair_weight(support_mask(s), s.n);
    std::vector<char> hit(static_cast<std::size_t>(s.n), 0);
    for (int i : s.positions) {
        hit[static_cast<std::size_t>(i)] = 1;
        hit[static_cast<std::size_t>((i + s.n - 1) % s.n)] = 1;
    }
    int w = 0;
    for (char h : hit) w += h;
    return w;
}

std::uint64_t support_mask(const SupportSet& s) {
    if (s.n > 64) fail(Errc::too_large, "support masks require n <= 64");
    std::uint64_t m = 0;
    for (int i : s.positions) {
        if (i < 0 || i >= s.n) fail(Errc::invalid_argument, "support position out of range");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

int mask_pair_weight(std::uint64_t mask, int n) {
    // S-1 (cyclic): bit i is set iff bit i+1 mod n is set in S.
    const std::uint64_t shifted = (mask >> 1) | ((mask & 1) << (n - 1));
    return std::popcount(mask | shifted);
}

}  // namespace sympair
