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

#ifndef SYMPAIR_DISTSEARCH_HPP
#define SYMPAIR_DISTSEARCH_HPP

#include <cstdint>
#include <string>

#include "cyclic.hpp"

namespace sympair {

struct SearchOptions {
    i64 full_enum_cap{10'000'000};   // max messages full_enum may enumerate
    i64 nullspace_cap{1'000'000};    // max projective kernel candidates per support
    int workers{1};
    // analyze() prefers full enumeration below this many messages
    i64 analyze_full_enum_threshold{100'000};
};

enum class Classification { mds, amds, neither };
enum class Method { full_enum, support_search };

const char* name(Classification c);
const char* name(Method m);

struct DistanceReport {
    int d_hamming{0};
    int d_pair{0};
    Classification cls{Classification::neither};
    Codeword witness_hamming;  // a codeword with wH = d_hamming
    Codeword witness_pair;     // a codeword with wp = d_pair
    Method method{Method::support_search};
    std::uint64_t supports_examined{0};
    double elapsed_ms{0.0};
};

// Exhaustive oracle: encodes every nonzero message and takes the minima of
// both weights. Fails with too_large when p^k exceeds the cap.
DistanceReport full_enum(const CodeSpec& spec, const SearchOptions& opts = {});

// Exact d_H by support enumeration: the first support size whose check
// columns are dependent is the minimum distance.
std::pair<int, Codeword> min_hamming_support(const CodeSpec& spec, const SearchOptions& opts = {},
                                             std::uint64_t* supports_examined = nullptr);

// Exact d_p by pruned support enumeration; needs d_H (the smallest support
// size worth scanning). Returns a witnessed minimum.
std::pair<int, Codeword> min_pair_support(const CodeSpec& spec, int d_hamming,
                                          const SearchOptions& opts = {},
                                          std::uint64_t* supports_examined = nullptr);

// MDS iff d_p = n-k+2, AMDS iff d_p = n-k+1, otherwise neither.
// d_p above the Singleton-type bound n-k+2 signals an engine bug.
Classification classify(i64 n, i64 k, int d_pair);

// Runs both d_H algorithms (and insists they agree), then the pair-distance
// engine (full enumeration when the message space is small), and classifies.
DistanceReport analyze(const CodeSpec& spec, const SearchOptions& opts = {});

}  // namespace sympair

#endif
