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

#ifndef SYMPAIR_CATALOG_HPP
#define SYMPAIR_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "distsearch.hpp"

namespace sympair {

enum class Family { thm31, cor36, c3p, amds_lp7, amds_4p8, legacy };

const char* name(Family f);

// What a published row claims about its code. Rows without expectations are
// informational; `not_mds` rows assert only that the code misses the
// Singleton-type bound.
struct Expected {
    std::optional<int> redundancy;  // n-k
    std::optional<int> d_hamming;
    std::optional<int> d_pair;
    enum class ClsKind { unspecified, exact, not_mds } cls_kind{ClsKind::unspecified};
    Classification cls{Classification::neither};

    bool any() const {
        return redundancy || d_hamming || d_pair || cls_kind != ClsKind::unspecified;
    }
};

struct FamilyInstance {
    std::string id;
    Family family{Family::c3p};
    std::string table;   // thm31 | cor36 | mds3p | amds3p | amds-lp7 | amds-4p8 | legacy | negatives | info
    std::string params;
    std::string paper_row;  // verbatim coordinates of the published row this reproduces
    CodeSpec spec;
    Expected expected;
    Codeword pinned_witness;  // empty when the row pins no codeword
    int pinned_witness_pair_weight{0};
};

// Generators (x-1)^r1 (x+1)^r2 (x-w)^r3 with r1+r2+r3 = 4, expected MDS with
// d_p = 6. When l is odd the (x+1) factor only lives in x^{2l}-1, so those
// instances are built at length 2lp; `odd_l_omega_order` selects the order
// (l or 2l) given to w, the two published readings of that table row.
FamilyInstance theorem31(i64 p, i64 l, int r1, int r2, int r3, i64 odd_l_omega_order = 0);

// Two-root generators (x-w^t1)^r1 (x-w^t2)^r2 with w a primitive element,
// lcm(ord(w^t1), ord(w^t2)) = l and gcd(t1-t2, l) = 1; expected MDS with
// d_p = 5 (degree 3) or 6 (degree 4).
FamilyInstance corollary36(i64 p, i64 l, i64 t1, i64 t2, int r1, int r2,
                           std::optional<i64> omega = std::nullopt);

// Same shape with the gcd condition knowingly violated; expected non-MDS.
FamilyInstance corollary36_negative(i64 p, i64 t1, i64 t2, int r1, int r2, i64 omega);

// Length-3p family (x-1)^r1 (x-w)^r2 (x-w^2)^r3, w of order 3; expectations
// attached from the published tables (matched up to exponent permutation)
// or from the distance ladder.
FamilyInstance c3p(i64 p, int r1, int r2, int r3);

// (x-1)^4 (x-w)(x-w^2) with w of order l, l odd >= 3: expected AMDS (lp,7),
// with the pinned witness x^{2p-1} - x^p - x^{p-1} + 1 of pair weight 7.
FamilyInstance amds_lp7(i64 p, i64 l);

// (x-1)^3 (x+1)^2 (x^2+1) at length 4p: expected AMDS (4p,8) for p >= 5;
// p = 3 is built without an attached expectation.
FamilyInstance amds_4p8(i64 p);

// The code whose codewords are c(u*x): each root a of g maps to a/u and
// coordinate j is scaled by u^j, so supports and both weights are
// preserved. Requires u^l = 1 (the image is not cyclic otherwise).
CodeSpec equivalence_scale(const CodeSpec& spec, Fp u);

// Sufficient MDS conditions of the length-3p theorem, on the normalized
// (descending) exponent triple.
bool mds3p_condition(int r1, int r2, int r3);

// Every published row the workbench re-verifies, with verbatim coordinates
// and per-row smallest admissible prime.
const std::vector<FamilyInstance>& registry();

struct RowResult {
    DistanceReport report;
    bool pass{true};
    std::string status;  // PASS | FAIL | INFO
    std::string notes;
};

RowResult verify_row(const FamilyInstance& row, const SearchOptions& opts = {});

}  // namespace sympair

#endif
