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

#ifndef SYMPAIR_LINALG_HPP
#define SYMPAIR_LINALG_HPP

#include <cstdint>
#include <vector>

namespace sympair {

using i64 = std::int64_t;

// Row-major dense matrix over F_p; entries kept reduced.
struct MatFp {
    int rows{0};
    int cols{0};
    i64 p{0};
    std::vector<i64> a;

    i64& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

MatFp make_mat(int rows, int cols, i64 p);

int rank(MatFp m);  // by value: eliminates a copy

// Kernel basis in reduced echelon form, free columns in increasing order.
// Deterministic for a given matrix.
std::vector<std::vector<i64>> kernel_basis(MatFp m);

}  // namespace sympair

#endif
