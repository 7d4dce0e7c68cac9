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

#include "linalg.hpp"

#include "fp.hpp"

namespace sympair {

MatFp make_mat(int rows, int cols, i64 p) {
    MatFp m;
    m.rows = rows;
    m.cols = cols;
    m.p = p;
    m.a.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    return m;
}

namespace {

// Reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(MatFp& m) {
    std::vector<int> pivots;
    const i64 p = m.p;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const i64 lead = inv(Fp{m.at(r, c), p}).v;
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * lead % p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const i64 f = m.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < m.cols; ++j) {
                i64& x = m.at(i, j);
                x = (x - f * m.at(r, j)) % p;
                if (x < 0) x += p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(MatFp m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<i64>> kernel_basis(MatFp m) {
    const auto pivots = rref(m);
    const i64 p = m.p;
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<i64>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<i64> v(static_cast<std::size_t>(m.cols), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const i64 x = m.at(static_cast<int>(r), c);
            if (x != 0) v[static_cast<std::size_t>(pivots[r])] = p - x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sympair
