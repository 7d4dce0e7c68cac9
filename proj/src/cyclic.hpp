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

#ifndef SYMPAIR_CYCLIC_HPP
#define SYMPAIR_CYCLIC_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace sympair {

using Codeword = std::vector<i64>;

// One factor of the generator polynomial, with its multiplicity.
//  - unity_root: x - w^u for the code's root of unity w,
//  - element:    x - a for an explicit field element a,
//  - quadratic:  a monic quadratic dividing x^l - 1 (kept unfactored so the
//    whole computation stays inside F_p even when its roots live upstairs).
struct FactorSpec {
    enum class Kind { unity_root, element, quadratic };
    Kind kind{Kind::element};
    i64 unity_exp{0};
    i64 elem{0};
    std::vector<i64> quad;  // low-degree-first, e.g. x^2+1 = {1,0,1}
    int mult{1};

    static FactorSpec unity(i64 exp, int mult);
    static FactorSpec element(i64 a, int mult);
    static FactorSpec quadratic(std::vector<i64> coeffs, int mult);
};

struct BuildOptions {
    std::optional<i64> omega;          // explicit root of unity; validated to have order l
    bool paper_multiplicity_bound{false};  // enforce mult <= p-1 (catalog families)
};

// A repeated-root cyclic code of length n = l*p over F_p, given by its
// factored generator. Immutable after build; reads are safe concurrently.
class CodeSpec {
   public:
    CodeSpec() = default;  // placeholder; build() is the only route to a valid code
    static CodeSpec build(i64 p, i64 l, std::vector<FactorSpec> factors, BuildOptions opts = {});

    i64 p() const { return p_; }
    i64 l() const { return l_; }
    i64 n() const { return n_; }
    i64 k() const { return k_; }
    i64 omega() const { return omega_; }
    const std::vector<FactorSpec>& factors() const { return factors_; }
    const Poly& generator() const { return g_; }

    // Coefficient vector of message(x) * g(x) reduced mod x^n - 1.
    Codeword encode(std::span<const i64> message) const;

    // True iff g divides the word's polynomial.
    bool contains(std::span<const i64> word) const;

    // deg(g) x n matrix H with column j the coefficients of x^j mod g;
    // w is a codeword iff H*w = 0.
    MatFp check_matrix() const;

    // Exact minimum Hamming distance via the repeated-root decomposition:
    // min over t of wH((x-1)^t) * d_H(C_t), where C_t is the simple-root
    // code of length l generated by the distinct factors of multiplicity > t.
    int castagnoli_dh() const;

    Codeword generator_word() const;  // g padded to length n

    std::string describe() const;

   private:
    CodeSpec(i64 p, i64 l, i64 omega, std::vector<FactorSpec> factors, Poly g);
    i64 p_{0}, l_{0}, n_{0}, k_{0}, omega_{0};
    std::vector<FactorSpec> factors_;
    Poly g_;
};

// Expanded polynomial of a single factor (the unity kind needs the resolved omega).
Poly factor_poly(const FactorSpec& f, i64 p, i64 omega);

// Exact d_H of the code <gen> in F_p[x]/(x^l - 1) by full message
// enumeration; cap guards the message count.
int small_code_min_hamming(const Poly& gen, i64 l, i64 enumeration_cap = 1'000'000);

}  // namespace sympair

#endif
