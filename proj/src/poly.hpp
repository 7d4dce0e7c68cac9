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

#ifndef SYMPAIR_POLY_HPP
#define SYMPAIR_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace sympair {

// Dense univariate polynomial over F_p, low-degree-first coefficients
// (coeffs[i] is the coefficient of x^i, matching the codeword index
// convention). Canonical form: no trailing zero coefficient; the zero
// polynomial has an empty coefficient vector and degree -1.
class Poly {
   public:
    Poly() = default;  // placeholder state (no field); usable only for containers
    explicit Poly(i64 p);
    Poly(i64 p, std::vector<i64> coeffs);  // coefficients reduced mod p, then trimmed

    static Poly one(i64 p);
    static Poly x_minus(Fp a);           // x - a
    static Poly x_pow_minus_one(i64 p, i64 n);  // x^n - 1

    i64 modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<i64>& coeffs() const { return c_; }
    i64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

   private:
    i64 p_{0};
    std::vector<i64> c_;
    void trim();
};

Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);  // schoolbook; degrees are small here

// Quotient and remainder with f = q*g + r, deg r < deg g. g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

Poly pow_expand(const Poly& base, i64 e);  // base^e, e >= 0

Poly formal_derivative(const Poly& f, i64 k = 1);  // k-th derivative

Fp eval(const Poly& f, Fp a);  // Horner

int hamming_weight(const Poly& f);  // count of nonzero coefficients

// "c0 + c1*x + ..." rendering for reports; zero polynomial prints "0".
std::string to_string(const Poly& f);

}  // namespace sympair

#endif
