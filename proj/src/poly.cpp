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

#include "poly.hpp"

#include <sstream>

namespace sympair {

namespace {

void check_same_field(const Poly& f, const Poly& g) {
    if (f.modulus() != g.modulus()) fail(Errc::modulus_mismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(i64 p) : p_(p) {
    if (!is_odd_prime(p)) fail(Errc::invalid_argument, "modulus must be an odd prime");
}

Poly::Poly(i64 p, std::vector<i64> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_odd_prime(p)) fail(Errc::invalid_argument, "modulus must be an odd prime");
    for (auto& x : c_) {
        x %= p_;
        if (x < 0) x += p_;
    }
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::one(i64 p) { return Poly(p, {1}); }

Poly Poly::x_minus(Fp a) { return Poly(a.p, {-a.v, 1}); }

Poly Poly::x_pow_minus_one(i64 p, i64 n) {
    std::vector<i64> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return Poly(p, std::move(c));
}

Poly add(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const i64 p = f.modulus();
    std::vector<i64> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f.coeff(i) + g.coeff(i)) % p;
    return Poly(p, std::move(c));
}

Poly sub(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const i64 p = f.modulus();
    std::vector<i64> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f.coeff(i) - g.coeff(i)) % p;
    return Poly(p, std::move(c));
}

Poly mul(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const i64 p = f.modulus();
    if (f.is_zero() || g.is_zero()) return Poly(p);
    std::vector<i64> c(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const i64 fi = f.coeffs()[i];
        if (fi == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] = (c[i + j] + fi * g.coeffs()[j]) % p;
    }
    return Poly(p, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (g.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    const i64 p = f.modulus();
    const int dg = g.degree();
    std::vector<i64> rem = f.coeffs();
    if (f.degree() < dg) return {Poly(p), Poly(p, std::move(rem))};
    std::vector<i64> quo(f.coeffs().size() - static_cast<std::size_t>(dg), 0);
    const i64 lead_inv = inv(Fp{g.coeffs().back(), p}).v;
    for (int d = f.degree() - dg; d >= 0; --d) {
        const i64 top = rem[static_cast<std::size_t>(d + dg)];
        if (top == 0) continue;
        const i64 q = top * lead_inv % p;
        quo[static_cast<std::size_t>(d)] = q;
        for (int i = 0; i <= dg; ++i) {
            auto& r = rem[static_cast<std::size_t>(d + i)];
            r = (r - q * g.coeffs()[static_cast<std::size_t>(i)]) % p;
            if (r < 0) r += p;
        }
    }
    return {Poly(p, std::move(quo)), Poly(p, std::move(rem))};
}

Poly pow_expand(const Poly& base, i64 e) {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    Poly r = Poly::one(base.modulus());
    for (i64 i = 0; i < e; ++i) r = mul(r, base);
    return r;
}

Poly formal_derivative(const Poly& f, i64 k) {
    if (k < 0) fail(Errc::invalid_argument, "negative derivative order");
    Poly r = f;
    const i64 p = f.modulus();
    for (i64 step = 0; step < k; ++step) {
        std::vector<i64> c;
        if (r.degree() >= 1) {
            c.resize(static_cast<std::size_t>(r.degree()), 0);
            for (int i = 1; i <= r.degree(); ++i)
                c[static_cast<std::size_t>(i - 1)] = i % p * r.coeffs()[static_cast<std::size_t>(i)] % p;
        }
        r = Poly(p, std::move(c));
    }
    return r;
}

Fp eval(const Poly& f, Fp a) {
    if (f.modulus() != a.p) fail(Errc::modulus_mismatch, "evaluation point in a different field");
    Fp r{0, a.p};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * a + Fp{*it, a.p};
    return r;
}

int hamming_weight(const Poly& f) {
    int w = 0;
    for (i64 x : f.coeffs())
        if (x != 0) ++w;
    return w;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0)
            os << f.coeffs()[i];
        else if (i == 1)
            os << f.coeffs()[i] << "*x";
        else
            os << f.coeffs()[i] << "*x^" << i;
    }
    return os.str();
}

}  // namespace sympair
