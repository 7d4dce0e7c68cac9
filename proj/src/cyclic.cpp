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

#include "cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sympair {

FactorSpec FactorSpec::unity(i64 exp, int mult) {
    FactorSpec f;
    f.kind = Kind::unity_root;
    f.unity_exp = exp;
    f.mult = mult;
    return f;
}

FactorSpec FactorSpec::element(i64 a, int mult) {
    FactorSpec f;
    f.kind = Kind::element;
    f.elem = a;
    f.mult = mult;
    return f;
}

FactorSpec FactorSpec::quadratic(std::vector<i64> coeffs, int mult) {
    FactorSpec f;
    f.kind = Kind::quadratic;
    f.quad = std::move(coeffs);
    f.mult = mult;
    return f;
}

Poly factor_poly(const FactorSpec& f, i64 p, i64 omega) {
    switch (f.kind) {
        case FactorSpec::Kind::unity_root: {
            if (omega == 0) fail(Errc::internal, "unresolved root of unity");
            const Fp root = pow(Fp{omega, p}, f.unity_exp);
            return Poly::x_minus(root);
        }
        case FactorSpec::Kind::element:
            return Poly::x_minus(Fp{f.elem, p});
        case FactorSpec::Kind::quadratic:
            return Poly(p, f.quad);
    }
    fail(Errc::internal, "unknown factor kind");
}

namespace {

// Roots of a factor polynomial that lie in F_p (empty for an irreducible
// quadratic), used for the pairwise-coprimality check.
std::vector<i64> roots_in_fp(const Poly& f) {
    std::vector<i64> out;
    for (i64 a = 0; a < f.modulus(); ++a)
        if (eval(f, Fp{a, f.modulus()}).is_zero()) out.push_back(a);
    return out;
}

}  // namespace

CodeSpec::CodeSpec(i64 p, i64 l, i64 omega, std::vector<FactorSpec> factors, Poly g)
    : p_(p), l_(l), n_(l * p), k_(l * p - g.degree()), omega_(omega), factors_(std::move(factors)), g_(std::move(g)) {}

CodeSpec CodeSpec::build(i64 p, i64 l, std::vector<FactorSpec> factors, BuildOptions opts) {
    if (!is_odd_prime(p)) fail(Errc::bad_spec, "p must be an odd prime");
    if (l < 1) fail(Errc::bad_spec, "l must be positive");
    if (std::gcd(l, p) != 1) fail(Errc::bad_spec, "l must be coprime to p");
    const i64 n = l * p;

    bool wants_unity = opts.omega.has_value();
    for (const auto& f : factors)
        if (f.kind == FactorSpec::Kind::unity_root) wants_unity = true;

    i64 omega = 0;
    if (wants_unity) {
        if (opts.omega) {
            omega = *opts.omega % p;
            if (omega < 0) omega += p;
            if (omega == 0) fail(Errc::bad_spec, "omega override must be nonzero");
            if (element_order(Fp{omega, p}) != l)
                fail(Errc::bad_spec, "omega override does not have order l");
        } else {
            omega = primitive_root_of_unity(p, l).v;  // no_such_root when l does not divide p-1
        }
    }

    const Poly xl1 = Poly::x_pow_minus_one(p, l);
    Poly g = Poly::one(p);
    std::vector<std::vector<i64>> factor_root_sets;
    std::vector<std::vector<i64>> irreducible_quads;
    for (auto& f : factors) {
        if (f.mult < 1) fail(Errc::bad_spec, "factor multiplicity must be >= 1");
        if (f.mult > p) fail(Errc::bad_spec, "factor multiplicity exceeds p, so g cannot divide x^n-1");
        if (opts.paper_multiplicity_bound && f.mult > p - 1)
            fail(Errc::multiplicity_bound, "factor multiplicity exceeds the family bound p-1");

        Poly fp = [&] {
            switch (f.kind) {
                case FactorSpec::Kind::unity_root:
                    return factor_poly(f, p, omega);
                case FactorSpec::Kind::element: {
                    f.elem %= p;
                    if (f.elem < 0) f.elem += p;
                    if (f.elem == 0) fail(Errc::bad_spec, "0 is never a root of x^n-1");
                    if (pow(Fp{f.elem, p}, l).v != 1)
                        fail(Errc::bad_spec, "explicit element is not an l-th root of unity");
                    return factor_poly(f, p, omega);
                }
                case FactorSpec::Kind::quadratic: {
                    Poly q(p, f.quad);
                    if (q.degree() != 2 || q.coeffs().back() != 1)
                        fail(Errc::bad_spec, "quadratic factor must be monic of degree 2");
                    f.quad = q.coeffs();
                    if (!divmod(xl1, q).second.is_zero())
                        fail(Errc::bad_spec, "quadratic factor does not divide x^l-1");
                    return q;
                }
            }
            fail(Errc::internal, "unknown factor kind");
        }();

        auto roots = roots_in_fp(fp);
        if (f.kind == FactorSpec::Kind::quadratic && roots.empty()) {
            if (std::find(irreducible_quads.begin(), irreducible_quads.end(), fp.coeffs()) !=
                irreducible_quads.end())
                fail(Errc::bad_spec, "duplicate quadratic factor");
            irreducible_quads.push_back(fp.coeffs());
        }
        for (i64 r : roots)
            for (const auto& seen : factor_root_sets)
                if (std::find(seen.begin(), seen.end(), r) != seen.end())
                    fail(Errc::bad_spec, "factors are not pairwise coprime (shared root " +
                                             std::to_string(r) + ")");
        factor_root_sets.push_back(std::move(roots));

        g = mul(g, pow_expand(fp, f.mult));
    }

    if (g.degree() >= n) fail(Errc::bad_spec, "generator degree leaves no message space (k <= 0)");
    if (!divmod(Poly::x_pow_minus_one(p, n), g).second.is_zero())
        fail(Errc::bad_spec, "generator does not divide x^n-1");

    return CodeSpec(p, l, omega, std::move(factors), std::move(g));
}

Codeword CodeSpec::encode(std::span<const i64> message) const {
    if (static_cast<i64>(message.size()) != k_)
        fail(Errc::invalid_argument, "message length must equal k");
    Codeword out(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        i64 m = message[i] % p_;
        if (m < 0) m += p_;
        if (m == 0) continue;
        for (std::size_t j = 0; j < g_.coeffs().size(); ++j) {
            auto& slot = out[(i + j) % static_cast<std::size_t>(n_)];
            slot = (slot + m * g_.coeffs()[j]) % p_;
        }
    }
    return out;
}

bool CodeSpec::contains(std::span<const i64> word) const {
    if (static_cast<i64>(word.size()) != n_)
        fail(Errc::invalid_argument, "word length must equal n");
    Poly w(p_, std::vector<i64>(word.begin(), word.end()));
    if (w.is_zero()) return true;
    return divmod(w, g_).second.is_zero();
}

MatFp CodeSpec::check_matrix() const {
    const int dg = g_.degree();
    MatFp h = make_mat(dg, static_cast<int>(n_), p_);
    if (dg == 0) return h;  // full space: empty constraint set
    std::vector<i64> cur(static_cast<std::size_t>(dg), 0);
    cur[0] = 1;
    for (i64 j = 0; j < n_; ++j) {
        for (int i = 0; i < dg; ++i) h.at(i, static_cast<int>(j)) = cur[static_cast<std::size_t>(i)];
        // cur <- x*cur mod g (g is monic)
        const i64 top = cur[static_cast<std::size_t>(dg - 1)];
        for (int i = dg - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < dg; ++i) {
                auto& x = cur[static_cast<std::size_t>(i)];
                x = (x - top * g_.coeffs()[static_cast<std::size_t>(i)]) % p_;
                if (x < 0) x += p_;
            }
    }
    return h;
}

Codeword CodeSpec::generator_word() const {
    Codeword w(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < g_.coeffs().size(); ++i) w[i] = g_.coeffs()[i];
    return w;
}

int small_code_min_hamming(const Poly& gen, i64 l, i64 enumeration_cap) {
    const i64 p = gen.modulus();
    const i64 dim = l - gen.degree();
    if (dim <= 0) fail(Errc::invalid_argument, "zero code has no minimum distance");
    i64 count = 1;
    for (i64 i = 0; i < dim; ++i) {
        count *= p;
        if (count > enumeration_cap)
            fail(Errc::too_large, "simple-root code enumeration exceeds the cap");
    }
    // rows[j] = gen * x^j, degree < l, so no wraparound happens
    std::vector<std::vector<i64>> rows(static_cast<std::size_t>(dim),
                                       std::vector<i64>(static_cast<std::size_t>(l), 0));
    for (i64 j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < gen.coeffs().size(); ++i)
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(j) + i] = gen.coeffs()[i];

    std::vector<i64> acc(static_cast<std::size_t>(l), 0);
    int best = static_cast<int>(l) + 1;
    auto weight = [&] {
        int w = 0;
        for (i64 v : acc)
            if (v != 0) ++w;
        return w;
    };
    auto rec = [&](auto&& self, i64 digit, bool nonzero) -> void {
        if (digit == dim) {
            if (nonzero) best = std::min(best, weight());
            return;
        }
        const auto& row = rows[static_cast<std::size_t>(digit)];
        for (i64 v = 0; v < p; ++v) {
            if (v > 0)
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + row[i]) % p;
            self(self, digit + 1, nonzero || v > 0);
        }
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + row[i]) % p;  // p-th add resets
    };
    rec(rec, 0, false);
    return best;
}

int CodeSpec::castagnoli_dh() const {
    // Distinct simple factors keyed by expanded coefficients, with total multiplicity.
    std::map<std::vector<i64>, int> simple;
    for (const auto& f : factors_) simple[factor_poly(f, p_, omega_).coeffs()] += f.mult;

    int best = -1;
    for (i64 t = 0; t < p_; ++t) {
        Poly gen = Poly::one(p_);
        for (const auto& [coeffs, mult] : simple)
            if (mult > t) gen = mul(gen, Poly(p_, coeffs));
        if (gen.degree() == l_) continue;  // zero code: contributes nothing
        const int d = gen.degree() == 0 ? 1 : small_code_min_hamming(gen, l_);
        const int pt = hamming_weight(pow_expand(Poly(p_, {-1, 1}), t));
        const int term = pt * d;
        if (best < 0 || term < best) best = term;
    }
    if (best < 0) fail(Errc::internal, "no nonzero constituent code (k should be >= 1)");
    return best;
}

std::string CodeSpec::describe() const {
    std::ostringstream os;
    os << "p=" << p_ << " l=" << l_ << " n=" << n_ << " k=" << k_ << " deg(g)=" << g_.degree();
    if (omega_ != 0) os << " omega=" << omega_;
    os << "\ng(x) = " << to_string(g_);
    return os.str();
}

}  // namespace sympair
