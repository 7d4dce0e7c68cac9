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

#include "distsearch.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "pairmetric.hpp"

namespace sympair {

const char* name(Classification c) {
    switch (c) {
        case Classification::mds: return "MDS";
        case Classification::amds: return "AMDS";
        case Classification::neither: return "neither";
    }
    return "?";
}

const char* name(Method m) {
    return m == Method::full_enum ? "full-enum" : "support-search";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

i64 checked_pow(i64 base, i64 exp, i64 cap) {
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Scale a word so that its first nonzero coordinate is 1 (the witness
// normalization used by the deterministic tie-break).
Codeword normalize_leading(const Codeword& w, i64 p) {
    for (i64 v : w) {
        if (v == 0) continue;
        const i64 s = inv(Fp{v, p}).v;
        Codeword out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * s % p;
        return out;
    }
    return w;
}

/*
 * Support enumeration shared by both exact engines.
 *
 * Every nonzero codeword has a cyclic shift whose support contains
 * position 0, and shifting changes neither weight, so it is enough to scan
 * supports S = {0} u T with T a (w-1)-subset of {1..n-1}. Supports are
 * normalized this way instead of full necklace deduplication; the
 * constant-factor waste is irrelevant at these lengths.
 *
 * Workers own leading elements of T round-robin and enumerate their share
 * in lexicographic order, so the per-level result set does not depend on
 * scheduling. visit() returning false prunes nothing; enumeration always
 * covers the whole level.
 */
template <class Visit>
void scan_level(int n, int w, int worker, int workers, Visit&& visit) {
    std::vector<int> s(static_cast<std::size_t>(w));
    s[0] = 0;
    if (w == 1) {
        if (worker == 0) visit(s);
        return;
    }
    const int tail = w - 1;
    for (int lead = 1; lead + tail - 1 <= n - 1; ++lead) {
        if ((lead - 1) % workers != worker) continue;
        s[1] = lead;
        for (int i = 2; i <= tail; ++i) s[static_cast<std::size_t>(i)] = lead + i - 1;
        while (true) {
            visit(s);
            int i = tail;
            while (i >= 2 && s[static_cast<std::size_t>(i)] == n - 1 - (tail - i)) --i;
            if (i < 2) break;
            ++s[static_cast<std::size_t>(i)];
            for (int j = i + 1; j <= tail; ++j)
                s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::uint64_t mask_of(const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int i : s) m |= std::uint64_t{1} << i;
    return m;
}

// Columns of the check matrix restricted to a support.
MatFp restrict_columns(const MatFp& h, const std::vector<int>& s) {
    MatFp m = make_mat(h.rows, static_cast<int>(s.size()), h.p);
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < h.rows; ++r) m.at(r, c) = h.at(r, s[static_cast<std::size_t>(c)]);
    return m;
}

// First kernel element with every coordinate nonzero, in the deterministic
// projective order (leading coefficient 1, remaining coefficients odometer).
// Empty result when none exists.
std::vector<i64> all_nonzero_kernel_vector(const std::vector<std::vector<i64>>& basis, i64 p,
                                           i64 cap) {
    if (basis.empty()) return {};
    const std::size_t dim = basis.size();
    const std::size_t w = basis[0].size();
    const i64 candidates = (checked_pow(p, static_cast<i64>(dim), cap * p) - 1) / (p - 1);
    if (candidates > cap)
        fail(Errc::too_large, "projective kernel enumeration exceeds the cap; use full enumeration");
    std::vector<i64> coeff(dim, 0), vec(w, 0);
    for (std::size_t lead = 0; lead < dim; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        while (true) {
            std::fill(vec.begin(), vec.end(), 0);
            for (std::size_t t = lead; t < dim; ++t) {
                if (coeff[t] == 0) continue;
                for (std::size_t i = 0; i < w; ++i) vec[i] = (vec[i] + coeff[t] * basis[t][i]) % p;
            }
            if (std::all_of(vec.begin(), vec.end(), [](i64 v) { return v != 0; })) return vec;
            std::size_t d = dim;
            while (d > lead + 1 && coeff[d - 1] == p - 1) coeff[--d] = 0;
            if (d == lead + 1) break;
            ++coeff[d - 1];
        }
    }
    return {};
}

Codeword expand_to_word(const std::vector<int>& support, const std::vector<i64>& values, i64 n) {
    Codeword w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < support.size(); ++i)
        w[static_cast<std::size_t>(support[i])] = values[i];
    return w;
}

struct Candidate {
    bool found{false};
    int value{0};  // pair weight (pair search) / unused (hamming search)
    std::vector<int> support;
    std::vector<i64> values;

    bool better_than(const Candidate& o) const {
        if (!o.found) return found;
        if (!found) return false;
        if (value != o.value) return value < o.value;
        if (support != o.support) return support < o.support;
        return values < o.values;
    }
};

}  // namespace

std::pair<int, Codeword> min_hamming_support(const CodeSpec& spec, const SearchOptions& opts,
                                             std::uint64_t* supports_examined) {
    const int n = static_cast<int>(spec.n());
    if (n > 64) fail(Errc::too_large, "support search requires n <= 64");
    const MatFp h = spec.check_matrix();
    const int workers = std::max(1, opts.workers);
    std::uint64_t examined_total = 0;

    for (int w = 1; w <= spec.generator().degree() + 1; ++w) {
        std::vector<Candidate> results(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

        auto run = [&](int wid) {
            try {
                Candidate& best = results[static_cast<std::size_t>(wid)];
                scan_level(n, w, wid, workers, [&](const std::vector<int>& s) {
                    ++counts[static_cast<std::size_t>(wid)];
                    // lexicographic enumeration: later supports cannot beat the first hit
                    if (best.found) return;
                    auto basis = kernel_basis(restrict_columns(h, s));
                    if (basis.empty()) return;
                    best.found = true;
                    best.support = s;
                    best.values = basis.front();
                });
            } catch (...) {
                errors[static_cast<std::size_t>(wid)] = std::current_exception();
            }
        };

        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int wid = 0; wid < workers; ++wid) pool.emplace_back(run, wid);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto c : counts) examined_total += c;

        const Candidate* best = nullptr;
        for (const auto& c : results)
            if (c.better_than(best ? *best : Candidate{})) best = &c;
        if (best && best->found) {
            if (supports_examined) *supports_examined += examined_total;
            Codeword wit =
                normalize_leading(expand_to_word(best->support, best->values, spec.n()), spec.p());
            return {w, std::move(wit)};
        }
    }
    fail(Errc::internal, "no dependency among deg(g)+1 columns");
}

std::pair<int, Codeword> min_pair_support(const CodeSpec& spec, int d_hamming,
                                          const SearchOptions& opts,
                                          std::uint64_t* supports_examined) {
    const int n = static_cast<int>(spec.n());
    if (n > 64) fail(Errc::too_large, "support search requires n <= 64");
    const MatFp h = spec.check_matrix();
    const int workers = std::max(1, opts.workers);
    const i64 p = spec.p();

    // A genuine witness seeds the bound: the generator itself as a codeword.
    Codeword best_word = normalize_leading(spec.generator_word(), p);
    int best = pair_weight(best_word);
    std::uint64_t examined_total = 0;

    /*
     * Level w scans all supports of size w containing 0 whose support pair
     * weight improves on the bound frozen at the start of the level.
     * Freezing keeps the candidate set (hence the tie-broken witness)
     * independent of scheduling; a worker may additionally prune with its
     * own discoveries because it enumerates in lexicographic order. Any
     * codeword with wp < best has wH <= wp - 1 <= best - 2 and a shift with
     * 0 in its support, so the level loop cannot stop before finding it.
     */
    for (int w = d_hamming; w <= best - 2; ++w) {
        const int frozen = best;
        std::vector<Candidate> results(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

        auto run = [&](int wid) {
            try {
                Candidate& mine = results[static_cast<std::size_t>(wid)];
                scan_level(n, w, wid, workers, [&](const std::vector<int>& s) {
                    ++counts[static_cast<std::size_t>(wid)];
                    const int spw = mask_pair_weight(mask_of(s), n);
                    const int bound = mine.found ? std::min(frozen, mine.value) : frozen;
                    if (spw >= bound) return;
                    auto basis = kernel_basis(restrict_columns(h, s));
                    auto vec = all_nonzero_kernel_vector(basis, p, opts.nullspace_cap);
                    if (vec.empty()) return;
                    Candidate c;
                    c.found = true;
                    c.value = spw;
                    c.support = s;
                    c.values = std::move(vec);
                    if (c.better_than(mine)) mine = std::move(c);
                });
            } catch (...) {
                errors[static_cast<std::size_t>(wid)] = std::current_exception();
            }
        };

        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int wid = 0; wid < workers; ++wid) pool.emplace_back(run, wid);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto c : counts) examined_total += c;

        const Candidate* level_best = nullptr;
        for (const auto& c : results)
            if (c.found && (!level_best || c.better_than(*level_best))) level_best = &c;
        if (level_best) {  // recorded candidates always beat the frozen bound
            best = level_best->value;
            best_word = normalize_leading(
                expand_to_word(level_best->support, level_best->values, spec.n()), p);
        }
    }
    if (supports_examined) *supports_examined += examined_total;
    return {best, std::move(best_word)};
}

DistanceReport full_enum(const CodeSpec& spec, const SearchOptions& opts) {
    const auto t0 = Clock::now();
    const i64 p = spec.p();
    const i64 k = spec.k();
    const i64 n = spec.n();
    const i64 messages = checked_pow(p, k, opts.full_enum_cap);
    if (messages > opts.full_enum_cap)
        fail(Errc::too_large, "p^k exceeds the full enumeration cap; use the support search");

    std::vector<Codeword> rows(static_cast<std::size_t>(k));
    for (i64 j = 0; j < k; ++j) {
        std::vector<i64> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(j)] = 1;
        rows[static_cast<std::size_t>(j)] = spec.encode(e);
    }

    Codeword acc(static_cast<std::size_t>(n), 0);
    DistanceReport rep;
    rep.method = Method::full_enum;
    rep.d_hamming = static_cast<int>(n) + 1;
    rep.d_pair = static_cast<int>(n) + 1;

    auto leaf = [&] {
        ++rep.supports_examined;
        const int wh = hamming_weight(std::span<const i64>(acc));
        if (wh == 0) return;
        const int wp = pair_weight(acc);
        if (wh < rep.d_hamming || (wh == rep.d_hamming && acc < rep.witness_hamming)) {
            rep.d_hamming = wh;
            rep.witness_hamming = acc;
        }
        if (wp < rep.d_pair || (wp == rep.d_pair && acc < rep.witness_pair)) {
            rep.d_pair = wp;
            rep.witness_pair = acc;
        }
    };
    auto rec = [&](auto&& self, i64 digit) -> void {
        if (digit == k) {
            leaf();
            return;
        }
        const auto& row = rows[static_cast<std::size_t>(digit)];
        for (i64 v = 0; v < p; ++v) {
            if (v > 0)
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + row[i]) % p;
            self(self, digit + 1);
        }
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + row[i]) % p;
    };
    rec(rec, 0);

    rep.cls = classify(n, k, rep.d_pair);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Classification classify(i64 n, i64 k, int d_pair) {
    if (k < 1 || k > n) fail(Errc::invalid_argument, "dimension must satisfy 1 <= k <= n");
    if (d_pair < 2 || d_pair > n) fail(Errc::invalid_argument, "pair distance must be in [2, n]");
    const i64 bound = n - k + 2;
    if (d_pair > bound)
        fail(Errc::internal, "pair distance exceeds the Singleton-type bound n-k+2: engine bug");
    if (d_pair == bound) return Classification::mds;
    if (d_pair == bound - 1) return Classification::amds;
    return Classification::neither;
}

DistanceReport analyze(const CodeSpec& spec, const SearchOptions& opts) {
    const auto t0 = Clock::now();
    const int dh_castagnoli = spec.castagnoli_dh();

    std::uint64_t examined = 0;
    auto [dh, wit_h] = min_hamming_support(spec, opts, &examined);
    if (dh != dh_castagnoli)
        fail(Errc::internal, "minimum Hamming distance engines disagree: decomposition says " +
                                 std::to_string(dh_castagnoli) + ", support search says " +
                                 std::to_string(dh));

    DistanceReport rep;
    const i64 messages = checked_pow(spec.p(), spec.k(), opts.analyze_full_enum_threshold);
    if (messages <= opts.analyze_full_enum_threshold) {
        rep = full_enum(spec, opts);
        if (rep.d_hamming != dh)
            fail(Errc::internal, "full enumeration disagrees with the Hamming engines");
    } else {
        rep.method = Method::support_search;
        auto [dp, wit_p] = min_pair_support(spec, dh, opts, &examined);
        rep.d_hamming = dh;
        rep.d_pair = dp;
        rep.witness_hamming = std::move(wit_h);
        rep.witness_pair = std::move(wit_p);
        rep.supports_examined = examined;
        rep.cls = classify(spec.n(), spec.k(), dp);
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace sympair
