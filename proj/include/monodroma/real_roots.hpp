/*
   Copyright 2026 The monodroma authors

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

/*
 * real_roots.hpp
 * --------------
 * Exact real-root counting and isolation for rational univariate
 * polynomials (Sturm chains on the square-free part), plus the binary-form
 * test deciding whether a quasi-homogeneous h of type (t1, t2) has a factor
 * v^t1 - lambda*u^t2 with real lambda != 0.
 *
 * The factor test rests on one observation: with t coprime, every monomial
 * of h has u-exponent congruent to its minimum a mod t2 and v-exponent
 * congruent to its minimum b mod t1. Hence
 *
 *     h = u^a v^b * sum_m c_m (u^t2)^m (v^t1)^(M-m)
 *
 * and v^t1 - lambda*u^t2 divides h exactly when g(lambda) = sum_m c_m lambda^(M-m)
 * vanishes. The monomial prefix u^a v^b never contributes such a factor
 * because lambda != 0.
 */
#pragma once

#include "monodroma/poly.hpp"
#include "monodroma/uni_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace monodroma {

/// An open interval (lo, hi) holding exactly one root, or the exact root
/// itself when lo == hi.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Open interval with optional infinite ends.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static Interval whole() { return {}; }
    static Interval open(const Rational& lo, const Rational& hi) { return {lo, hi}; }
    static Interval above(const Rational& lo) { return {lo, std::nullopt}; }
    static Interval below(const Rational& hi) { return {std::nullopt, hi}; }
};

namespace detail {

inline std::vector<UniPoly> sturm_chain(const UniPoly& square_free)
{
    std::vector<UniPoly> chain;
    chain.push_back(primitive_part(square_free));
    if (square_free.degree() <= 0)
        return chain;
    chain.push_back(primitive_part(square_free.derivative()));
    while (chain.back().degree() > 0) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero())
            break;
        chain.push_back(primitive_part(-r));
    }
    return chain;
}

template <typename SignFn>
int sign_variations(const std::vector<UniPoly>& chain, SignFn sign_of)
{
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++variations;
        last = s;
    }
    return variations;
}

inline int variations_at(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool upper)
{
    if (!x) {
        return upper ? sign_variations(chain, [](const UniPoly& p) { return p.sign_at_pos_inf(); })
                     : sign_variations(chain, [](const UniPoly& p) { return p.sign_at_neg_inf(); });
    }
    return sign_variations(chain, [&](const UniPoly& p) { return p.sign_at(*x); });
}

/// Distinct roots of chain[0] in the open interval.
inline int count_open(const std::vector<UniPoly>& chain, const Interval& iv)
{
    int n = variations_at(chain, iv.lo, false) - variations_at(chain, iv.hi, true);
    if (iv.hi && chain.front().sign_at(*iv.hi) == 0)
        --n;
    return n;
}

inline Rational cauchy_bound(const UniPoly& p)
{
    Rational m = 0;
    for (const auto& c : p.coeffs())
        m = std::max(m, Rational(abs(c)));
    return 1 + m / abs(p.lead());
}

inline std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            factors.emplace_back(d, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// Rational roots of an integer-primitive polynomial with nonzero constant
/// term, by the rational-root theorem. Gives up (returns nullopt) when the
/// candidate set would be too large to enumerate cheaply.
inline std::optional<std::vector<Rational>> rational_roots(const UniPoly& p)
{
    static const mpz_class trial_limit = mpz_class(1) << 40;
    constexpr std::size_t candidate_limit = 20000;
    if (p.degree() < 1)
        return std::vector<Rational>{};
    mpz_class c0 = p[0].get_num();
    mpz_class cn = p.lead().get_num();
    if (abs(c0) > trial_limit || abs(cn) > trial_limit)
        return std::nullopt;
    auto num = divisors(c0);
    auto den = divisors(cn);
    if (num.size() * den.size() > candidate_limit)
        return std::nullopt;
    std::set<Rational> found;
    for (const auto& a : num) {
        for (const auto& b : den) {
            Rational r(a, b);
            r.canonicalize();
            for (const Rational& cand : {r, Rational(-r)})
                if (p.eval(cand) == 0)
                    found.insert(cand);
        }
    }
    return std::vector<Rational>(found.begin(), found.end());
}

inline void bisect(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi, int count,
                   std::vector<RootInterval>& out)
{
    if (count <= 0)
        return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (chain.front().sign_at(mid) == 0)
        out.push_back({mid, mid});
    bisect(chain, lo, mid, count_open(chain, Interval::open(lo, mid)), out);
    bisect(chain, mid, hi, count_open(chain, Interval::open(mid, hi)), out);
}

inline UniPoly drop_zero_roots(const UniPoly& p)
{
    std::size_t k = 0;
    while (k < p.coeffs().size() && p[k] == 0)
        ++k;
    return UniPoly(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(k), p.coeffs().end()));
}

} // namespace detail

/// Number of distinct real roots of p in the open interval.
inline int sturm_count(const UniPoly& p, const Interval& iv = Interval::whole())
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_count of the zero polynomial");
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi)
        return 0;
    auto chain = detail::sturm_chain(square_free_part(p));
    return detail::count_open(chain, iv);
}

/// Isolating intervals for every distinct nonzero real root of p, ascending.
/// Rational roots are reported exactly (lo == hi).
inline std::vector<RootInterval> nonzero_real_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("nonzero_real_roots of the zero polynomial");
    UniPoly q = detail::drop_zero_roots(square_free_part(primitive_part(p)));
    if (q.degree() < 1)
        return {};
    q = primitive_part(q);

    auto exact_roots = detail::rational_roots(q);
    auto chain = detail::sturm_chain(q);
    const Rational bound = detail::cauchy_bound(q);

    std::vector<RootInterval> out;
    detail::bisect(chain, -bound, Rational(0), detail::count_open(chain, Interval::open(-bound, 0)), out);
    detail::bisect(chain, Rational(0), bound, detail::count_open(chain, Interval::open(0, bound)), out);

    if (exact_roots) {
        for (auto& iv : out) {
            if (iv.exact())
                continue;
            for (const auto& r : *exact_roots)
                if (iv.lo < r && r < iv.hi)
                    iv = {r, r};
        }
    }
    // Tighten to unit width so witnesses say something about magnitude.
    for (auto& iv : out) {
        while (!iv.exact() && iv.hi - iv.lo > 1) {
            const Rational mid = iv.midpoint();
            if (chain.front().sign_at(mid) == 0)
                iv = {mid, mid};
            else if (detail::count_open(chain, Interval::open(iv.lo, mid)) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/// Shrinks an isolating interval of p to width <= max_width by bisection.
inline RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& max_width)
{
    if (iv.exact())
        return iv;
    auto chain = detail::sturm_chain(square_free_part(p));
    while (iv.hi - iv.lo > max_width) {
        Rational mid = iv.midpoint();
        if (chain.front().sign_at(mid) == 0)
            return {mid, mid};
        if (detail::count_open(chain, Interval::open(iv.lo, mid)) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

struct FactorWitness {
    RootInterval lambda;
    int sign = 0;
};

struct QuasiFactorResult {
    bool has_factor = false;
    std::vector<FactorWitness> witnesses;
    /// Dehomogenized binary form g(lambda), and the stripped monomial u^a v^b.
    UniPoly binary_form;
    Exponent u_shift = 0;
    Exponent v_shift = 0;
};

/// Decides whether h has a factor v^t1 - lambda*u^t2, lambda real and nonzero.
/// h is read in the variables (u, v) = (x, y) of BivarPoly.
inline QuasiFactorResult quasi_factor_test(const BivarPoly& h, const QuasiType& t)
{
    if (h.is_zero())
        throw std::invalid_argument("factor test on the zero polynomial");
    if (t.t1() < 1 || t.t2() < 1)
        throw std::invalid_argument("factor test needs a type with both weights positive");
    const long long level = t.degree(h.terms().begin()->first);
    if (!is_quasi_homogeneous(h, t, level))
        throw std::invalid_argument("factor test input is not quasi-homogeneous of the given type");

    QuasiFactorResult res;
    res.u_shift = min_exponent(h, Var::x);
    res.v_shift = min_exponent(h, Var::y);
    const auto t1 = static_cast<Exponent>(t.t1());
    const auto t2 = static_cast<Exponent>(t.t2());

    // m counts powers of u^t2, n = M - m powers of v^t1.
    std::vector<std::pair<Exponent, Exponent>> mn;
    Exponent total = 0;
    for (const auto& [mono, c] : h.terms()) {
        Exponent du = mono.ix - res.u_shift;
        Exponent dv = mono.iy - res.v_shift;
        if (du % t2 != 0 || dv % t1 != 0)
            throw std::logic_error("quasi-homogeneous support off its lattice progression");
        mn.emplace_back(du / t2, dv / t1);
        total = du / t2 + dv / t1;
    }
    std::vector<Rational> g(total + 1);
    auto it = h.terms().begin();
    for (const auto& [m, n] : mn) {
        if (m + n != total)
            throw std::logic_error("quasi-homogeneous support with inconsistent total");
        g[n] = it->second;
        ++it;
    }
    res.binary_form = UniPoly(std::move(g));
    if (res.binary_form.degree() >= 1) {
        for (const auto& r : nonzero_real_roots(res.binary_form)) {
            int s = r.hi > 0 ? 1 : -1;
            res.witnesses.push_back({r, s});
        }
    }
    res.has_factor = !res.witnesses.empty();
    return res;
}

} // namespace monodroma
