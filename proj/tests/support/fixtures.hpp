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

// Shared test fixtures: map families, random generators and small exact
// oracles written independently of the library algorithms.
#pragma once

#include "monodroma/monodroma.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace monodroma {

// Readable failure messages in GoogleTest.
inline void PrintTo(const BivarPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Monomial& m, std::ostream* os) { *os << "(" << m.ix << "," << m.iy << ")"; }

} // namespace monodroma

namespace fixtures {

using namespace monodroma;

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, long num_lo, long num_hi, long den_hi = 1)
{
    std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, den_hi);
    return make_rational(num(rng), den(rng));
}

inline Rational rand_nonzero(Rng& rng, long bound, long den_hi = 1)
{
    Rational r;
    do
        r = rand_rational(rng, -bound, bound, den_hi);
    while (r == 0);
    return r;
}

inline Rational rand_positive(Rng& rng, long bound, long den_hi = 1) { return rand_rational(rng, 1, bound, den_hi); }

inline Rational rand_nonnegative(Rng& rng, long bound, long den_hi = 1)
{
    return rand_rational(rng, 0, bound, den_hi);
}

/// Random polynomial with up to `terms` monomials of total degree in [min_deg, max_deg].
inline BivarPoly rand_poly(Rng& rng, int max_deg, int terms, int min_deg = 0, long coeff = 9, long den = 4)
{
    std::uniform_int_distribution<int> e(0, max_deg);
    BivarPoly p;
    for (int k = 0; k < terms; ++k) {
        int i = e(rng), j = e(rng);
        if (i + j > max_deg || i + j < min_deg)
            continue;
        p.add_term({static_cast<Exponent>(i), static_cast<Exponent>(j)}, rand_rational(rng, -coeff, coeff, den));
    }
    return p;
}

/// Random homogeneous polynomial of degree k.
inline BivarPoly rand_homogeneous(Rng& rng, int k, long coeff = 9)
{
    BivarPoly p;
    while (p.is_zero())
        for (int i = 0; i <= k; ++i)
            if (rng() % 2)
                p.add_term({static_cast<Exponent>(i), static_cast<Exponent>(k - i)}, rand_rational(rng, -coeff, coeff));
    return p;
}

/// Random quasi-homogeneous polynomial of type t and quasi-degree k (may be zero).
inline BivarPoly rand_quasi(Rng& rng, const QuasiType& t, long long k, long coeff = 9)
{
    BivarPoly p;
    for (long long i = 0; t.t1() * i <= k; ++i) {
        const long long rest = k - t.t1() * i;
        if (t.t2() == 0) {
            if (rest == 0 && rng() % 3)
                p.add_term({static_cast<Exponent>(i), 0}, rand_nonzero(rng, coeff));
            continue;
        }
        if (rest % t.t2() == 0 && rng() % 3)
            p.add_term({static_cast<Exponent>(i), static_cast<Exponent>(rest / t.t2())}, rand_nonzero(rng, coeff));
    }
    return p;
}

inline QuasiType rand_type(Rng& rng, int max_weight = 5)
{
    std::uniform_int_distribution<int> w(1, max_weight);
    for (;;) {
        const int a = w(rng), b = w(rng);
        if (std::gcd(a, b) == 1)
            return {a, b};
    }
}

// ---------------------------------------------------------------------------
// Map families

struct Map {
    BivarPoly f;
    BivarPoly g;
};

/// Odd-shear family: f = sum a_i x^(2i+1) (i = 0..n), g = y + sum b_i x^(2i) (i = 1..m).
inline Map odd_shear(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Map F;
    for (std::size_t i = 0; i < a.size(); ++i)
        F.f.add_term({static_cast<Exponent>(2 * i + 1), 0}, a[i]);
    F.g = BivarPoly::y();
    for (std::size_t i = 1; i < b.size(); ++i)
        F.g.add_term({static_cast<Exponent>(2 * i), 0}, b[i]);
    return F;
}

inline Map odd_shear_unit(int n, int m)
{
    return odd_shear(std::vector<Rational>(n + 1, Rational(1)), std::vector<Rational>(m + 1, Rational(1)));
}

/// Admissible random coefficients: nonnegative, a_0, a_n, b_m positive.
inline Map odd_shear_random(Rng& rng, int n, int m)
{
    std::vector<Rational> a(n + 1), b(m + 1);
    for (auto& c : a)
        c = rand_nonnegative(rng, 5, 3);
    for (auto& c : b)
        c = rand_nonnegative(rng, 5, 3);
    a[0] = rand_positive(rng, 5, 3);
    a[n] = rand_positive(rng, 5, 3);
    b[m] = rand_positive(rng, 5, 3);
    b[0] = 0;
    return odd_shear(a, b);
}

/// Separable-odd family:
/// f = sum_{i<=m1} a_i y^(2i+1) + sum_{i<=m2} b_i x^(2i+1),
/// g = sum_{i<=m3} c_i y^(2i+1) - sum_{i<=m2} d_i x^(2i+1).
struct SeparableCoeffs {
    std::vector<Rational> a, b, c, d;
};

inline Map separable_odd(const SeparableCoeffs& k)
{
    Map F;
    for (std::size_t i = 0; i < k.a.size(); ++i)
        F.f.add_term({0, static_cast<Exponent>(2 * i + 1)}, k.a[i]);
    for (std::size_t i = 0; i < k.b.size(); ++i)
        F.f.add_term({static_cast<Exponent>(2 * i + 1), 0}, k.b[i]);
    for (std::size_t i = 0; i < k.c.size(); ++i)
        F.g.add_term({0, static_cast<Exponent>(2 * i + 1)}, k.c[i]);
    for (std::size_t i = 0; i < k.d.size(); ++i)
        F.g.add_term({static_cast<Exponent>(2 * i + 1), 0}, -k.d[i]);
    return F;
}

inline Map separable_odd_unit(int m1, int m2, int m3)
{
    return separable_odd({std::vector<Rational>(m1 + 1, Rational(1)), std::vector<Rational>(m2 + 1, Rational(1)),
                          std::vector<Rational>(m3 + 1, Rational(1)), std::vector<Rational>(m2 + 1, Rational(1))});
}

/// Admissible random coefficients: all nonnegative, b0*c0 + a0*d0 > 0,
/// a_m1, b_m2, d_m2 > 0.
inline Map separable_odd_random(Rng& rng, int m1, int m2, int m3)
{
    SeparableCoeffs k{std::vector<Rational>(m1 + 1), std::vector<Rational>(m2 + 1), std::vector<Rational>(m3 + 1),
                      std::vector<Rational>(m2 + 1)};
    for (auto* v : {&k.a, &k.b, &k.c, &k.d})
        for (auto& c : *v)
            c = rand_nonnegative(rng, 4, 3);
    k.a[m1] = rand_positive(rng, 4, 3);
    k.b[m2] = rand_positive(rng, 4, 3);
    k.d[m2] = rand_positive(rng, 4, 3);
    if (k.b[0] * k.c[0] + k.a[0] * k.d[0] <= 0) {
        k.b[0] = rand_positive(rng, 4, 3);
        k.c[0] = rand_positive(rng, 4, 3);
    }
    return separable_odd(k);
}

// ---------------------------------------------------------------------------
// Random maps with a provably nonvanishing Jacobian determinant

struct Linear {
    Rational a, b, c, d;
};

inline Linear rand_invertible(Rng& rng)
{
    Linear L;
    do
        L = {rand_rational(rng, -4, 4, 2), rand_rational(rng, -4, 4, 2), rand_rational(rng, -4, 4, 2),
             rand_rational(rng, -4, 4, 2)};
    while (L.a * L.d - L.b * L.c == 0);
    return L;
}

inline Map apply_linear(const Linear& L, const Map& F)
{
    return {L.a * F.f + L.b * F.g, L.c * F.f + L.d * F.g};
}

inline Map compose_linear(const Map& F, const Linear& L)
{
    const BivarPoly x = L.a * BivarPoly::x() + L.b * BivarPoly::y();
    const BivarPoly y = L.c * BivarPoly::x() + L.d * BivarPoly::y();
    return {compose(F.f, x, y), compose(F.g, x, y)};
}

inline BivarPoly rand_univariate(Rng& rng, Var v, int min_deg, int max_deg)
{
    BivarPoly p;
    for (int k = min_deg; k <= max_deg; ++k)
        if (rng() % 2) {
            const auto e = static_cast<Exponent>(k);
            p.add_term(v == Var::x ? Monomial{e, 0} : Monomial{0, e}, rand_rational(rng, -3, 3, 2));
        }
    return p;
}

/// L2 o (x, y + q(x)) o (x + p(y), y) o L1 with deg p, q <= 2: constant determinant.
inline Map rand_triangular(Rng& rng)
{
    const BivarPoly p = rand_univariate(rng, Var::y, 2, 2);
    const BivarPoly q = rand_univariate(rng, Var::x, 2, 2);
    Map F{BivarPoly::x() + p, BivarPoly::y()};
    F = {F.f, F.g + compose(q, F.f, F.g)};
    return apply_linear(rand_invertible(rng), compose_linear(F, rand_invertible(rng)));
}

/// Odd polynomial in one variable with nonnegative coefficients and positive linear term.
inline BivarPoly rand_odd_increasing(Rng& rng, Var v, int max_half)
{
    std::uniform_int_distribution<int> h(0, max_half);
    const int top = h(rng);
    BivarPoly p;
    for (int i = 0; i <= top; ++i) {
        const Rational c = i == 0 ? rand_positive(rng, 4, 2) : rand_nonnegative(rng, 4, 2);
        const auto e = static_cast<Exponent>(2 * i + 1);
        p.add_term(v == Var::x ? Monomial{e, 0} : Monomial{0, e}, c);
    }
    return p;
}

/// L o (A(x), C(y)) with A, C odd and increasing: det = det(L) A'(x) C'(y).
inline Map rand_separable_increasing(Rng& rng, int max_half = 1)
{
    const Map F{rand_odd_increasing(rng, Var::x, max_half), rand_odd_increasing(rng, Var::y, max_half)};
    return apply_linear(rand_invertible(rng), F);
}

/// A mix of maps whose determinant is nonzero everywhere by construction.
inline Map rand_valid_map(Rng& rng)
{
    switch (rng() % 5) {
    case 0: {
        const Linear L = rand_invertible(rng);
        return apply_linear(L, {BivarPoly::x(), BivarPoly::y()});
    }
    case 1:
        return rand_triangular(rng);
    case 2: {
        const int n = 1 + static_cast<int>(rng() % 2);
        return odd_shear_random(rng, n, 1 + static_cast<int>(rng() % n));
    }
    case 3: {
        const int m1 = 1 + static_cast<int>(rng() % 2);
        return separable_odd_random(rng, m1, static_cast<int>(rng() % m1), static_cast<int>(rng() % m1));
    }
    default:
        return rand_separable_increasing(rng);
    }
}

/// Arbitrary random map with F(0,0) = 0 and total degree <= max_deg.
inline Map rand_map(Rng& rng, int max_deg = 3)
{
    Map F;
    while (F.f.is_zero() || F.g.is_zero()) {
        F.f = rand_poly(rng, max_deg, 4, 1, 5, 2);
        F.g = rand_poly(rng, max_deg, 4, 1, 5, 2);
    }
    return F;
}

// ---------------------------------------------------------------------------
// Independent exact oracles

/// Remainder of h modulo v^t1 - lambda*u^t2 (monic in v): rewrite v^t1 -> lambda*u^t2 until deg_v < t1.
inline BivarPoly reduce_mod_binomial(BivarPoly h, long t1, long t2, const Rational& lambda)
{
    for (;;) {
        std::optional<std::pair<Monomial, Rational>> hit;
        for (const auto& [m, c] : h.terms())
            if (m.iy >= static_cast<Exponent>(t1)) {
                hit = std::make_pair(m, c);
                break;
            }
        if (!hit)
            return h;
        const auto [m, c] = *hit;
        h.add_term(m, -c);
        h.add_term({m.ix + static_cast<Exponent>(t2), m.iy - static_cast<Exponent>(t1)}, c * lambda);
    }
}

/// Value of the compactified field at (u, v) computed from the inversion formula:
/// x = u/r, y = v/r, r = u^2 + v^2, scaled by r^D.
inline std::pair<Rational, Rational> inversion_oracle(const PlanarField& X, long D, const Rational& u,
                                                      const Rational& v)
{
    const Rational r = u * u + v * v;
    const Rational x = u / r, y = v / r;
    Rational scale = 1;
    for (long k = 0; k < D; ++k)
        scale *= r;
    const Rational L = eval(X.p, x, y) * scale, W = eval(X.q, x, y) * scale;
    return {(v * v - u * u) * L - 2 * u * v * W, (u * u - v * v) * W - 2 * u * v * L};
}

/// The field ((x^2-y^2) H_y - 2xy H_x, (x^2-y^2) H_x + 2xy H_y) built from a single polynomial H.
inline PlanarField rotated_gradient_field(const BivarPoly& H)
{
    const BivarPoly x = BivarPoly::x(), y = BivarPoly::y();
    const BivarPoly d = x * x - y * y, c = Rational(2) * x * y;
    const BivarPoly Hx = partial(H, Var::x), Hy = partial(H, Var::y);
    return {d * Hy - c * Hx, d * Hx + c * Hy};
}

/// Pareto-minimal points followed by a scan that keeps a point iff it lies strictly
/// below every chord between a point before it and a point after it.
inline std::vector<Monomial> chord_test_chain(const std::vector<Monomial>& pts)
{
    std::set<Monomial> s(pts.begin(), pts.end());
    std::vector<Monomial> pareto;
    for (const auto& p : s) {
        bool dominated = false;
        for (const auto& q : s)
            if (q != p && q.ix <= p.ix && q.iy <= p.iy)
                dominated = true;
        if (!dominated)
            pareto.push_back(p);
    }
    std::sort(pareto.begin(), pareto.end());
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < pareto.size(); ++k) {
        bool vertex = true;
        for (std::size_t i = 0; i < k && vertex; ++i)
            for (std::size_t j = k + 1; j < pareto.size() && vertex; ++j) {
                const auto& a = pareto[i];
                const auto& b = pareto[j];
                const auto& p = pareto[k];
                // p is above or on segment ab iff cross(b - a, p - a) >= 0
                const long long cross = (static_cast<long long>(b.ix) - a.ix) * (static_cast<long long>(p.iy) - a.iy) -
                                        (static_cast<long long>(b.iy) - a.iy) * (static_cast<long long>(p.ix) - a.ix);
                if (cross >= 0)
                    vertex = false;
            }
        if (vertex)
            out.push_back(pareto[k]);
    }
    return out;
}

inline std::set<Monomial> vertex_set(const NewtonDiagram& d)
{
    std::set<Monomial> s;
    for (const auto& v : d.vertices)
        s.insert(v.point);
    return s;
}

inline std::vector<Monomial> support_points(const PlanarField& X)
{
    std::vector<Monomial> out;
    for (const auto& s : support(X))
        out.push_back(s.point);
    return out;
}

/// Coefficient of the monomial with the largest u (resp. v) exponent.
inline Rational top_u_coeff(const BivarPoly& h)
{
    return std::max_element(h.terms().begin(), h.terms().end(),
                            [](const auto& a, const auto& b) { return a.first.ix < b.first.ix; })
        ->second;
}

inline Rational top_v_coeff(const BivarPoly& h)
{
    return std::max_element(h.terms().begin(), h.terms().end(),
                            [](const auto& a, const auto& b) { return a.first.iy < b.first.iy; })
        ->second;
}

/// Properties (a)-(d) checked straight from the diagram data.
struct DiagramProperties {
    bool even = true;
    bool exterior_pair = false;
    bool exterior_sign = false;
    bool beta_positive = true;
    bool hamiltonians_nonnull = true;
    bool all() const { return even && exterior_pair && exterior_sign && beta_positive && hamiltonians_nonnull; }
};

inline DiagramProperties diagram_properties(const NewtonDiagram& d)
{
    DiagramProperties p;
    for (const auto& v : d.vertices)
        if (v.point.ix % 2 || v.point.iy % 2)
            p.even = false;
    const auto& first = d.vertices.front();
    const auto& last = d.vertices.back();
    p.exterior_pair = d.vertices.size() >= 2 && first.point.ix == 0 && last.point.iy == 0;
    p.exterior_sign = p.exterior_pair && first.a * last.b < 0;
    std::vector<const Edge*> bounded;
    for (const auto& e : d.edges)
        if (e.bounded()) {
            bounded.push_back(&e);
            if (e.h.is_zero())
                p.hamiltonians_nonnull = false;
        }
    for (std::size_t k = 0; k + 1 < bounded.size(); ++k) {
        const BivarPoly& hu = bounded[k]->h;
        const BivarPoly& hl = bounded[k + 1]->h;
        if (hu.is_zero() || hl.is_zero() || top_u_coeff(hu) * top_v_coeff(hl) <= 0)
            p.beta_positive = false;
    }
    return p;
}

} // namespace fixtures
