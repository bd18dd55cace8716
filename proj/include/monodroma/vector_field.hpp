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
 * vector_field.hpp
 * ----------------
 * Planar polynomial fields x' = P, y' = Q.
 *
 * Support points are read from yP and xQ rather than from P and Q, so a
 * monomial x^i y^j of P sits at (i, j+1) and one of Q at (i+1, j). With that
 * shift a quasi-homogeneous field of type t and degree k has its whole
 * support on the line t1*i + t2*j = k + t1 + t2.
 */
#pragma once

#include "monodroma/poly.hpp"
#include "monodroma/real_roots.hpp"
#include "monodroma/uni_poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monodroma {

struct PlanarField {
    BivarPoly p;
    BivarPoly q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }

    friend PlanarField operator+(const PlanarField& a, const PlanarField& b) { return {a.p + b.p, a.q + b.q}; }
    friend PlanarField operator-(const PlanarField& a, const PlanarField& b) { return {a.p - b.p, a.q - b.q}; }
    friend bool operator==(const PlanarField&, const PlanarField&) = default;
};

/// (Lambda, Omega) = (-f f_y - g g_y, f f_x + g g_x), the Hamiltonian field
/// of H = (f^2 + g^2)/2.
inline PlanarField hamiltonian_field(const BivarPoly& f, const BivarPoly& g)
{
    BivarPoly lambda = -(f * partial(f, Var::y) + g * partial(g, Var::y));
    BivarPoly omega = f * partial(f, Var::x) + g * partial(g, Var::x);
    return {std::move(lambda), std::move(omega)};
}

struct SupportPoint {
    Monomial point;
    Rational a; // coefficient in yP
    Rational b; // coefficient in xQ

    friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

/// Lattice points with their vector coefficients (a, b), sorted by (i, j).
inline std::vector<SupportPoint> support(const PlanarField& X)
{
    if (X.is_zero())
        throw std::invalid_argument("support of the zero field");
    std::map<Monomial, std::pair<Rational, Rational>> pts;
    for (const auto& [m, c] : X.p.terms())
        pts[{m.ix, checked_add(m.iy, 1)}].first = c;
    for (const auto& [m, c] : X.q.terms())
        pts[{checked_add(m.ix, 1), m.iy}].second = c;
    std::vector<SupportPoint> out;
    out.reserve(pts.size());
    for (const auto& [m, ab] : pts)
        out.push_back({m, ab.first, ab.second});
    return out;
}

struct FieldComponent {
    long long degree;
    PlanarField field;

    friend bool operator==(const FieldComponent&, const FieldComponent&) = default;
};

/// X = sum_k X_k with X_k = (P_{k+t1}, Q_{k+t2}); ascending k, which may be negative.
inline std::vector<FieldComponent> quasi_field_components(const PlanarField& X, const QuasiType& t)
{
    std::map<long long, PlanarField> bins;
    for (const auto& [m, c] : X.p.terms())
        bins[t.degree(m) - t.t1()].p.add_term(m, c);
    for (const auto& [m, c] : X.q.terms())
        bins[t.degree(m) - t.t2()].q.add_term(m, c);
    std::vector<FieldComponent> out;
    for (auto& [k, f] : bins)
        out.push_back({k, std::move(f)});
    return out;
}

struct SplitField {
    long long degree = 0;
    BivarPoly h;
    BivarPoly mu;
    QuasiType type{1, 1};

    /// X_h + mu * D0 with X_h = (-h_y, h_x) and D0 = (t1 x, t2 y).
    PlanarField reconstruct() const
    {
        BivarPoly t1x = BivarPoly::monomial(1, 0, Rational(type.t1()));
        BivarPoly t2y = BivarPoly::monomial(0, 1, Rational(type.t2()));
        return {-partial(h, Var::y) + mu * t1x, partial(h, Var::x) + mu * t2y};
    }
};

inline bool is_quasi_homogeneous_field(const PlanarField& X, long long k, const QuasiType& t)
{
    return is_quasi_homogeneous(X.p, t, k + t.t1()) && is_quasi_homogeneous(X.q, t, k + t.t2());
}

/// h = (t1 x Q - t2 y P)/(k+|t|), mu = div(Xk)/(k+|t|).
inline SplitField split(const PlanarField& Xk, long long k, const QuasiType& t)
{
    const long long denom = k + t.norm();
    if (denom == 0)
        throw std::domain_error("splitting undefined for k + |t| = 0");
    if (!is_quasi_homogeneous_field(Xk, k, t))
        throw std::invalid_argument("field is not quasi-homogeneous of the stated type and degree");
    const Rational inv = Rational(1) / Rational(static_cast<long>(denom));
    SplitField s;
    s.degree = k;
    s.type = t;
    s.h = (BivarPoly::monomial(1, 0, Rational(t.t1())) * Xk.q - BivarPoly::monomial(0, 1, Rational(t.t2())) * Xk.p) * inv;
    s.mu = (partial(Xk.p, Var::x) + partial(Xk.q, Var::y)) * inv;
    return s;
}

/// Top total-degree homogeneous parts of P and Q, taken separately. A zero
/// component yields a zero form.
inline std::pair<BivarPoly, BivarPoly> leading_forms(const PlanarField& X)
{
    if (X.is_zero())
        throw std::invalid_argument("leading forms of the zero field");
    return {homogeneous_part(X.p, total_degree(X.p)), homogeneous_part(X.q, total_degree(X.q))};
}

/// A real linear factor shared by two binary forms. slope == nullopt stands
/// for the factor x; otherwise the factor is y - lambda*x with lambda in the
/// (possibly exact) interval.
struct LinearFactor {
    std::optional<RootInterval> slope;
    unsigned mult_a = 0;
    unsigned mult_b = 0;
};

namespace detail {

/// A(1, lambda) for a homogeneous A of degree d.
inline UniPoly dehomogenize(const BivarPoly& A)
{
    std::vector<Rational> c(degrees(A).total + 1);
    for (const auto& [m, coef] : A.terms())
        c[m.iy] = coef;
    return UniPoly(std::move(c));
}

/// Multiplicity of the root isolated by iv (for the square-free s) in p.
inline unsigned root_multiplicity(UniPoly p, const UniPoly& s, const RootInterval& iv)
{
    unsigned mult = 0;
    while (!p.is_zero()) {
        bool vanishes;
        if (iv.exact()) {
            vanishes = p.eval(iv.lo) == 0;
        } else {
            UniPoly g = gcd(s, p);
            vanishes = g.degree() >= 1 && sturm_count(g, Interval::open(iv.lo, iv.hi)) > 0;
        }
        if (!vanishes)
            break;
        ++mult;
        p = p.derivative();
    }
    return mult;
}

} // namespace detail

/// Every real projective direction dividing both homogeneous forms, with its
/// multiplicity in each. Exact: axis check plus gcd of the dehomogenized forms.
inline std::vector<LinearFactor> common_real_linear_factors(const BivarPoly& A, const BivarPoly& B)
{
    if (A.is_zero() || B.is_zero())
        throw std::invalid_argument("common linear factors need nonzero forms");
    if (!is_homogeneous(A) || !is_homogeneous(B))
        throw std::invalid_argument("common linear factors need homogeneous forms");

    std::vector<LinearFactor> out;
    const Exponent xa = min_exponent(A, Var::x);
    const Exponent xb = min_exponent(B, Var::x);
    if (xa > 0 && xb > 0)
        out.push_back({std::nullopt, xa, xb});

    const UniPoly a = detail::dehomogenize(A);
    const UniPoly b = detail::dehomogenize(B);
    const UniPoly g = gcd(a, b);
    if (g.degree() < 1)
        return out;
    const UniPoly s = square_free_part(g);

    std::vector<RootInterval> roots;
    if (g.eval(0) == 0)
        roots.push_back({Rational(0), Rational(0)});
    for (const auto& r : nonzero_real_roots(g))
        roots.push_back(r);
    std::sort(roots.begin(), roots.end(), [](const RootInterval& l, const RootInterval& r) { return l.lo < r.lo; });
    for (const auto& r : roots)
        out.push_back({r, detail::root_multiplicity(a, s, r), detail::root_multiplicity(b, s, r)});
    return out;
}

} // namespace monodroma
