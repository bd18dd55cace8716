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
 * newton_diagram.hpp
 * ------------------
 * Newton diagram of a planar field at the origin: the polygonal part of the
 * boundary of conv(supp(X) + R^2_+).
 *
 * Vertices run from the y-axis side (largest y) to the x-axis side. A
 * bounded edge between (x0, y0) and (x1, y1) has type t = (dy, dx)/gcd and
 * lies on t1*x + t2*y = line_value; its exponent t2/t1 grows along the
 * chain. A vertical ray above the first vertex (type (1,0), exponent 0) and
 * a horizontal ray right of the last one (type (0,1), exponent infinity)
 * are attached when those vertices are off the axes.
 */
#pragma once

#include "monodroma/poly.hpp"
#include "monodroma/vector_field.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodroma {

/// A rational or +infinity.
struct ExtRational {
    std::optional<Rational> value;

    static ExtRational infinity() { return {}; }
    static ExtRational finite(const Rational& r) { return {r}; }
    bool is_infinite() const { return !value.has_value(); }
    std::string str() const { return value ? value->get_str() : std::string("inf"); }

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
    friend bool operator<(const ExtRational& a, const ExtRational& b)
    {
        if (!b.value)
            return a.value.has_value();
        return a.value && *a.value < *b.value;
    }
};

enum class VertexKind { exterior, inner };

struct Vertex {
    Monomial point;
    Rational a;
    Rational b;
    VertexKind kind = VertexKind::inner;
    ExtRational exponent; // b/a, infinite when a == 0
};

enum class EdgeKind { bounded, unbounded_vertical, unbounded_horizontal };

struct Edge {
    EdgeKind kind = EdgeKind::bounded;
    /// Vertex indices, upper (larger y) first; equal for unbounded edges.
    std::size_t upper = 0;
    std::size_t lower = 0;
    QuasiType type{1, 1};
    ExtRational exponent;
    long long line_value = 0;
    long long rt = 0;
    BivarPoly h;
    BivarPoly mu;

    bool bounded() const { return kind == EdgeKind::bounded; }
};

enum class BetaStatus { defined, unbounded_adjacent, null_hamiltonian };

struct BetaEntry {
    std::size_t vertex = 0;
    BetaStatus status = BetaStatus::defined;
    std::optional<Rational> beta;
};

struct NewtonDiagram {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<BetaEntry> betas;

    std::vector<Monomial> chain() const
    {
        std::vector<Monomial> out;
        for (const auto& v : vertices)
            out.push_back(v.point);
        return out;
    }

    /// Index of the edge ending at (above) / starting at (below) vertex i, if any.
    std::optional<std::size_t> edge_above(std::size_t i) const
    {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].lower == i && (edges[e].bounded() || edges[e].kind == EdgeKind::unbounded_vertical))
                return e;
        return std::nullopt;
    }
    std::optional<std::size_t> edge_below(std::size_t i) const
    {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].upper == i && (edges[e].bounded() || edges[e].kind == EdgeKind::unbounded_horizontal))
                return e;
        return std::nullopt;
    }
};

/// Lower-left convex chain of a point set, from the y-axis side to the
/// x-axis side. Collinear middle points are not vertices.
inline std::vector<Monomial> lower_left_chain(std::vector<Monomial> pts)
{
    if (pts.empty())
        throw std::invalid_argument("empty point set has no Newton diagram");
    std::sort(pts.begin(), pts.end());
    std::vector<Monomial> pareto;
    for (const auto& p : pts)
        if (pareto.empty() || p.iy < pareto.back().iy)
            pareto.push_back(p);
    auto cross = [](Monomial o, Monomial a, Monomial b) {
        const long long ax = static_cast<long long>(a.ix) - o.ix, ay = static_cast<long long>(a.iy) - o.iy;
        const long long bx = static_cast<long long>(b.ix) - o.ix, by = static_cast<long long>(b.iy) - o.iy;
        return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
    };
    std::vector<Monomial> hull;
    for (const auto& p : pareto) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

struct EdgeSplit {
    long long rt = 0;
    BivarPoly h;
    BivarPoly mu;
};

/// Splits the quasi-homogeneous component of X whose support lies on the
/// line t1*i + t2*j = line_value.
inline EdgeSplit edge_hamiltonian(const PlanarField& X, const QuasiType& t, long long line_value)
{
    PlanarField Xk;
    for (const auto& [m, c] : X.p.terms())
        if (t.degree(m) == line_value - t.t2())
            Xk.p.add_term(m, c);
    for (const auto& [m, c] : X.q.terms())
        if (t.degree(m) == line_value - t.t1())
            Xk.q.add_term(m, c);
    if (Xk.is_zero())
        throw std::invalid_argument("edge line misses the support of the field");
    const long long k = line_value - t.norm();
    SplitField s = split(Xk, k, t);
    return {k, std::move(s.h), std::move(s.mu)};
}

/// Leading x-coefficient of the upper Hamiltonian times leading
/// y-coefficient of the lower one.
inline Rational beta_from(const BivarPoly& h_upper, const BivarPoly& h_lower)
{
    if (h_upper.is_zero() || h_lower.is_zero())
        throw std::domain_error("beta needs two non-null Hamiltonians");
    const Rational* cu = nullptr;
    Exponent best_x = 0;
    for (const auto& [m, c] : h_upper.terms())
        if (!cu || m.ix > best_x) {
            cu = &c;
            best_x = m.ix;
        }
    const Rational* cl = nullptr;
    Exponent best_y = 0;
    for (const auto& [m, c] : h_lower.terms())
        if (!cl || m.iy > best_y) {
            cl = &c;
            best_y = m.iy;
        }
    return *cu * *cl;
}

/// Beta at an inner vertex between two bounded edges.
inline Rational inner_beta(const NewtonDiagram& d, std::size_t vertex)
{
    if (vertex >= d.vertices.size() || d.vertices[vertex].kind != VertexKind::inner)
        throw std::invalid_argument("beta is only defined at inner vertices");
    auto up = d.edge_above(vertex);
    auto down = d.edge_below(vertex);
    if (!up || !down || !d.edges[*up].bounded() || !d.edges[*down].bounded())
        throw std::domain_error("beta is not defined next to an unbounded edge");
    return beta_from(d.edges[*up].h, d.edges[*down].h);
}

inline NewtonDiagram build_diagram(const PlanarField& X)
{
    const auto supp = support(X);
    std::vector<Monomial> pts;
    pts.reserve(supp.size());
    for (const auto& s : supp)
        pts.push_back(s.point);

    NewtonDiagram d;
    for (const auto& m : lower_left_chain(pts)) {
        auto it = std::lower_bound(supp.begin(), supp.end(), m,
                                   [](const SupportPoint& s, const Monomial& key) { return s.point < key; });
        Vertex v;
        v.point = m;
        v.a = it->a;
        v.b = it->b;
        v.kind = (m.ix == 0 || m.iy == 0) ? VertexKind::exterior : VertexKind::inner;
        v.exponent = v.a == 0 ? ExtRational::infinity() : ExtRational::finite(v.b / v.a);
        d.vertices.push_back(std::move(v));
    }

    auto add_edge = [&](EdgeKind kind, std::size_t upper, std::size_t lower, QuasiType t, ExtRational exponent,
                        long long line) {
        Edge e;
        e.kind = kind;
        e.upper = upper;
        e.lower = lower;
        e.type = t;
        e.exponent = std::move(exponent);
        e.line_value = line;
        EdgeSplit s = edge_hamiltonian(X, t, line);
        e.rt = s.rt;
        e.h = std::move(s.h);
        e.mu = std::move(s.mu);
        d.edges.push_back(std::move(e));
    };

    const std::size_t n = d.vertices.size();
    const Monomial first = d.vertices.front().point;
    const Monomial last = d.vertices.back().point;
    if (first.ix > 0)
        add_edge(EdgeKind::unbounded_vertical, 0, 0, QuasiType(1, 0), ExtRational::finite(0), first.ix);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Monomial a = d.vertices[i].point;
        const Monomial b = d.vertices[i + 1].point;
        const long dx = static_cast<long>(b.ix) - static_cast<long>(a.ix);
        const long dy = static_cast<long>(a.iy) - static_cast<long>(b.iy);
        const long g = std::gcd(dx, dy);
        QuasiType t(dy / g, dx / g);
        add_edge(EdgeKind::bounded, i, i + 1, t, ExtRational::finite(Rational(t.t2(), t.t1())), t.degree(a));
    }
    if (last.iy > 0)
        add_edge(EdgeKind::unbounded_horizontal, n - 1, n - 1, QuasiType(0, 1), ExtRational::infinity(), last.iy);

    for (std::size_t i = 0; i < n; ++i) {
        if (d.vertices[i].kind != VertexKind::inner)
            continue;
        BetaEntry entry;
        entry.vertex = i;
        auto up = d.edge_above(i);
        auto down = d.edge_below(i);
        if (!up || !down || !d.edges[*up].bounded() || !d.edges[*down].bounded()) {
            entry.status = BetaStatus::unbounded_adjacent;
        } else if (d.edges[*up].h.is_zero() || d.edges[*down].h.is_zero()) {
            entry.status = BetaStatus::null_hamiltonian;
        } else {
            entry.beta = beta_from(d.edges[*up].h, d.edges[*down].h);
        }
        d.betas.push_back(std::move(entry));
    }
    return d;
}

} // namespace monodroma
