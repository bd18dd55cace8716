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
 * oracle.hpp
 * ----------
 * Floating-point cross-checks for the exact code. Nothing here feeds a
 * certificate; the test suite and `--with-oracle` use these to compare.
 */
#pragma once

#include "monodroma/certify.hpp"
#include "monodroma/poly.hpp"
#include "monodroma/uni_poly.hpp"
#include "monodroma/vector_field.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monodroma {

/// Vertex chain by definition: p is a vertex iff it is an endpoint of the
/// face cut out by some weight with positive (or axis) normal. O(n^3).
inline std::vector<Monomial> brute_force_diagram(const std::vector<Monomial>& points)
{
    if (points.empty())
        throw std::invalid_argument("brute_force_diagram needs points");
    std::vector<std::pair<long long, long long>> normals{{1, 0}, {0, 1}};
    for (const auto& p : points)
        for (const auto& q : points)
            if (p.ix < q.ix && p.iy > q.iy)
                normals.emplace_back(static_cast<long long>(p.iy) - q.iy, static_cast<long long>(q.ix) - p.ix);

    std::set<Monomial> verts;
    for (const auto& [w1, w2] : normals) {
        long long best = 0;
        bool first = true;
        for (const auto& p : points) {
            const long long val = w1 * p.ix + w2 * p.iy;
            if (first || val < best)
                best = val;
            first = false;
        }
        std::vector<Monomial> face;
        for (const auto& p : points)
            if (w1 * p.ix + w2 * p.iy == best)
                face.push_back(p);
        auto by_x = [](const Monomial& a, const Monomial& b) {
            return a.ix != b.ix ? a.ix < b.ix : a.iy > b.iy;
        };
        auto by_y = [](const Monomial& a, const Monomial& b) {
            return a.iy != b.iy ? a.iy < b.iy : a.ix < b.ix;
        };
        if (w2 == 0) {
            verts.insert(*std::min_element(face.begin(), face.end(), by_y));
        } else if (w1 == 0) {
            verts.insert(*std::min_element(face.begin(), face.end(), by_x));
        } else {
            verts.insert(*std::min_element(face.begin(), face.end(), by_x));
            verts.insert(*std::max_element(face.begin(), face.end(), by_x));
        }
    }
    std::vector<Monomial> chain(verts.begin(), verts.end());
    std::sort(chain.begin(), chain.end(), [](const Monomial& a, const Monomial& b) { return a.ix < b.ix; });
    return chain;
}

namespace detail {

struct NumericTerm {
    int ix;
    int iy;
    double c;
};

inline std::vector<NumericTerm> to_numeric(const BivarPoly& p)
{
    std::vector<NumericTerm> out;
    for (const auto& [m, c] : p.terms())
        out.push_back({static_cast<int>(m.ix), static_cast<int>(m.iy), c.get_d()});
    return out;
}

inline double eval_numeric(const std::vector<NumericTerm>& p, double x, double y)
{
    double s = 0;
    for (const auto& t : p)
        s += t.c * std::pow(x, t.ix) * std::pow(y, t.iy);
    return s;
}

inline std::vector<long double> to_long_double(const UniPoly& p)
{
    std::vector<long double> c;
    for (const auto& r : p.coeffs())
        c.push_back(static_cast<long double>(r.get_d()));
    return c;
}

inline long double horner(const std::vector<long double>& c, long double x)
{
    long double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        s = s * x + *it;
    return s;
}

inline std::vector<long double> numeric_roots(const std::vector<long double>& c, long double bound,
                                              long double precision)
{
    const std::size_t deg = c.size() - 1;
    if (deg == 0)
        return {};
    if (deg == 1)
        return {-c[0] / c[1]};
    std::vector<long double> dc;
    for (std::size_t i = 1; i < c.size(); ++i)
        dc.push_back(c[i] * static_cast<long double>(i));
    std::vector<long double> pts{-bound};
    for (long double r : numeric_roots(dc, bound, precision))
        if (r > -bound && r < bound)
            pts.push_back(r);
    pts.push_back(bound);

    std::vector<long double> roots;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        long double a = pts[i], b = pts[i + 1];
        long double fa = horner(c, a), fb = horner(c, b);
        if (fa == 0) {
            if (roots.empty() || roots.back() != a)
                roots.push_back(a);
            continue;
        }
        if ((fa < 0) == (fb < 0) || fb == 0)
            continue;
        while (b - a > precision) {
            const long double m = (a + b) / 2;
            const long double fm = horner(c, m);
            if (fm == 0) {
                a = b = m;
                break;
            }
            if ((fm < 0) == (fa < 0))
                a = m, fa = fm;
            else
                b = m;
        }
        roots.push_back((a + b) / 2);
    }
    if (horner(c, bound) == 0)
        roots.push_back(bound);
    return roots;
}

} // namespace detail

/// Distinct real roots by sign changes between numerically located
/// critical points (recursively), for square-free p.
inline int numeric_root_count(const UniPoly& p, double precision = 1e-9)
{
    if (p.is_zero())
        throw std::invalid_argument("numeric_root_count of the zero polynomial");
    if (p.degree() == 0)
        return 0;
    auto c = detail::to_long_double(p);
    long double m = 0;
    for (const auto& x : c)
        m = std::max(m, std::fabs(x));
    const long double bound = 1 + m / std::fabs(c.back());
    return static_cast<int>(detail::numeric_roots(c, bound, precision).size());
}

struct WindingOptions {
    double max_time = 200.0; // arc length budget
    double tol = 1e-10;
    double safety_radius = 1e6;
    double min_step = 1e-14;
};

struct WindingResult {
    double angle = 0;
    double arc_length = 0;
    bool returned = false;
    std::array<double, 2> end{0, 0};
};

/// Integrates the unit-speed normalization of X from start until the orbit
/// crosses the start ray again (returned = true) or the arc-length budget is
/// spent, accumulating the signed polar angle swept.
inline WindingResult winding(const PlanarField& X, std::array<double, 2> start, const WindingOptions& opt = {})
{
    namespace ode = boost::numeric::odeint;
    using State = std::array<double, 2>;
    if (start[0] == 0 && start[1] == 0)
        throw std::invalid_argument("winding needs a start point off the origin");

    const auto P = detail::to_numeric(X.p);
    const auto Q = detail::to_numeric(X.q);
    auto rhs = [&](const State& s, State& ds, double) {
        const double p = detail::eval_numeric(P, s[0], s[1]);
        const double q = detail::eval_numeric(Q, s[0], s[1]);
        const double n = std::hypot(p, q);
        if (n == 0 || !std::isfinite(n)) {
            ds = {0, 0};
            return;
        }
        ds = {p / n, q / n};
    };

    auto stepper = ode::make_controlled(opt.tol, opt.tol, ode::runge_kutta_dopri5<State>());
    State s = start;
    double t = 0;
    double dt = 1e-3 * std::hypot(start[0], start[1]);
    const double r0 = std::hypot(start[0], start[1]);

    WindingResult res;
    auto cross0 = [&](const State& z) { return start[0] * z[1] - start[1] * z[0]; };
    auto dot0 = [&](const State& z) { return start[0] * z[0] + start[1] * z[1]; };
    double prev_cross = 0;
    bool left_ray = false;

    while (t < opt.max_time) {
        State prev = s;
        const double t_prev = t;
        dt = std::min(dt, opt.max_time - t);
        dt = std::min(dt, 0.05 * std::max(r0, std::hypot(s[0], s[1])));
        if (stepper.try_step(rhs, s, t, dt) == ode::fail) {
            if (dt < opt.min_step)
                throw std::runtime_error("winding: step size underflow");
            continue;
        }
        const double dtheta = std::atan2(prev[0] * s[1] - prev[1] * s[0], prev[0] * s[0] + prev[1] * s[1]);
        const double cur_cross = cross0(s);
        res.arc_length = t;
        if (std::hypot(s[0], s[1]) > opt.safety_radius)
            throw std::runtime_error("winding: trajectory escaped the safety radius");
        if (left_ray && dot0(s) > 0 && ((prev_cross < 0 && cur_cross >= 0) || (prev_cross > 0 && cur_cross <= 0))) {
            // locate the crossing inside the accepted step by bisecting its length
            double lo = 0, hi = t - t_prev;
            State hit = s;
            for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                State z = prev;
                ode::runge_kutta_dopri5<State> single; // fresh: first-same-as-last state must not carry over
                single.do_step(rhs, z, t_prev, mid);
                if ((cross0(z) < 0) == (prev_cross < 0) && cross0(z) != 0) {
                    lo = mid;
                } else {
                    hi = mid;
                    hit = z;
                }
            }
            res.angle += std::atan2(prev[0] * hit[1] - prev[1] * hit[0], prev[0] * hit[0] + prev[1] * hit[1]);
            res.arc_length = t_prev + hi;
            res.end = hit;
            res.returned = true;
            return res;
        }
        res.angle += dtheta;
        if (cur_cross != 0)
            left_ray = true;
        prev_cross = cur_cross;
        res.end = s;
    }
    return res;
}

namespace detail {

inline std::optional<Rational> rationalize(double v, long max_den = 12)
{
    for (long d = 1; d <= max_den; ++d) {
        const double n = std::round(v * static_cast<double>(d));
        if (std::fabs(n / static_cast<double>(d) - v) < 1e-7 && std::fabs(n) < 1e12)
            return make_rational(static_cast<long>(n), d);
    }
    return std::nullopt;
}

} // namespace detail

/// Looks for p != q with F(p) == F(q), verified exactly. Random small-
/// denominator p, Newton iteration for F(q) = F(p) from a random start.
inline std::optional<std::pair<RationalPoint, RationalPoint>> collision_search(const BivarPoly& f, const BivarPoly& g,
                                                                               int samples,
                                                                               std::uint64_t seed = default_seed())
{
    if (samples <= 0)
        throw std::invalid_argument("collision_search needs samples > 0");
    const auto F = detail::to_numeric(f), G = detail::to_numeric(g);
    const auto Fx = detail::to_numeric(partial(f, Var::x)), Fy = detail::to_numeric(partial(f, Var::y));
    const auto Gx = detail::to_numeric(partial(g, Var::x)), Gy = detail::to_numeric(partial(g, Var::y));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_real_distribution<double> start(-3.0, 3.0);

    for (int s = 0; s < samples; ++s) {
        const RationalPoint p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
        const double px = p.x.get_d(), py = p.y.get_d();
        const double tf = detail::eval_numeric(F, px, py), tg = detail::eval_numeric(G, px, py);
        double x = start(rng), y = start(rng);
        bool converged = false;
        for (int it = 0; it < 40; ++it) {
            const double rf = detail::eval_numeric(F, x, y) - tf;
            const double rg = detail::eval_numeric(G, x, y) - tg;
            if (std::fabs(rf) + std::fabs(rg) < 1e-12) {
                converged = true;
                break;
            }
            const double a = detail::eval_numeric(Fx, x, y), b = detail::eval_numeric(Fy, x, y);
            const double c = detail::eval_numeric(Gx, x, y), d = detail::eval_numeric(Gy, x, y);
            const double det = a * d - b * c;
            if (det == 0 || !std::isfinite(det))
                break;
            x -= (d * rf - b * rg) / det;
            y -= (a * rg - c * rf) / det;
            if (!std::isfinite(x) || !std::isfinite(y) || std::fabs(x) > 1e6 || std::fabs(y) > 1e6)
                break;
        }
        if (!converged || std::hypot(x - px, y - py) < 1e-6)
            continue;
        auto qx = detail::rationalize(x), qy = detail::rationalize(y);
        if (!qx || !qy)
            continue;
        const RationalPoint q{*qx, *qy};
        if (q == p)
            continue;
        if (eval(f, p.x, p.y) == eval(f, q.x, q.y) && eval(g, p.x, p.y) == eval(g, q.x, q.y))
            return std::make_pair(p, q);
    }
    return std::nullopt;
}

} // namespace monodroma
