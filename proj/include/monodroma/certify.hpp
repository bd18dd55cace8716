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
 * certify.hpp
 * -----------
 * Injectivity certificate for a planar polynomial map F = (f, g) with
 * F(0,0) = (0,0) and nonvanishing Jacobian determinant:
 *
 *   Hamiltonian field X of (f^2 + g^2)/2  ->  compactified b(X)  ->
 *   Newton diagram of b(X)  ->  monodromy conditions at the origin.
 *
 * A monodromic origin of b(X) means infinity is surrounded by closed
 * orbits of X, which forces F to be injective. The determinant hypothesis
 * is not decided in general; the certificate records how it was obtained.
 */
#pragma once

#include "monodroma/bendixson.hpp"
#include "monodroma/monodromy.hpp"
#include "monodroma/newton_diagram.hpp"
#include "monodroma/poly.hpp"
#include "monodroma/vector_field.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace monodroma {

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline BivarPoly jacobian_det(const BivarPoly& f, const BivarPoly& g)
{
    return partial(f, Var::x) * partial(g, Var::y) - partial(f, Var::y) * partial(g, Var::x);
}

enum class DetKind { proved_nonvanishing, assumed_by_user, unknown, vanishes_at };

inline const char* to_string(DetKind k)
{
    switch (k) {
    case DetKind::proved_nonvanishing: return "ProvedNonvanishing";
    case DetKind::assumed_by_user: return "AssumedByUser";
    case DetKind::unknown: return "Unknown";
    case DetKind::vanishes_at: return "VanishesAt";
    }
    return "?";
}

struct DetStatus {
    DetKind kind = DetKind::unknown;
    std::string method;
    /// For vanishes_at: the witness. Exact when witness_exact, otherwise the
    /// midpoint of a bracket whose endpoints carry opposite exact signs.
    std::optional<RationalPoint> witness;
    bool witness_exact = false;
    std::optional<std::pair<RationalPoint, RationalPoint>> bracket;
};

/// Seed for every randomized routine: MONODROMA_SEED if set, else a fixed default.
inline std::uint64_t default_seed()
{
    if (const char* s = std::getenv("MONODROMA_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0')
            return v;
    }
    return 20260101ULL;
}

namespace detail {

/// All exponents even and every coefficient sharing the sign of a nonzero
/// constant term: then det is bounded away from zero.
inline bool even_square_pattern(const BivarPoly& det)
{
    const Rational c0 = det.coeff({0, 0});
    if (c0 == 0)
        return false;
    const int s = sgn(c0);
    for (const auto& [m, c] : det.terms())
        if (m.ix % 2 != 0 || m.iy % 2 != 0 || sgn(c) != s)
            return false;
    return true;
}

inline std::vector<RationalPoint> det_samples(std::uint64_t seed)
{
    std::vector<RationalPoint> pts;
    for (int i = -10; i <= 10; ++i)
        for (int j = -10; j <= 10; ++j)
            pts.push_back({Rational(i, 2), Rational(j, 2)});
    for (auto& p : pts) {
        p.x.canonicalize();
        p.y.canonicalize();
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 97);
    for (int k = 0; k < 100; ++k)
        pts.push_back({make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))});
    return pts;
}

inline Rational dist2(const RationalPoint& a, const RationalPoint& b)
{
    const Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

} // namespace detail

/// Sound sufficient patterns first, then exact sampling for a zero or a
/// sign change. Never claims nonvanishing from samples alone.
inline DetStatus det_nonvanishing_heuristic(const BivarPoly& det, std::uint64_t seed = default_seed())
{
    DetStatus st;
    if (det.is_zero()) {
        st.kind = DetKind::vanishes_at;
        st.method = "identically zero";
        st.witness = RationalPoint{0, 0};
        st.witness_exact = true;
        return st;
    }
    if (total_degree(det) == 0) {
        st.kind = DetKind::proved_nonvanishing;
        st.method = "nonzero constant";
        return st;
    }
    if (detail::even_square_pattern(det)) {
        st.kind = DetKind::proved_nonvanishing;
        st.method = "constant plus even monomials of the same sign";
        return st;
    }

    const auto pts = detail::det_samples(seed);
    std::vector<int> signs;
    signs.reserve(pts.size());
    for (const auto& p : pts) {
        const int s = sgn(eval(det, p.x, p.y));
        if (s == 0) {
            st.kind = DetKind::vanishes_at;
            st.method = "exact zero at a sample point";
            st.witness = p;
            st.witness_exact = true;
            return st;
        }
        signs.push_back(s);
    }

    // Reference: the sample nearest the origin; partner: the nearest sample of opposite sign.
    std::size_t ref = 0;
    const RationalPoint origin{0, 0};
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (detail::dist2(pts[i], origin) < detail::dist2(pts[ref], origin))
            ref = i;
    std::optional<std::size_t> partner;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (signs[i] != signs[ref] && (!partner || detail::dist2(pts[i], pts[ref]) < detail::dist2(pts[*partner], pts[ref])))
            partner = i;
    if (!partner) {
        st.kind = DetKind::unknown;
        st.method = "no pattern applies; no sign change on samples";
        return st;
    }

    RationalPoint lo = pts[ref], hi = pts[*partner];
    const int slo = signs[ref];
    const Rational tol2 = Rational(1, 1000000) * Rational(1, 1000000);
    while (detail::dist2(lo, hi) > tol2) {
        RationalPoint mid{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
        const int s = sgn(eval(det, mid.x, mid.y));
        if (s == 0) {
            st.kind = DetKind::vanishes_at;
            st.method = "exact zero found by bisection";
            st.witness = mid;
            st.witness_exact = true;
            return st;
        }
        (s == slo ? lo : hi) = mid;
    }
    st.kind = DetKind::vanishes_at;
    st.method = "sign change between samples";
    st.witness = RationalPoint{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
    st.witness_exact = false;
    st.bracket = std::make_pair(lo, hi);
    return st;
}

/// True iff the leading forms of the Hamiltonian field components share no
/// real linear factor. False when either leading form is zero.
inline bool cima_condition(const BivarPoly& f, const BivarPoly& g)
{
    const PlanarField X = hamiltonian_field(f, g);
    if (X.is_zero())
        return false;
    const auto [A, B] = leading_forms(X);
    if (A.is_zero() || B.is_zero())
        return false;
    return common_real_linear_factors(A, B).empty();
}

enum class Verdict { injective, inconclusive, not_applicable };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::injective: return "Injective";
    case Verdict::inconclusive: return "Inconclusive";
    case Verdict::not_applicable: return "NotApplicable";
    }
    return "?";
}

enum class NotApplicableReason { none, zero_map, origin_not_fixed, det_vanishes };

inline const char* to_string(NotApplicableReason r)
{
    switch (r) {
    case NotApplicableReason::none: return "";
    case NotApplicableReason::zero_map: return "zero map";
    case NotApplicableReason::origin_not_fixed: return "origin not fixed";
    case NotApplicableReason::det_vanishes: return "det vanishes";
    }
    return "?";
}

struct StageTiming {
    std::string stage;
    double ms = 0;
};

struct CertifyOptions {
    bool assume_det = false;
    std::optional<std::uint64_t> seed;
};

struct Certificate {
    BivarPoly f;
    BivarPoly g;
    Verdict verdict = Verdict::inconclusive;
    NotApplicableReason reason = NotApplicableReason::none;
    std::string message;
    BivarPoly det;
    DetStatus det_status;
    std::optional<PlanarField> field;
    std::optional<PlanarField> compactified;
    std::optional<NewtonDiagram> diagram;
    std::optional<MonodromyVerdict> monodromy;
    std::optional<bool> cima;
    std::vector<StageTiming> timings;
};

namespace detail {

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

    template <typename Fn>
    auto run(const std::string& stage, Fn&& fn)
    {
        const auto t0 = std::chrono::steady_clock::now();
        struct Record {
            std::vector<StageTiming>& out;
            std::string stage;
            std::chrono::steady_clock::time_point t0;
            ~Record()
            {
                const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
                out.push_back({stage, dt.count()});
            }
        } rec{out_, stage, t0};
        return fn();
    }

private:
    std::vector<StageTiming>& out_;
};

} // namespace detail

inline Certificate certify(const BivarPoly& f, const BivarPoly& g, const CertifyOptions& opts = {})
{
    Certificate cert;
    cert.f = f;
    cert.g = g;
    detail::StageClock clock(cert.timings);
    cert.det_status.method = "not evaluated";

    if (f.is_zero() && g.is_zero()) {
        cert.verdict = Verdict::not_applicable;
        cert.reason = NotApplicableReason::zero_map;
        cert.message = "the zero map has an identically zero Hamiltonian field";
        return cert;
    }
    if (f.coeff({0, 0}) != 0 || g.coeff({0, 0}) != 0) {
        cert.verdict = Verdict::not_applicable;
        cert.reason = NotApplicableReason::origin_not_fixed;
        cert.message = "F(0,0) != (0,0); compose with the translation F - F(0,0), which preserves injectivity";
        return cert;
    }

    cert.det = clock.run("det", [&] { return jacobian_det(f, g); });
    cert.det_status = clock.run("det_heuristic", [&] {
        return det_nonvanishing_heuristic(cert.det, opts.seed.value_or(default_seed()));
    });
    if (cert.det_status.kind == DetKind::vanishes_at) {
        cert.verdict = Verdict::not_applicable;
        cert.reason = NotApplicableReason::det_vanishes;
        cert.message = "det DF vanishes: " + cert.det_status.method;
        return cert;
    }
    if (cert.det_status.kind == DetKind::unknown && opts.assume_det) {
        cert.det_status.kind = DetKind::assumed_by_user;
        cert.det_status.method = "asserted by the caller";
    }

    cert.field = clock.run("hamiltonian_field", [&] { return hamiltonian_field(f, g); });
    cert.cima = clock.run("cima_condition", [&] { return cima_condition(f, g); });
    cert.compactified = clock.run("compactify", [&] { return compactify(*cert.field); });
    cert.diagram = clock.run("build_diagram", [&] { return build_diagram(*cert.compactified); });
    cert.monodromy = clock.run("check_monodromic", [&] { return check_monodromic(*cert.diagram); });

    const bool det_ok =
        cert.det_status.kind == DetKind::proved_nonvanishing || cert.det_status.kind == DetKind::assumed_by_user;
    const bool mono = cert.monodromy->outcome == MonodromyOutcome::monodromic;
    if (det_ok && mono) {
        cert.verdict = Verdict::injective;
        cert.message = "origin of b(X) is monodromic";
    } else {
        cert.verdict = Verdict::inconclusive;
        if (!det_ok)
            cert.message = "det DF nonvanishing not established (use --assume-det to assert it)";
        if (!mono)
            cert.message += std::string(cert.message.empty() ? "" : "; ") + "monodromy: " +
                            to_string(cert.monodromy->outcome) + ", " + cert.monodromy->reason;
    }
    return cert;
}

} // namespace monodroma
