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
 * monodromy.hpp
 * -------------
 * Newton-diagram test for a monodromic singular point at the origin.
 *
 * The four conditions are sufficient, not necessary:
 *   (a) every vertex has even coordinates;
 *   (b) the chain runs from the y-axis, coefficient (a, 0), to the x-axis,
 *       coefficient (0, b), with a*b < 0;
 *   (c) every inner vertex has beta > 0;
 *   (d) every bounded edge Hamiltonian is non-null and has no factor
 *       v^t1 - lambda*u^t2 with real lambda != 0.
 * Only two situations give a definite negative: an edge with h == 0 and
 * mu != 0 (a node), or an inner vertex with beta < 0 (a parabolic sector,
 * hence a characteristic orbit). Every other failure is inconclusive.
 */
#pragma once

#include "monodroma/newton_diagram.hpp"
#include "monodroma/real_roots.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodroma {

enum class MonodromyOutcome { monodromic, not_monodromic, inconclusive };

inline const char* to_string(MonodromyOutcome o)
{
    switch (o) {
    case MonodromyOutcome::monodromic: return "Monodromic";
    case MonodromyOutcome::not_monodromic: return "NotMonodromic";
    case MonodromyOutcome::inconclusive: return "Inconclusive";
    }
    return "?";
}

struct ConditionReport {
    std::string label; // "a" .. "d"
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;
};

struct MonodromyVerdict {
    MonodromyOutcome outcome = MonodromyOutcome::inconclusive;
    std::string reason;
    std::vector<ConditionReport> conditions;
    /// Factor test per diagram edge; empty for unbounded edges and null Hamiltonians.
    std::vector<std::optional<QuasiFactorResult>> factor_tests;
    std::string assumption = "origin assumed to be an isolated singular point";

    const ConditionReport& condition(const std::string& label) const
    {
        for (const auto& c : conditions)
            if (c.label == label)
                return c;
        throw std::out_of_range("no condition " + label);
    }
};

namespace detail {

inline std::string point_str(Monomial m)
{
    return "(" + std::to_string(m.ix) + "," + std::to_string(m.iy) + ")";
}

inline std::string edge_str(const NewtonDiagram& d, std::size_t e)
{
    const Edge& edge = d.edges[e];
    std::string s = "edge " + std::to_string(e) + " type (" + std::to_string(edge.type.t1()) + "," +
                    std::to_string(edge.type.t2()) + ")";
    if (edge.bounded())
        s += " " + point_str(d.vertices[edge.upper].point) + "-" + point_str(d.vertices[edge.lower].point);
    else
        s += edge.kind == EdgeKind::unbounded_vertical ? " vertical ray" : " horizontal ray";
    return s;
}

inline std::string interval_str(const RootInterval& r)
{
    if (r.exact())
        return r.lo.get_str();
    return "(" + r.lo.get_str() + ", " + r.hi.get_str() + ")";
}

} // namespace detail

inline MonodromyVerdict check_monodromic(const NewtonDiagram& d)
{
    MonodromyVerdict v;
    v.factor_tests.resize(d.edges.size());

    ConditionReport even{"a", "vertices have even coordinates", true, {}};
    for (const auto& vx : d.vertices)
        if (vx.point.ix % 2 != 0 || vx.point.iy % 2 != 0) {
            even.passed = false;
            even.witnesses.push_back("vertex " + detail::point_str(vx.point) + " has an odd coordinate");
        }

    ConditionReport exterior{"b", "two exterior vertices with opposite rotation", true, {}};
    if (d.vertices.empty()) {
        exterior.passed = false;
        exterior.witnesses.push_back("empty diagram");
    } else {
        const Vertex& top = d.vertices.front();
        const Vertex& bottom = d.vertices.back();
        if (top.point.ix != 0) {
            exterior.passed = false;
            exterior.witnesses.push_back("first vertex " + detail::point_str(top.point) + " is off the y-axis");
        }
        if (bottom.point.iy != 0) {
            exterior.passed = false;
            exterior.witnesses.push_back("last vertex " + detail::point_str(bottom.point) + " is off the x-axis");
        }
        if (d.vertices.size() < 2) {
            exterior.passed = false;
            exterior.witnesses.push_back("single-vertex diagram");
        }
        if (exterior.passed) {
            const Rational prod = top.a * bottom.b;
            if (prod >= 0) {
                exterior.passed = false;
                exterior.witnesses.push_back("a*b = " + prod.get_str() + " at " + detail::point_str(top.point) +
                                             " and " + detail::point_str(bottom.point));
            }
        }
    }

    ConditionReport betas{"c", "inner vertices have beta > 0", true, {}};
    bool parabolic = false;
    for (const auto& entry : d.betas) {
        const std::string where = "vertex " + detail::point_str(d.vertices[entry.vertex].point);
        switch (entry.status) {
        case BetaStatus::unbounded_adjacent:
            betas.passed = false;
            betas.witnesses.push_back(where + ": beta not defined next to an unbounded edge");
            break;
        case BetaStatus::null_hamiltonian:
            betas.passed = false;
            betas.witnesses.push_back(where + ": adjacent edge Hamiltonian is null");
            break;
        case BetaStatus::defined:
            if (*entry.beta == 0) {
                betas.passed = false;
                betas.witnesses.push_back(where + ": internal consistency error, beta = 0");
            } else if (*entry.beta < 0) {
                betas.passed = false;
                parabolic = true;
                betas.witnesses.push_back(where + ": beta = " + entry.beta->get_str());
            }
            break;
        }
    }

    ConditionReport edges{"d", "edge Hamiltonians non-null without real factor", true, {}};
    bool node = false;
    std::string node_edge;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const Edge& edge = d.edges[e];
        if (edge.h.is_zero() && !edge.mu.is_zero() && !node) {
            node = true;
            node_edge = detail::edge_str(d, e);
        }
        if (!edge.bounded())
            continue;
        if (edge.h.is_zero()) {
            edges.passed = false;
            edges.witnesses.push_back(detail::edge_str(d, e) + ": null Hamiltonian");
            continue;
        }
        QuasiFactorResult ft = quasi_factor_test(edge.h, edge.type);
        if (ft.has_factor) {
            edges.passed = false;
            std::string w = detail::edge_str(d, e) + ": factor at lambda in";
            for (const auto& wit : ft.witnesses)
                w += " " + detail::interval_str(wit.lambda);
            edges.witnesses.push_back(w);
        }
        v.factor_tests[e] = std::move(ft);
    }

    v.conditions = {even, exterior, betas, edges};
    const bool all = even.passed && exterior.passed && betas.passed && edges.passed;
    if (all) {
        v.outcome = MonodromyOutcome::monodromic;
    } else if (node) {
        v.outcome = MonodromyOutcome::not_monodromic;
        v.reason = "node (" + node_edge + " has h = 0 and mu != 0)";
    } else if (parabolic) {
        v.outcome = MonodromyOutcome::not_monodromic;
        v.reason = "parabolic sector (inner vertex with beta < 0)";
    } else {
        v.outcome = MonodromyOutcome::inconclusive;
        std::string failed;
        for (const auto& c : v.conditions)
            if (!c.passed)
                failed += (failed.empty() ? "" : ",") + c.label;
        v.reason = "failed conditions: " + failed;
    }
    return v;
}

enum class Sector { parabolic, hyperbolic };

inline const char* to_string(Sector s) { return s == Sector::parabolic ? "parabolic" : "hyperbolic"; }

/// Sector type in the first-quadrant wedge at an inner vertex.
inline Sector sector_from_beta(const Rational& beta)
{
    if (beta == 0)
        throw std::domain_error("beta = 0 does not classify a sector");
    return beta < 0 ? Sector::parabolic : Sector::hyperbolic;
}

inline Sector sector_classification(const NewtonDiagram& d, std::size_t vertex)
{
    return sector_from_beta(inner_beta(d, vertex));
}

} // namespace monodroma
