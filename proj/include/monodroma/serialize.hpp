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
 * serialize.hpp
 * -------------
 * JSON encoding of diagrams, verdicts and certificates (schema version 1,
 * see schema/certificate.schema.json). Rationals are strings such as
 * "-3/8"; an infinite exponent is the string "inf". Polynomials are term
 * lists [{"exp": [i, j], "coeff": "c"}] plus a "text" rendering.
 */
#pragma once

#include "monodroma/certify.hpp"
#include "monodroma/monodromy.hpp"
#include "monodroma/newton_diagram.hpp"
#include "monodroma/parser.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace monodroma {

using json = nlohmann::json;

inline constexpr int certificate_schema_version = 1;

inline json terms_json(const BivarPoly& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"exp", {m.ix, m.iy}}, {"coeff", c.get_str()}});
    return out;
}

inline json poly_json(const BivarPoly& p, const VarNames& vars)
{
    return {{"terms", terms_json(p)}, {"text", to_string(p, vars)}};
}

inline json point_json(const RationalPoint& p) { return {p.x.get_str(), p.y.get_str()}; }

inline json factor_test_json(const QuasiFactorResult& r)
{
    json w = json::array();
    for (const auto& wit : r.witnesses)
        w.push_back({{"lo", wit.lambda.lo.get_str()}, {"hi", wit.lambda.hi.get_str()}, {"exact", wit.lambda.exact()},
                     {"sign", wit.sign}});
    return {{"has_factor", r.has_factor}, {"witnesses", w}};
}

inline const char* to_string(EdgeKind k)
{
    switch (k) {
    case EdgeKind::bounded: return "bounded";
    case EdgeKind::unbounded_vertical: return "unbounded-vertical";
    case EdgeKind::unbounded_horizontal: return "unbounded-horizontal";
    }
    return "?";
}

inline const char* to_string(BetaStatus s)
{
    switch (s) {
    case BetaStatus::defined: return "defined";
    case BetaStatus::unbounded_adjacent: return "not-defined-unbounded-edge";
    case BetaStatus::null_hamiltonian: return "null-adjacent-hamiltonian";
    }
    return "?";
}

/// Diagram in (u, v) naming; factor tests attached when a verdict is given.
inline json diagram_json(const NewtonDiagram& d, const MonodromyVerdict* verdict = nullptr,
                         const VarNames& vars = {"u", "v"})
{
    json vertices = json::array();
    for (const auto& v : d.vertices)
        vertices.push_back({{"point", {v.point.ix, v.point.iy}},
                            {"coeff", {v.a.get_str(), v.b.get_str()}},
                            {"kind", v.kind == VertexKind::exterior ? "exterior" : "inner"},
                            {"exponent", v.exponent.str()}});
    json edges = json::array();
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const Edge& e = d.edges[i];
        json je{{"kind", to_string(e.kind)},
                {"endpoints", {e.upper, e.lower}},
                {"type", {e.type.t1(), e.type.t2()}},
                {"exponent", e.exponent.str()},
                {"line_value", e.line_value},
                {"rt", e.rt},
                {"hamiltonian", poly_json(e.h, vars)},
                {"mu", poly_json(e.mu, vars)},
                {"factor_test", nullptr}};
        if (verdict && i < verdict->factor_tests.size() && verdict->factor_tests[i])
            je["factor_test"] = factor_test_json(*verdict->factor_tests[i]);
        edges.push_back(std::move(je));
    }
    json betas = json::array();
    for (const auto& b : d.betas) {
        json jb{{"vertex", {d.vertices[b.vertex].point.ix, d.vertices[b.vertex].point.iy}},
                {"status", to_string(b.status)},
                {"beta", nullptr},
                {"sector", nullptr}};
        if (b.beta) {
            jb["beta"] = b.beta->get_str();
            if (*b.beta != 0)
                jb["sector"] = to_string(sector_from_beta(*b.beta));
        }
        betas.push_back(std::move(jb));
    }
    return {{"vertices", vertices}, {"edges", edges}, {"betas", betas}};
}

inline json monodromy_json(const MonodromyVerdict& v)
{
    json conds = json::array();
    for (const auto& c : v.conditions)
        conds.push_back({{"label", c.label}, {"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
    return {{"outcome", to_string(v.outcome)}, {"reason", v.reason}, {"conditions", conds},
            {"assumption", v.assumption}};
}

inline json det_status_json(const DetStatus& s)
{
    json j{{"kind", to_string(s.kind)}, {"method", s.method}, {"witness", nullptr}, {"witness_exact", s.witness_exact},
           {"bracket", nullptr}};
    if (s.witness)
        j["witness"] = point_json(*s.witness);
    if (s.bracket)
        j["bracket"] = {point_json(s.bracket->first), point_json(s.bracket->second)};
    return j;
}

inline json certificate_json(const Certificate& c)
{
    json j{{"schema", certificate_schema_version},
           {"input", {{"f", to_string(c.f)}, {"g", to_string(c.g)}}},
           {"verdict", to_string(c.verdict)},
           {"reason", c.reason == NotApplicableReason::none ? json(nullptr) : json(to_string(c.reason))},
           {"message", c.message},
           {"det", c.reason == NotApplicableReason::zero_map || c.reason == NotApplicableReason::origin_not_fixed
                       ? json(nullptr)
                       : json(to_string(c.det))},
           {"det_status", det_status_json(c.det_status)},
           {"cima_condition", c.cima ? json(*c.cima) : json(nullptr)},
           {"diagram", nullptr},
           {"monodromy", nullptr}};
    if (c.diagram)
        j["diagram"] = diagram_json(*c.diagram, c.monodromy ? &*c.monodromy : nullptr);
    if (c.monodromy)
        j["monodromy"] = monodromy_json(*c.monodromy);
    json t = json::object();
    for (const auto& s : c.timings)
        t[s.stage] = s.ms;
    j["timings_ms"] = t;
    return j;
}

} // namespace monodroma
