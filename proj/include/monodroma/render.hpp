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
 * render.hpp
 * ----------
 * Lattice pictures of a Newton diagram: plain text and SVG.
 */
#pragma once

#include "monodroma/newton_diagram.hpp"
#include "monodroma/vector_field.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace monodroma {

namespace detail {

inline std::string edge_caption(const NewtonDiagram& d, const Edge& e)
{
    std::ostringstream os;
    if (e.bounded())
        os << "(" << d.vertices[e.upper].point.ix << "," << d.vertices[e.upper].point.iy << ")-("
           << d.vertices[e.lower].point.ix << "," << d.vertices[e.lower].point.iy << ")";
    else
        os << (e.kind == EdgeKind::unbounded_vertical ? "vertical ray" : "horizontal ray");
    os << "  type (" << e.type.t1() << "," << e.type.t2() << ")  exponent " << e.exponent.str() << "  line "
       << e.type.t1() << "i+" << e.type.t2() << "j=" << e.line_value;
    return os.str();
}

} // namespace detail

/// Text picture: 'V' vertex, 'o' other support point, '.' empty lattice
/// point; j grows upward. Grids wider than max_cells fall back to the
/// caption list alone.
inline std::string render_ascii(const std::vector<SupportPoint>& supp, const NewtonDiagram& d, unsigned max_cells = 72)
{
    std::ostringstream os;
    Exponent mx = 0, my = 0;
    std::set<Monomial> pts, verts;
    for (const auto& s : supp) {
        pts.insert(s.point);
        mx = std::max(mx, s.point.ix);
        my = std::max(my, s.point.iy);
    }
    for (const auto& v : d.vertices)
        verts.insert(v.point);
    if (mx < max_cells && my < max_cells) {
        for (long j = my; j >= 0; --j) {
            os << (j < 10 ? " " : "") << j << " |";
            for (Exponent i = 0; i <= mx; ++i) {
                const Monomial m{i, static_cast<Exponent>(j)};
                os << ' ' << (verts.count(m) ? 'V' : pts.count(m) ? 'o' : '.');
            }
            os << '\n';
        }
        os << "   +" << std::string(2 * (mx + 1), '-') << '\n';
    } else {
        os << "(lattice too large to draw: " << mx << " x " << my << ")\n";
    }
    os << "vertices:";
    for (const auto& v : d.vertices)
        os << " (" << v.point.ix << "," << v.point.iy << ")" << (v.kind == VertexKind::exterior ? "e" : "i");
    os << '\n';
    for (const auto& e : d.edges)
        os << "edge " << detail::edge_caption(d, e) << '\n';
    for (const auto& b : d.betas)
        os << "beta at (" << d.vertices[b.vertex].point.ix << "," << d.vertices[b.vertex].point.iy
           << "): " << (b.beta ? b.beta->get_str() : std::string("not defined")) << '\n';
    return os.str();
}

inline std::string render_svg(const std::vector<SupportPoint>& supp, const NewtonDiagram& d)
{
    Exponent mx = 1, my = 1;
    for (const auto& s : supp) {
        mx = std::max(mx, s.point.ix);
        my = std::max(my, s.point.iy);
    }
    const double cell = std::max(6.0, std::min(40.0, 480.0 / std::max(mx, my)));
    const double pad = 40;
    const double w = pad * 2 + cell * (mx + 1);
    const double h = pad * 2 + cell * (my + 1) + 16.0 * static_cast<double>(d.edges.size() + 1);
    auto X = [&](double i) { return pad + cell * i; };
    auto Y = [&](double j) { return pad + cell * (my + 1) - cell * j; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" font-family=\"monospace\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(mx + 1) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(my + 1)
       << "\" stroke=\"black\"/>\n";
    for (const auto& s : supp)
        os << "<circle cx=\"" << X(s.point.ix) << "\" cy=\"" << Y(s.point.iy) << "\" r=\"3\" fill=\"gray\"/>\n";

    if (!d.vertices.empty()) {
        const auto& first = d.vertices.front().point;
        const auto& last = d.vertices.back().point;
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        if (first.ix > 0)
            os << X(first.ix) << "," << Y(my + 1) << " ";
        for (const auto& v : d.vertices)
            os << X(v.point.ix) << "," << Y(v.point.iy) << " ";
        if (last.iy > 0)
            os << X(mx + 1) << "," << Y(last.iy);
        os << "\"/>\n";
    }
    for (const auto& v : d.vertices) {
        os << "<circle cx=\"" << X(v.point.ix) << "\" cy=\"" << Y(v.point.iy) << "\" r=\"5\" fill=\""
           << (v.kind == VertexKind::exterior ? "crimson" : "darkorange") << "\"/>\n";
        os << "<text x=\"" << X(v.point.ix) + 7 << "\" y=\"" << Y(v.point.iy) - 7 << "\">(" << v.point.ix << ","
           << v.point.iy << ")</text>\n";
    }
    double ty = Y(0) + 24;
    for (const auto& e : d.edges) {
        os << "<text x=\"" << pad << "\" y=\"" << ty << "\">" << detail::edge_caption(d, e) << "</text>\n";
        ty += 16;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace monodroma
