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

// monodroma: command-line front end.
//
// Exit codes: check -> 0 Injective, 2 Inconclusive, 3 NotApplicable;
// every subcommand -> 1 on usage or parse errors.

#include "monodroma/monodroma.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace monodroma;

constexpr int exit_usage = 1;

void report_parse_error(const std::string& input, const ParseError& e)
{
    std::cerr << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.offset(), ' ') << "^\n";
}

std::string pair_text(const PlanarField& X, const char* a, const char* b, const VarNames& vars)
{
    return std::string(a) + " = " + to_string(X.p, vars) + "; " + b + " = " + to_string(X.q, vars);
}

void print_verdict(std::ostream& os, const MonodromyVerdict& v)
{
    os << "monodromy: " << to_string(v.outcome);
    if (!v.reason.empty())
        os << " (" << v.reason << ")";
    os << '\n';
    for (const auto& c : v.conditions) {
        os << "  (" << c.label << ") " << c.name << ": " << (c.passed ? "pass" : "FAIL") << '\n';
        for (const auto& w : c.witnesses)
            os << "      " << w << '\n';
    }
    os << "  note: " << v.assumption << '\n';
}

json oracle_report(const Certificate& cert)
{
    json j = json::object();
    if (cert.compactified && !cert.compactified->is_zero()) {
        json w = json::array();
        for (double r : {0.05, 0.1, 0.3}) {
            try {
                const WindingResult res = winding(*cert.compactified, {r, 0.0});
                w.push_back({{"radius", r}, {"angle", res.angle}, {"returned", res.returned}});
            } catch (const std::exception& e) {
                w.push_back({{"radius", r}, {"error", e.what()}});
            }
        }
        j["winding"] = w;
    }
    auto hit = collision_search(cert.f, cert.g, 10000);
    if (hit)
        j["collision"] = {point_json(hit->first), point_json(hit->second)};
    else
        j["collision"] = nullptr;
    return j;
}

int run_check(const std::string& input, bool assume_det, bool as_json, bool with_oracle)
{
    const auto [f, g] = parse_map(input);
    CertifyOptions opts;
    opts.assume_det = assume_det;
    const Certificate cert = certify(f, g, opts);

    if (as_json) {
        json j = certificate_json(cert);
        if (with_oracle)
            j["oracle"] = oracle_report(cert);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "map: f = " << to_string(f) << "; g = " << to_string(g) << '\n';
        std::cout << "verdict: " << to_string(cert.verdict);
        if (cert.reason != NotApplicableReason::none)
            std::cout << " (" << to_string(cert.reason) << ")";
        std::cout << '\n';
        if (!cert.message.empty())
            std::cout << "  " << cert.message << '\n';
        if (cert.reason != NotApplicableReason::zero_map && cert.reason != NotApplicableReason::origin_not_fixed) {
            std::cout << "det DF = " << to_string(cert.det) << '\n';
            std::cout << "det status: " << to_string(cert.det_status.kind) << " [" << cert.det_status.method << "]";
            if (cert.det_status.witness)
                std::cout << " at (" << cert.det_status.witness->x.get_str() << ", "
                          << cert.det_status.witness->y.get_str() << ")"
                          << (cert.det_status.witness_exact ? "" : " approximately");
            std::cout << '\n';
        }
        if (cert.cima)
            std::cout << "coprime leading forms: " << (*cert.cima ? "true" : "false") << '\n';
        if (cert.diagram && cert.compactified)
            std::cout << render_ascii(support(*cert.compactified), *cert.diagram);
        if (cert.monodromy)
            print_verdict(std::cout, *cert.monodromy);
        if (with_oracle)
            std::cout << "oracle: " << oracle_report(cert).dump() << '\n';
        std::cout << "timings (ms):";
        for (const auto& t : cert.timings)
            std::cout << ' ' << t.stage << '=' << t.ms;
        std::cout << '\n';
    }
    switch (cert.verdict) {
    case Verdict::injective: return 0;
    case Verdict::inconclusive: return 2;
    case Verdict::not_applicable: return 3;
    }
    return 2;
}

int run_diagram(const std::string& input, const std::string& svg_path)
{
    const auto [f, g] = parse_map(input);
    const PlanarField X = hamiltonian_field(f, g);
    if (X.is_zero()) {
        std::cerr << "error: the Hamiltonian field of this map is zero\n";
        return exit_usage;
    }
    const PlanarField B = compactify(X);
    const NewtonDiagram d = build_diagram(B);
    const auto supp = support(B);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) {
            std::cerr << "error: cannot write " << svg_path << '\n';
            return exit_usage;
        }
        out << render_svg(supp, d);
        std::cout << "wrote " << svg_path << '\n';
    } else {
        std::cout << render_ascii(supp, d);
    }
    return 0;
}

int run_monodromy(const std::string& input, bool as_json)
{
    const auto [p, q] = parse_pair(input, {"P", "Q"}, {"u", "v"});
    const PlanarField X{p, q};
    if (X.is_zero()) {
        std::cerr << "error: the zero field has no Newton diagram\n";
        return exit_usage;
    }
    const NewtonDiagram d = build_diagram(X);
    const MonodromyVerdict v = check_monodromic(d);
    if (as_json) {
        std::cout << json{{"diagram", diagram_json(d, &v)}, {"monodromy", monodromy_json(v)}}.dump(2) << '\n';
    } else {
        std::cout << render_ascii(support(X), d);
        print_verdict(std::cout, v);
    }
    return 0;
}

int run_bendixson(const std::string& input, bool from_map)
{
    PlanarField X;
    if (from_map) {
        const auto [f, g] = parse_map(input);
        X = hamiltonian_field(f, g);
    } else {
        const auto [p, q] = parse_pair(input, {"P", "Q"}, {"x", "y"});
        X = {p, q};
    }
    std::cout << pair_text(compactify(X), "P", "Q", {"u", "v"}) << '\n';
    return 0;
}

int run_factor_test(const std::string& input, const std::vector<long>& type, bool as_json)
{
    if (type.size() != 2) {
        std::cerr << "error: --type expects two integers t1,t2\n";
        return exit_usage;
    }
    const BivarPoly h = parse_poly(input, {"u", "v"});
    const QuasiFactorResult r = quasi_factor_test(h, QuasiType(type[0], type[1]));
    if (as_json) {
        json j = factor_test_json(r);
        j["binary_form"] = json::array();
        for (const auto& c : r.binary_form.coeffs())
            j["binary_form"].push_back(c.get_str());
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "h = " << to_string(h, {"u", "v"}) << '\n';
    std::cout << "g(lambda) coefficients (low to high):";
    for (const auto& c : r.binary_form.coeffs())
        std::cout << ' ' << c.get_str();
    std::cout << '\n';
    std::cout << "has_factor: " << (r.has_factor ? "true" : "false") << '\n';
    for (const auto& w : r.witnesses) {
        std::cout << "  lambda ";
        if (w.lambda.exact())
            std::cout << "= " << w.lambda.lo.get_str();
        else
            std::cout << "in (" << w.lambda.lo.get_str() << ", " << w.lambda.hi.get_str() << ") ~ "
                      << refine_root(r.binary_form, w.lambda, Rational(1, 1000000)).midpoint().get_d();
        std::cout << "  factor v^" << type[0] << " - lambda*u^" << type[1] << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Newton-diagram injectivity certificates for planar polynomial maps"};
    app.require_subcommand(1);

    std::string input;
    bool assume_det = false, as_json = false, with_oracle = false, ascii = false, from_map = false;
    std::string svg_path;
    std::vector<long> type;

    auto* check = app.add_subcommand("check", "certify injectivity of a map \"f = ...; g = ...\"");
    check->add_option("map", input, "the map")->required();
    check->add_flag("--assume-det", assume_det, "assert det DF != 0 when the heuristics cannot decide");
    check->add_flag("--json", as_json, "print the certificate as JSON");
    check->add_flag("--with-oracle", with_oracle, "add numeric cross-checks (winding, collision search)");

    auto* diagram = app.add_subcommand("diagram", "draw the Newton diagram of the compactified field of a map");
    diagram->add_option("map", input, "the map")->required();
    auto* svg_opt = diagram->add_option("--svg", svg_path, "write an SVG picture to FILE");
    diagram->add_flag("--ascii", ascii, "print a text picture (default)")->excludes(svg_opt);

    auto* mono = app.add_subcommand("monodromy", "monodromy conditions for a field \"P = ...; Q = ...\" in u, v");
    mono->add_option("field", input, "the field")->required();
    mono->add_flag("--json", as_json, "print JSON");

    auto* bend = app.add_subcommand("bendixson", "compactify a field \"P = ...; Q = ...\" in x, y");
    bend->add_option("field", input, "the field (or a map with --map)")->required();
    bend->add_flag("--map", from_map, "read \"f = ...; g = ...\" and use its Hamiltonian field");

    auto* ft = app.add_subcommand("factor-test", "search a quasi-homogeneous h(u, v) for factors v^t1 - lambda*u^t2");
    ft->add_option("poly", input, "h in u, v")->required();
    ft->add_option("--type", type, "t1,t2")->required()->delimiter(',')->expected(2);
    ft->add_flag("--json", as_json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*check)
            return run_check(input, assume_det, as_json, with_oracle);
        if (*diagram)
            return run_diagram(input, svg_path);
        if (*mono)
            return run_monodromy(input, as_json);
        if (*bend)
            return run_bendixson(input, from_map);
        if (*ft)
            return run_factor_test(input, type, as_json);
    } catch (const ParseError& e) {
        report_parse_error(input, e);
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
