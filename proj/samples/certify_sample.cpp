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

// Library walk-through: parse a map, certify it, and look at the diagram.

#include "monodroma/monodroma.hpp"

#include <iostream>

int main()
{
    using namespace monodroma;

    const auto [f, g] = parse_map("f = x + x^3; g = y + x^2");
    const Certificate cert = certify(f, g);
    std::cout << "verdict: " << to_string(cert.verdict) << '\n';
    std::cout << "det DF = " << to_string(cert.det) << " (" << to_string(cert.det_status.kind) << ")\n";

    const NewtonDiagram& d = *cert.diagram;
    for (const auto& e : d.edges) {
        if (!e.bounded())
            continue;
        std::cout << "edge type (" << e.type.t1() << "," << e.type.t2() << ")  h = " << to_string(e.h, {"u", "v"})
                  << '\n';
    }
    for (const auto& b : d.betas)
        if (b.beta)
            std::cout << "beta at vertex " << b.vertex << " = " << b.beta->get_str() << " ("
                      << to_string(sector_from_beta(*b.beta)) << ")\n";
    std::cout << render_ascii(support(*cert.compactified), d);

    // a fold: the determinant vanishes on x = 0
    const auto [p, q] = parse_map("f = x^2; g = y");
    const Certificate fold = certify(p, q);
    std::cout << "fold: " << to_string(fold.verdict) << ", " << fold.message << '\n';

    return cert.verdict == Verdict::injective && fold.verdict == Verdict::not_applicable ? 0 : 1;
}
