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

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace monodroma;
using fixtures::Rng;

namespace {

BivarPoly mono(Exponent i, Exponent j, Rational c = 1) { return BivarPoly::monomial(i, j, c); }

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();

NewtonDiagram diagram_of(const fixtures::Map& F) { return build_diagram(compactify(hamiltonian_field(F.f, F.g))); }

// Vertices (0,4), (2,2), (6,0); the inner vertex carries (a, b) = (2, 3).
PlanarField parabolic_fixture() { return {-mono(0, 3) + mono(2, 1, 2), mono(1, 2, 3) + mono(5, 0)}; }

// Hamiltonian coefficient at a vertex (i, j) on an edge of type t, from the
// vertex vector coefficient (a, b) = c (-j, i) + m (t1, t2).
Rational hamiltonian_coeff(Monomial p, const Rational& a, const Rational& b, long t1, long t2)
{
    return (b * t1 - a * t2) / Rational(static_cast<long>(p.ix) * t1 + static_cast<long>(p.iy) * t2);
}

} // namespace

TEST(Monodromy, OddShearIsMonodromic)
{
    const NewtonDiagram d = diagram_of(fixtures::odd_shear_unit(1, 1));
    const MonodromyVerdict v = check_monodromic(d);
    EXPECT_EQ(v.outcome, MonodromyOutcome::monodromic);
    ASSERT_EQ(v.conditions.size(), 4u);
    for (const auto& c : v.conditions) {
        EXPECT_TRUE(c.passed) << c.label;
        EXPECT_TRUE(c.witnesses.empty());
    }
    ASSERT_EQ(v.factor_tests.size(), d.edges.size());
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        if (d.edges[e].bounded()) {
            ASSERT_TRUE(v.factor_tests[e].has_value());
            EXPECT_FALSE(v.factor_tests[e]->has_factor);
        }
}

TEST(Monodromy, SeparableOddIsMonodromic)
{
    EXPECT_EQ(check_monodromic(diagram_of(fixtures::separable_odd_unit(1, 0, 0))).outcome, MonodromyOutcome::monodromic);
}

TEST(Monodromy, RotationIsMonodromic)
{
    EXPECT_EQ(check_monodromic(build_diagram({-Y, X})).outcome, MonodromyOutcome::monodromic);
}

TEST(Monodromy, RadialNodeIsNotMonodromic)
{
    // (x + y)(x, y): the only edge has h = 0 and mu != 0
    const NewtonDiagram d = build_diagram({mono(2, 0) + mono(1, 1), mono(1, 1) + mono(0, 2)});
    const MonodromyVerdict v = check_monodromic(d);
    EXPECT_EQ(v.outcome, MonodromyOutcome::not_monodromic);
    EXPECT_NE(v.reason.find("node"), std::string::npos);
}

TEST(Monodromy, NegativeBetaIsParabolic)
{
    const NewtonDiagram d = build_diagram(parabolic_fixture());
    ASSERT_EQ(d.chain(), (std::vector<Monomial>{{0, 4}, {2, 2}, {6, 0}}));
    const Vertex& inner = d.vertices[1];
    EXPECT_EQ(inner.a, 2);
    EXPECT_EQ(inner.b, 3);
    const Rational expect =
        hamiltonian_coeff(inner.point, inner.a, inner.b, 1, 1) * hamiltonian_coeff(inner.point, inner.a, inner.b, 1, 2);
    EXPECT_EQ(expect, make_rational(-1, 24));
    EXPECT_EQ(inner_beta(d, 1), expect);
    EXPECT_EQ(sector_classification(d, 1), Sector::parabolic);
    const MonodromyVerdict v = check_monodromic(d);
    EXPECT_EQ(v.outcome, MonodromyOutcome::not_monodromic);
    EXPECT_FALSE(v.conditions[2].passed);
    EXPECT_NE(v.reason.find("parabolic"), std::string::npos);
}

TEST(Monodromy, SectorsFromBeta)
{
    const NewtonDiagram d = diagram_of(fixtures::odd_shear_unit(1, 1));
    EXPECT_EQ(sector_classification(d, 1), Sector::hyperbolic);
    EXPECT_EQ(sector_from_beta(make_rational(1, 32)), Sector::hyperbolic);
    EXPECT_EQ(sector_from_beta(-1), Sector::parabolic);
    EXPECT_THROW(sector_from_beta(0), std::domain_error);
    EXPECT_THROW(sector_classification(d, 0), std::invalid_argument);
}

TEST(Monodromy, FailedConditionsAreReported)
{
    // vertices (0,2), (1,1), (3,0): the middle one has odd coordinates
    const NewtonDiagram d = build_diagram({X - Y, mono(2, 0)});
    ASSERT_EQ(d.chain(), (std::vector<Monomial>{{0, 2}, {1, 1}, {3, 0}}));
    const MonodromyVerdict v = check_monodromic(d);
    EXPECT_NE(v.outcome, MonodromyOutcome::monodromic);
    EXPECT_FALSE(v.conditions[0].passed);
    EXPECT_EQ(v.conditions[0].witnesses.size(), 2u);
    EXPECT_FALSE(v.reason.empty());

    // x^2 - y^2 = (x - y)(x + y) carries real factors on the (1,1) edge
    const BivarPoly H = mono(2, 0) - mono(0, 2);
    const MonodromyVerdict w = check_monodromic(build_diagram({-partial(H, Var::y), partial(H, Var::x)}));
    EXPECT_NE(w.outcome, MonodromyOutcome::monodromic);
    EXPECT_FALSE(w.conditions[3].passed);
}

TEST(MonodromyProperty, NecessaryConditionsForValidMaps)
{
    Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const auto F = fixtures::rand_valid_map(rng);
        const NewtonDiagram d = diagram_of(F);
        const auto props = fixtures::diagram_properties(d);
        const std::string ctx = "f = " + to_string(F.f) + "; g = " + to_string(F.g);
        EXPECT_TRUE(props.even) << ctx;
        EXPECT_TRUE(props.exterior_pair) << ctx;
        EXPECT_TRUE(props.exterior_sign) << ctx;
        EXPECT_TRUE(props.beta_positive) << ctx;
        EXPECT_TRUE(props.hamiltonians_nonnull) << ctx;
        const MonodromyVerdict v = check_monodromic(d);
        EXPECT_NE(v.outcome, MonodromyOutcome::not_monodromic) << ctx;
        EXPECT_TRUE(v.conditions[0].passed && v.conditions[1].passed && v.conditions[2].passed) << ctx;
    }
}

TEST(MonodromyProperty, MonodromicVerdictMatchesWinding)
{
    Rng rng(72);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 12; ++trial) {
        const auto F = fixtures::rand_valid_map(rng);
        const PlanarField B = compactify(hamiltonian_field(F.f, F.g));
        if (check_monodromic(build_diagram(B)).outcome != MonodromyOutcome::monodromic)
            continue;
        ++checked;
        const WindingResult w = winding(B, {0.1, 0.0});
        EXPECT_TRUE(w.returned) << to_string(F.f) << "; " << to_string(F.g);
        EXPECT_NEAR(std::fabs(w.angle), 2 * std::numbers::pi, 1e-2);
    }
    EXPECT_GE(checked, 5);
}
