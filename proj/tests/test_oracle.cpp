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

namespace {

BivarPoly mono(Exponent i, Exponent j, Rational c = 1) { return BivarPoly::monomial(i, j, c); }

const BivarPoly X = BivarPoly::x();
const BivarPoly Y = BivarPoly::y();
constexpr double two_pi = 2 * std::numbers::pi;

} // namespace

TEST(Oracle, BruteForceDiagram)
{
    EXPECT_EQ(brute_force_diagram({{0, 2}, {2, 0}}), (std::vector<Monomial>{{0, 2}, {2, 0}}));
    EXPECT_EQ(brute_force_diagram({{0, 2}, {1, 1}, {2, 0}}), (std::vector<Monomial>{{0, 2}, {2, 0}}));
    EXPECT_EQ(brute_force_diagram({{0, 12}, {6, 2}, {8, 0}, {4, 8}, {6, 6}}),
              (std::vector<Monomial>{{0, 12}, {6, 2}, {8, 0}}));
    EXPECT_EQ(brute_force_diagram({{3, 3}}), (std::vector<Monomial>{{3, 3}}));
    EXPECT_EQ(brute_force_diagram({{3, 3}, {4, 4}, {3, 5}}), (std::vector<Monomial>{{3, 3}}));
    EXPECT_THROW(brute_force_diagram({}), std::invalid_argument);
}

TEST(Oracle, NumericRootCount)
{
    EXPECT_EQ(numeric_root_count({-2, 0, 1}), 2);
    EXPECT_EQ(numeric_root_count({1, 0, 1}), 0);
    EXPECT_EQ(numeric_root_count({0, -1, 0, 1}), 3);
    EXPECT_EQ(numeric_root_count({6, -5, 1}), 2);
    EXPECT_EQ(numeric_root_count(UniPoly{-1, 1} * UniPoly{-2, 1} * UniPoly{-3, 1} * UniPoly{1, 0, 1}), 3);
}

TEST(Oracle, WindingOfRotation)
{
    const WindingResult w = winding({-Y, X}, {1.0, 0.0});
    EXPECT_TRUE(w.returned);
    EXPECT_NEAR(w.angle, two_pi, 1e-6);
    EXPECT_NEAR(w.arc_length, two_pi, 1e-4);
    EXPECT_NEAR(w.end[0], 1.0, 1e-6);
    EXPECT_NEAR(w.end[1], 0.0, 1e-6);

    const WindingResult back = winding({Y, -X}, {0.0, 0.5});
    EXPECT_TRUE(back.returned);
    EXPECT_NEAR(back.angle, -two_pi, 1e-6);
}

TEST(Oracle, WindingOfCompactifiedIdentity)
{
    const PlanarField B = compactify(hamiltonian_field(X, Y));
    const WindingResult w = winding(B, {0.3, 0.0});
    EXPECT_TRUE(w.returned);
    EXPECT_NEAR(std::fabs(w.angle), two_pi, 1e-3);
}

TEST(Oracle, WindingOfRadialFieldDoesNotTurn)
{
    WindingOptions opt;
    opt.max_time = 5.0;
    const WindingResult w = winding({X, Y}, {0.1, 0.1}, opt);
    EXPECT_FALSE(w.returned);
    EXPECT_NEAR(w.angle, 0.0, 1e-9);
    EXPECT_THROW(winding({X, Y}, {0.0, 0.0}), std::invalid_argument);
}

TEST(Oracle, WindingEscapes)
{
    WindingOptions opt;
    opt.safety_radius = 10;
    EXPECT_THROW(winding({X, Y}, {1.0, 0.0}, opt), std::runtime_error);
}

TEST(Oracle, CollisionSearch)
{
    const auto hit = collision_search(mono(2, 0), Y, 200, 5);
    ASSERT_TRUE(hit.has_value());
    const auto& [p, q] = *hit;
    EXPECT_FALSE(p.x == q.x && p.y == q.y);
    EXPECT_EQ(eval(mono(2, 0), p.x, p.y), eval(mono(2, 0), q.x, q.y));
    EXPECT_EQ(p.y, q.y);

    EXPECT_FALSE(collision_search(X, Y, 1000).has_value());
    const auto E1 = fixtures::odd_shear_unit(1, 1);
    EXPECT_FALSE(collision_search(E1.f, E1.g, 100000).has_value());
    EXPECT_THROW(collision_search(X, Y, 0), std::invalid_argument);
}
