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
 * bendixson.hpp
 * -------------
 * Compactification through the inversion (x, y) = (u, v)/(u^2 + v^2).
 *
 * With r = u^2 + v^2 and D = max(deg P, deg Q), a homogeneous piece R_k of
 * degree k becomes R_k(u/r, v/r) * r^D = R_k(u, v) * r^(D-k), so the whole
 * transform stays inside polynomial arithmetic:
 *
 *     u' = (v^2 - u^2) T(P) - 2uv T(Q)
 *     v' = (u^2 - v^2) T(Q) - 2uv T(P),      T(R) = sum_k R_k r^(D-k).
 */
#pragma once

#include "monodroma/poly.hpp"
#include "monodroma/vector_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace monodroma {

namespace detail {

inline BivarPoly radius_sq() { return BivarPoly::monomial(2, 0) + BivarPoly::monomial(0, 2); }

/// sum_k R_k * r^(D - k) for D >= deg R.
inline BivarPoly lift_components(const BivarPoly& R, long D)
{
    BivarPoly out;
    const BivarPoly r = radius_sq();
    for (const auto& [k, piece] : homogeneous_components(R))
        out += piece * pow(r, static_cast<unsigned>(D - k));
    return out;
}

} // namespace detail

inline PlanarField compactify(const PlanarField& X)
{
    if (X.is_zero())
        return {};
    const long D = std::max(total_degree(X.p), total_degree(X.q));
    if (D == 0)
        throw std::domain_error("compactification degenerates for a nonzero constant field");
    const BivarPoly TP = detail::lift_components(X.p, D);
    const BivarPoly TQ = detail::lift_components(X.q, D);
    const BivarPoly u2 = BivarPoly::monomial(2, 0);
    const BivarPoly v2 = BivarPoly::monomial(0, 2);
    const BivarPoly two_uv = BivarPoly::monomial(1, 1, Rational(2));
    return {(v2 - u2) * TP - two_uv * TQ, (u2 - v2) * TQ - two_uv * TP};
}

/// Contribution of the pair (f_i, g_i), (f_j, g_j) of homogeneous parts to
/// the compactified Hamiltonian field of F, for maps of degree d:
/// r^(2d-i-j) [(u^2-v^2) S_v - 2uv S_u, (u^2-v^2) S_u + 2uv S_v] with
/// S = f_i f_j + g_i g_j. The full transform is half the sum over all (i, j).
inline PlanarField pair_piece(const BivarPoly& f, const BivarPoly& g, long i, long j, long d)
{
    if (i < 0 || j < 0 || i > d || j > d)
        throw std::invalid_argument("pair piece index outside 0..d");
    const BivarPoly S = homogeneous_part(f, i) * homogeneous_part(f, j) + homogeneous_part(g, i) * homogeneous_part(g, j);
    if (S.is_zero())
        return {};
    const BivarPoly Su = partial(S, Var::x);
    const BivarPoly Sv = partial(S, Var::y);
    const BivarPoly diff = BivarPoly::monomial(2, 0) - BivarPoly::monomial(0, 2);
    const BivarPoly two_uv = BivarPoly::monomial(1, 1, Rational(2));
    const BivarPoly scale = pow(detail::radius_sq(), static_cast<unsigned>(2 * d - i - j));
    return {scale * (diff * Sv - two_uv * Su), scale * (diff * Su + two_uv * Sv)};
}

/// Half the sum of the diagonal (i == j) pair pieces.
inline PlanarField diagonal_part(const BivarPoly& f, const BivarPoly& g)
{
    const long d = std::max(total_degree(f), total_degree(g));
    PlanarField out;
    for (long i = 0; i <= d; ++i)
        out = out + pair_piece(f, g, i, i, d);
    out.p *= Rational(1, 2);
    out.q *= Rational(1, 2);
    return out;
}

} // namespace monodroma
