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
 * poly.hpp
 * --------
 * Exact sparse bivariate polynomials over the rationals.
 *
 * A BivarPoly is a canonical map (ix, iy) -> nonzero Rational. Two equal
 * polynomials always have identical term maps, so equality and support
 * extraction are structural. Exponents are 32-bit; any arithmetic that
 * would overflow them throws std::overflow_error.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monodroma {

using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

using Exponent = std::uint32_t;

struct Monomial {
    Exponent ix = 0;
    Exponent iy = 0;

    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Exponent checked_add(Exponent a, Exponent b)
{
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw std::overflow_error("exponent overflow");
    return a + b;
}

inline Monomial operator*(Monomial a, Monomial b)
{
    return {checked_add(a.ix, b.ix), checked_add(a.iy, b.iy)};
}

/// Weight type (t1, t2) for quasi-homogeneous gradings: coprime, not both zero.
class QuasiType {
public:
    QuasiType(long t1, long t2) : t1_(t1), t2_(t2)
    {
        if (t1 < 0 || t2 < 0 || (t1 == 0 && t2 == 0))
            throw std::invalid_argument("quasi type needs non-negative weights, not both zero");
        if (std::gcd(t1, t2) != 1)
            throw std::invalid_argument("quasi type weights must be coprime");
    }

    long t1() const { return t1_; }
    long t2() const { return t2_; }
    long norm() const { return t1_ + t2_; }

    /// Quasi-degree t1*ix + t2*iy of a monomial.
    long long degree(Monomial m) const
    {
        return static_cast<long long>(t1_) * m.ix + static_cast<long long>(t2_) * m.iy;
    }

    friend bool operator==(const QuasiType&, const QuasiType&) = default;

private:
    long t1_;
    long t2_;
};

enum class Var { x, y };

class BivarPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    BivarPoly() = default;
    BivarPoly(const Rational& c) { add_term({0, 0}, c); }
    BivarPoly(long c) : BivarPoly(Rational(c)) {}

    static BivarPoly monomial(Exponent ix, Exponent iy, const Rational& c = 1)
    {
        BivarPoly p;
        p.add_term({ix, iy}, c);
        return p;
    }
    static BivarPoly x() { return monomial(1, 0); }
    static BivarPoly y() { return monomial(0, 1); }

    static BivarPoly from_terms(const std::vector<std::pair<Monomial, Rational>>& terms)
    {
        BivarPoly p;
        for (const auto& [m, c] : terms)
            p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(Monomial m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c*x^ix*y^iy, purging the entry if it cancels.
    void add_term(Monomial m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BivarPoly& operator+=(const BivarPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    BivarPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator-(BivarPoly a)
    {
        for (auto& [m, c] : a.terms_)
            c = -c;
        return a;
    }
    friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
    friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b)
    {
        BivarPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    TermMap terms_;
};

inline BivarPoly add(const BivarPoly& a, const BivarPoly& b) { return a + b; }
inline BivarPoly mul(const BivarPoly& a, const BivarPoly& b) { return a * b; }

inline BivarPoly pow(const BivarPoly& p, unsigned n)
{
    BivarPoly result(1);
    BivarPoly base = p;
    while (n > 0) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

/// Formal partial derivative with respect to x or y.
inline BivarPoly partial(const BivarPoly& p, Var var)
{
    BivarPoly r;
    for (const auto& [m, c] : p.terms()) {
        Exponent e = var == Var::x ? m.ix : m.iy;
        if (e == 0)
            continue;
        Monomial d = var == Var::x ? Monomial{m.ix - 1, m.iy} : Monomial{m.ix, m.iy - 1};
        r.add_term(d, c * e);
    }
    return r;
}

inline Rational power(const Rational& base, Exponent e)
{
    Rational result = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1u)
            result *= b;
        e >>= 1;
        if (e > 0)
            b *= b;
    }
    return result;
}

inline Rational eval(const BivarPoly& p, const Rational& x, const Rational& y)
{
    Rational sum = 0;
    for (const auto& [m, c] : p.terms())
        sum += c * power(x, m.ix) * power(y, m.iy);
    return sum;
}

struct Degrees {
    Exponent total = 0;
    Exponent x = 0;
    Exponent y = 0;

    friend bool operator==(const Degrees&, const Degrees&) = default;
};

inline Degrees degrees(const BivarPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("degrees of the zero polynomial");
    Degrees d;
    for (const auto& [m, c] : p.terms()) {
        d.total = std::max(d.total, checked_add(m.ix, m.iy));
        d.x = std::max(d.x, m.ix);
        d.y = std::max(d.y, m.iy);
    }
    return d;
}

/// Total degree, or -1 for the zero polynomial.
inline long total_degree(const BivarPoly& p)
{
    return p.is_zero() ? -1 : static_cast<long>(degrees(p).total);
}

inline Exponent min_exponent(const BivarPoly& p, Var var)
{
    if (p.is_zero())
        throw std::invalid_argument("min exponent of the zero polynomial");
    Exponent e = std::numeric_limits<Exponent>::max();
    for (const auto& [m, c] : p.terms())
        e = std::min(e, var == Var::x ? m.ix : m.iy);
    return e;
}

struct QuasiComponent {
    long long degree;
    BivarPoly poly;

    friend bool operator==(const QuasiComponent&, const QuasiComponent&) = default;
};

/// Splits p into its quasi-homogeneous pieces of type t, ascending by degree.
inline std::vector<QuasiComponent> quasi_components(const BivarPoly& p, const QuasiType& t)
{
    std::map<long long, BivarPoly> bins;
    for (const auto& [m, c] : p.terms())
        bins[t.degree(m)].add_term(m, c);
    std::vector<QuasiComponent> out;
    out.reserve(bins.size());
    for (auto& [k, poly] : bins)
        out.push_back({k, std::move(poly)});
    return out;
}

inline std::vector<QuasiComponent> homogeneous_components(const BivarPoly& p)
{
    return quasi_components(p, QuasiType(1, 1));
}

/// The homogeneous piece of total degree k (possibly zero).
inline BivarPoly homogeneous_part(const BivarPoly& p, long k)
{
    BivarPoly r;
    for (const auto& [m, c] : p.terms())
        if (static_cast<long>(m.ix) + static_cast<long>(m.iy) == k)
            r.add_term(m, c);
    return r;
}

inline bool is_quasi_homogeneous(const BivarPoly& p, const QuasiType& t, long long degree)
{
    for (const auto& [m, c] : p.terms())
        if (t.degree(m) != degree)
            return false;
    return true;
}

inline bool is_homogeneous(const BivarPoly& p)
{
    if (p.is_zero())
        return true;
    const auto first = p.terms().begin()->first;
    return is_quasi_homogeneous(p, QuasiType(1, 1), static_cast<long long>(first.ix) + first.iy);
}

/// Substitutes (x, y) -> (a, b) for polynomial a, b.
inline BivarPoly compose(const BivarPoly& p, const BivarPoly& a, const BivarPoly& b)
{
    BivarPoly r;
    std::map<Exponent, BivarPoly> apow, bpow;
    auto cached = [](std::map<Exponent, BivarPoly>& cache, const BivarPoly& base, Exponent e) -> const BivarPoly& {
        auto it = cache.find(e);
        if (it == cache.end())
            it = cache.emplace(e, pow(base, e)).first;
        return it->second;
    };
    for (const auto& [m, c] : p.terms())
        r += c * (cached(apow, a, m.ix) * cached(bpow, b, m.iy));
    return r;
}

} // namespace monodroma
