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
#pragma once

#include "monodroma/poly.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monodroma {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The leading coefficient is never zero; the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> coeffs)
    {
        for (long c : coeffs)
            c_.emplace_back(c);
        trim();
    }

    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    /// (lambda - r)
    static UniPoly linear_root(const Rational& r) { return UniPoly(std::vector<Rational>{-r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const Rational& lead() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    int sign_at(const Rational& x) const { return sgn(eval(x)); }
    int sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lead()); }
    int sign_at_neg_inf() const
    {
        if (is_zero())
            return 0;
        return (degree() % 2 == 0) ? sgn(lead()) : -sgn(lead());
    }

    UniPoly derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * static_cast<unsigned long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    UniPoly& operator*=(const Rational& s)
    {
        for (auto& c : c_)
            c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator-(UniPoly a)
    {
        for (auto& c : a.c_)
            c = -c;
        return a;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

struct UniDivision {
    UniPoly quotient;
    UniPoly remainder;
};

inline UniDivision divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const long db = b.degree();
    const long da = a.degree();
    if (da < db)
        return {UniPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    const Rational& lb = b.lead();
    for (long k = da - db; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0)
            continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

/// Rescales by a positive rational so the coefficients are coprime integers.
/// Signs are preserved, which is what Sturm chains need.
inline UniPoly primitive_part(const UniPoly& p)
{
    if (p.is_zero())
        return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return p * scale;
}

inline UniPoly monic(const UniPoly& p)
{
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.lead());
}

inline UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = primitive_part(r);
    }
    return monic(a);
}

/// p / gcd(p, p'), i.e. the product of the distinct irreducible factors.
inline UniPoly square_free_part(const UniPoly& p)
{
    if (p.degree() <= 0)
        return p;
    UniPoly g = gcd(p, p.derivative());
    return primitive_part(divmod(p, g).quotient);
}

} // namespace monodroma
