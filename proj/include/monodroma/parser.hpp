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
 * parser.hpp
 * ----------
 * Recursive-descent parser for polynomial expressions in two variables,
 * and the matching pretty-printer. Grammar (see docs/grammar.ebnf):
 *
 *   pair    = component ";" component [ ";" ]
 *   component = name "=" expr
 *   expr    = term { ("+" | "-") term }
 *   term    = unary { "*" unary }
 *   unary   = "-" unary | power
 *   power   = primary [ "^" integer ]
 *   primary = number | variable | "(" expr ")"
 *   number  = integer [ "/" integer ]
 *
 * There is no juxtaposition and no general division: "p/q" is accepted only
 * as a rational literal between two integer literals.
 */
#pragma once

#include "monodroma/poly.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monodroma {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {})
        : std::runtime_error(format(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected))
    {
    }

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t offset, const std::string& message, const std::vector<std::string>& expected)
    {
        std::ostringstream os;
        os << "parse error at offset " << offset << ": " << message;
        if (!expected.empty()) {
            os << " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i)
                os << (i ? ", " : "") << expected[i];
            os << ")";
        }
        return os.str();
    }

    std::size_t offset_;
    std::string message_;
    std::vector<std::string> expected_;
};

using VarNames = std::array<std::string, 2>;

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t begin, std::size_t end, const VarNames& vars)
        : text_(text), pos_(begin), end_(end), vars_(vars)
    {
    }

    BivarPoly parse_all()
    {
        BivarPoly p = expr();
        skip_ws();
        if (pos_ < end_) {
            std::string msg = "unexpected '" + std::string(1, text_[pos_]) + "'";
            if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')
                msg += "; implicit multiplication is not allowed, write '*'";
            fail(pos_, msg, {"'+'", "'-'", "'*'", "end of expression"});
        }
        return p;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& msg, std::vector<std::string> expected = {}) const
    {
        // Errors at end of input point at the last byte so the offset stays inside the text.
        std::size_t off = at;
        if (!text_.empty() && off >= text_.size())
            off = text_.size() - 1;
        throw ParseError(off, msg, std::move(expected));
    }

    void skip_ws()
    {
        while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < end_ && text_[pos_] == c;
    }

    BivarPoly expr()
    {
        BivarPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BivarPoly term()
    {
        BivarPoly acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (peek('/')) {
                fail(pos_, "'/' is only allowed inside a rational literal such as 3/2");
            } else {
                return acc;
            }
        }
    }

    BivarPoly unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        return power();
    }

    BivarPoly power()
    {
        BivarPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            auto digits = integer_literal();
            if (!digits)
                fail(at, "exponent must be a non-negative integer literal", {"integer"});
            mpz_class e(*digits);
            if (e > std::numeric_limits<Exponent>::max())
                fail(at, "exponent too large");
            base = pow(base, static_cast<unsigned>(e.get_ui()));
            if (peek('^'))
                fail(pos_, "chained '^' is ambiguous, use parentheses");
        }
        return base;
    }

    std::optional<std::string> integer_literal()
    {
        std::size_t start = pos_;
        while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    BivarPoly primary()
    {
        skip_ws();
        if (pos_ >= end_)
            fail(pos_, "unexpected end of expression", {"number", "variable", "'('"});
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return variable();
        if (c == '(') {
            std::size_t open = pos_++;
            BivarPoly inner = expr();
            if (!peek(')'))
                fail(pos_ < end_ ? pos_ : open, "unbalanced parenthesis", {"')'"});
            ++pos_;
            return inner;
        }
        fail(pos_, "unexpected '" + std::string(1, c) + "'", {"number", "variable", "'('", "'-'"});
    }

    BivarPoly number()
    {
        std::size_t start = pos_;
        Rational value{mpz_class(*integer_literal())};
        if (peek('/')) {
            std::size_t slash = pos_++;
            skip_ws();
            auto den = integer_literal();
            if (!den)
                fail(slash, "'/' must be followed by an integer literal", {"integer"});
            mpz_class d(*den);
            if (d == 0)
                fail(start, "zero denominator in rational literal");
            value = Rational(value.get_num(), d);
            value.canonicalize();
        }
        return BivarPoly(value);
    }

    BivarPoly variable()
    {
        std::size_t start = pos_;
        while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == vars_[0])
            return BivarPoly::x();
        if (name == vars_[1])
            return BivarPoly::y();
        fail(start, "unknown identifier '" + std::string(name) + "'", {"'" + vars_[0] + "'", "'" + vars_[1] + "'"});
    }

    std::string_view text_;
    std::size_t pos_;
    std::size_t end_;
    VarNames vars_;
};

} // namespace detail

inline BivarPoly parse_poly(std::string_view text, const VarNames& vars = {"x", "y"})
{
    return detail::ExprParser(text, 0, text.size(), vars).parse_all();
}

/// Parses "a = <expr> ; b = <expr>" for the given component names, in
/// either order, each expression in the given variables.
inline std::pair<BivarPoly, BivarPoly> parse_pair(std::string_view text, const VarNames& names,
                                                  const VarNames& vars)
{
    std::array<std::optional<BivarPoly>, 2> parts;
    std::size_t pos = 0;
    auto clamp = [&](std::size_t off) { return (!text.empty() && off >= text.size()) ? text.size() - 1 : off; };
    auto skip_ws = [&](std::size_t& p, std::size_t end) {
        while (p < end && std::isspace(static_cast<unsigned char>(text[p])))
            ++p;
    };
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::size_t p = pos;
        skip_ws(p, end);
        if (p == end) {
            if (end == text.size())
                break;
            throw ParseError(clamp(end), "empty component", {"'" + names[0] + " = ...'", "'" + names[1] + " = ...'"});
        }
        std::size_t name_start = p;
        while (p < end && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
            ++p;
        std::string_view name = text.substr(name_start, p - name_start);
        int slot = name == names[0] ? 0 : name == names[1] ? 1 : -1;
        if (slot < 0)
            throw ParseError(clamp(name_start), "expected a component name", {"'" + names[0] + "'", "'" + names[1] + "'"});
        if (parts[static_cast<std::size_t>(slot)])
            throw ParseError(clamp(name_start), "component '" + std::string(name) + "' given twice");
        skip_ws(p, end);
        if (p >= end || text[p] != '=')
            throw ParseError(clamp(p), "expected '=' after component name", {"'='"});
        ++p;
        parts[static_cast<std::size_t>(slot)] = detail::ExprParser(text, p, end, vars).parse_all();
        pos = end == text.size() ? end : end + 1;
    }
    for (std::size_t i = 0; i < 2; ++i)
        if (!parts[i])
            throw ParseError(clamp(text.size()), "missing component '" + names[i] + "'", {"'" + names[i] + " = ...'"});
    return {std::move(*parts[0]), std::move(*parts[1])};
}

/// "f = <expr>; g = <expr>" in the variables x, y.
inline std::pair<BivarPoly, BivarPoly> parse_map(std::string_view text)
{
    return parse_pair(text, {"f", "g"}, {"x", "y"});
}

/// Renders p in the input grammar: descending total degree, then
/// descending x-exponent. Round-trips through parse_poly.
inline std::string to_string(const BivarPoly& p, const VarNames& vars = {"x", "y"})
{
    if (p.is_zero())
        return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto da = a.first.ix + a.first.iy, db = b.first.ix + b.first.iy;
        if (da != db)
            return da > db;
        return a.first.ix > b.first.ix;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        if (mag != 1 || (m.ix == 0 && m.iy == 0))
            factors.push_back(mag.get_str());
        auto push_var = [&](const std::string& name, Exponent e) {
            if (e == 1)
                factors.push_back(name);
            else if (e > 1)
                factors.push_back(name + "^" + std::to_string(e));
        };
        push_var(vars[0], m.ix);
        push_var(vars[1], m.iy);
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

} // namespace monodroma
