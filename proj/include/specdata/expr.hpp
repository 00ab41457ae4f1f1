#ifndef SPECDATA_EXPR_HPP
#define SPECDATA_EXPR_HPP

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "specdata/errors.hpp"
#include "specdata/field.hpp"
#include "specdata/mpoly.hpp"
#include "specdata/unipoly.hpp"

namespace specdata {

/// A variable occurrence in an expression: a name plus bracketed indices,
/// e.g. x[2][1] or s.
struct VarRef {
    std::string name;
    std::vector<long long> indices;

    std::string to_string() const {
        std::string out = name;
        for (long long i : indices) out += "[" + std::to_string(i) + "]";
        return out;
    }
};

namespace detail {

/// Recursive-descent parser for the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-'* power
///   power  := atom ('^' nat)?
///   atom   := literal | variable | '(' expr ')'
/// Literals are integers or rationals "a/b"; there is no division operator.
template <class K>
class ExprParser {
public:
    ExprParser(const std::string& src, int nvars, std::function<int(const VarRef&)> resolve,
               const FieldDesc& field)
        : src_(src), nvars_(nvars), resolve_(std::move(resolve)), field_(field) {}

    MPoly<K> parse() {
        const MPoly<K> result = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    MPoly<K> parse_expr() {
        MPoly<K> acc = parse_term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                acc += parse_term();
            } else if (consume('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    MPoly<K> parse_term() {
        MPoly<K> acc = parse_factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                acc *= parse_factor();
            } else {
                return acc;
            }
        }
    }

    MPoly<K> parse_factor() {
        skip_ws();
        bool negate = false;
        while (consume('-')) {
            negate = !negate;
            skip_ws();
        }
        MPoly<K> p = parse_power();
        return negate ? -p : p;
    }

    MPoly<K> parse_power() {
        MPoly<K> base = parse_atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            const std::string digits = read_digits();
            if (digits.empty()) fail("expected a nonnegative integer exponent after '^'");
            return base.pow(static_cast<int>(std::stoll(digits)));
        }
        return base;
    }

    MPoly<K> parse_atom() {
        skip_ws();
        if (consume('(')) {
            MPoly<K> inner = parse_expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            return MPoly<K>::constant(nvars_, parse_literal());
        }
        if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            return MPoly<K>::variable(nvars_, resolve_(parse_var()));
        }
        fail("expected a literal, a variable, or '('");
        return MPoly<K>(nvars_);
    }

    K parse_literal() {
        const std::string num = read_digits();
        skip_ws();
        if (consume('/')) {
            skip_ws();
            const std::string den = read_digits();
            if (den.empty()) fail("expected digits after '/'");
            return parse_scalar<K>(num, field_) / parse_scalar<K>(den, field_);
        }
        return parse_scalar<K>(num, field_);
    }

    VarRef parse_var() {
        VarRef ref;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ref.name += src_[pos_++];
        for (;;) {
            skip_ws();
            if (!consume('[')) break;
            skip_ws();
            bool neg = consume('-');
            const std::string digits = read_digits();
            if (digits.empty()) fail("expected an index inside '[]'");
            skip_ws();
            if (!consume(']')) fail("expected ']'");
            ref.indices.push_back((neg ? -1 : 1) * std::stoll(digits));
        }
        return ref;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
        return out;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw BadInputError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int nvars_;
    std::function<int(const VarRef&)> resolve_;
    FieldDesc field_;
};

}  // namespace detail

/// Parse an invariant expression over the variables x[j][k] (point j in
/// 1..n, coordinate k in 1..d) into a polynomial in n*d variables.
template <class K>
MPoly<K> parse_point_polynomial(const std::string& src, int n, int d, const FieldDesc& field) {
    detail::ExprParser<K> parser(
        src, n * d,
        [n, d](const VarRef& ref) -> int {
            if (ref.name != "x" || ref.indices.size() != 2)
                throw BadInputError("unknown variable '" + ref.to_string() + "'; expected x[j][k]");
            const long long j = ref.indices[0], k = ref.indices[1];
            if (j < 1 || j > n) throw BadInputError("point index out of range in '" + ref.to_string() + "'");
            if (k < 1 || k > d) throw BadInputError("coordinate index out of range in '" + ref.to_string() + "'");
            return static_cast<int>((j - 1) * d + (k - 1));
        },
        field);
    return parser.parse();
}

/// Parse a univariate polynomial in s (e.g. "3*s^2-1/2").
template <class K>
UniPoly<K> parse_unipoly(const std::string& src, const FieldDesc& field) {
    detail::ExprParser<K> parser(
        src, 1,
        [](const VarRef& ref) -> int {
            if (ref.name != "s" || !ref.indices.empty())
                throw BadInputError("unknown variable '" + ref.to_string() + "'; expected s");
            return 0;
        },
        field);
    const MPoly<K> p = parser.parse();
    int deg = 0;
    for (const auto& [e, v] : p.terms()) deg = std::max(deg, e[0]);
    std::vector<K> coeffs(static_cast<std::size_t>(deg) + 1, K(0));
    for (const auto& [e, v] : p.terms()) coeffs[static_cast<std::size_t>(e[0])] = v;
    return UniPoly<K>(std::move(coeffs));
}

}  // namespace specdata

#endif
