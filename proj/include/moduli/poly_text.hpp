#pragma once

// Text form of cosine polynomials, e.g.
//
//   2*c(1,0) + t^3*c(2,-1)                   exact mode (coefficients in Z[t])
//   (1 + h + 1/2*h^2)*c(1,1) - 3/4*c(0,0)    formal mode (h = i pi / N)
//   (0.5 + 0.866*i)*c(1,1)                   complex mode
//
// Grammar:
//   poly    := sum of terms, each term a product of factors containing
//              exactly one basis factor c(p,q)
//   factor  := integer | a/b | decimal | t[^k] | h[^k] | i | ( sum )
//
// Output uses canonical keys in ascending order, so emit() is deterministic
// and parse(emit(f)) == f.

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trig_polynomial.hpp"

namespace moduli {

class PolyParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class Ring>
class PolyParser {
public:
    using value_type = typename Ring::value_type;

    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    TrigPolynomial<value_type> parse_polynomial() {
        TrigPolynomial<value_type> out;
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        parse_term(out, negate);
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char op = get();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            parse_term(out, op == '-');
        }
        return out;
    }

private:
    void parse_term(TrigPolynomial<value_type>& out, bool negate) {
        value_type coeff = ring_.one();
        std::optional<LatticeKey> basis;
        do {
            skip_ws();
            if (peek() == 'c') {
                if (basis) {
                    fail("term has more than one basis element");
                }
                basis = parse_basis();
            } else {
                coeff = coeff * parse_factor();
            }
            skip_ws();
        } while (consume('*'));
        if (!basis) {
            fail("term lacks a basis element c(p,q)");
        }
        out.add(basis->p, basis->q, negate ? value_type(-coeff) : coeff);
    }

    LatticeKey parse_basis() {
        expect('c');
        expect('(');
        const long long p = parse_signed();
        expect(',');
        const long long q = parse_signed();
        expect(')');
        return {p, q};
    }

    value_type parse_sum() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        value_type total = parse_product();
        if (negate) {
            total = -total;
        }
        while (true) {
            skip_ws();
            if (peek() != '+' && peek() != '-') {
                break;
            }
            const bool minus = get() == '-';
            value_type next = parse_product();
            if (minus) {
                total -= next;
            } else {
                total += next;
            }
        }
        return total;
    }

    value_type parse_product() {
        value_type v = parse_factor();
        while (true) {
            skip_ws();
            if (!consume('*')) {
                break;
            }
            v = v * parse_factor();
        }
        return v;
    }

    value_type parse_factor() {
        skip_ws();
        const char ch = peek();
        if (ch == '(') {
            get();
            value_type v = parse_sum();
            expect(')');
            return v;
        }
        if (ch == 't' || ch == 'h') {
            get();
            long long e = 1;
            skip_ws();
            if (consume('^')) {
                e = parse_signed();
            }
            if (ch == 't') {
                return ring_.t_pow(e);
            }
            if (e < 0) {
                fail("negative power of h");
            }
            value_type v = ring_.one();
            const value_type h = ring_.symbol('h');
            for (long long k = 0; k < e; ++k) {
                v = v * h;
            }
            return v;
        }
        if (ch == 'i') {
            get();
            return ring_.symbol('i');
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            return parse_number();
        }
        fail("unexpected character");
    }

    value_type parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        bool decimal = false;
        if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
            decimal = true;
            if (peek() == '.') {
                ++pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
            }
            if (!at_end() && (peek() == 'e' || peek() == 'E')) {
                ++pos_;
                if (!at_end() && (peek() == '+' || peek() == '-')) {
                    ++pos_;
                }
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        if (decimal) {
            return ring_.from_decimal(token);
        }
        const long long num = std::stoll(token);
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            const long long den = parse_unsigned();
            if (den == 0) {
                fail("zero denominator");
            }
            return ring_.from_rational(num, den);
        }
        return ring_.from_int(num);
    }

    long long parse_unsigned() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    long long parse_signed() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        const long long v = parse_unsigned();
        return negate ? -v : v;
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return at_end() ? '\0' : text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw PolyParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                             std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const Ring& ring_;
};

}  // namespace detail

template <class Ring>
TrigPolynomial<typename Ring::value_type> parse_polynomial(std::string_view text, const Ring& ring) {
    return detail::PolyParser<Ring>(text, ring).parse_polynomial();
}

template <class Ring>
std::string emit_polynomial(const TrigPolynomial<typename Ring::value_type>& f, const Ring& ring) {
    (void)ring;
    if (f.empty()) {
        return "0*c(0,0)";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string coeff = Ring::format(c);
        if (coeff != "1") {
            os << coeff << '*';
        }
        os << "c(" << k.p << ',' << k.q << ')';
    }
    return os.str();
}

}  // namespace moduli
