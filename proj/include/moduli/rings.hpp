#pragma once

// Coefficient rings for cosine polynomials. Each ring is a small context
// object that knows how to build t^D and literals in its value type:
//
//   ComplexRing     t = e^{i pi / N} as a double-precision number
//   CyclotomicRing  t exact in Z[t]/(t^{2r} + 1), N = 2r
//   FormalRing      t^D = e^{i pi D / N} expanded in h = i pi / N to order K

#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclotomic.hpp"
#include "formal_series.hpp"

namespace moduli {

struct ComplexRing {
    using value_type = std::complex<double>;

    int N = 6;
    double tol = 1e-10;

    [[nodiscard]] value_type zero() const { return {0.0, 0.0}; }
    [[nodiscard]] value_type one() const { return {1.0, 0.0}; }
    [[nodiscard]] value_type from_int(long long v) const { return {static_cast<double>(v), 0.0}; }
    [[nodiscard]] value_type from_rational(long long num, long long den) const {
        return {static_cast<double>(num) / static_cast<double>(den), 0.0};
    }
    [[nodiscard]] value_type from_decimal(const std::string& text) const { return {std::stod(text), 0.0}; }
    [[nodiscard]] value_type t_pow(long long d) const {
        return std::polar(1.0, std::numbers::pi * static_cast<double>(d % (2LL * N)) / N);
    }
    [[nodiscard]] value_type symbol(char name) const {
        if (name == 'i') {
            return {0.0, 1.0};
        }
        throw std::invalid_argument(std::string("symbol '") + name + "' is not available in complex mode");
    }
    [[nodiscard]] static bool is_zero(const value_type& v) { return v == value_type{}; }
    [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return std::abs(a - b) <= tol; }

    [[nodiscard]] static std::string format(const value_type& v) {
        std::ostringstream os;
        os << std::setprecision(std::numeric_limits<double>::max_digits10);
        os << '(' << v.real() << (std::signbit(v.imag()) ? " - " : " + ") << std::abs(v.imag()) << "*i)";
        return os.str();
    }
};

struct CyclotomicRing {
    using value_type = CyclotomicElement;

    int r = 3;

    [[nodiscard]] value_type zero() const { return CyclotomicElement::zero(r); }
    [[nodiscard]] value_type one() const { return CyclotomicElement::one(r); }
    [[nodiscard]] value_type from_int(long long v) const { return CyclotomicElement::from_int(v, r); }
    [[nodiscard]] value_type from_rational(long long num, long long den) const {
        if (den == 0 || num % den != 0) {
            throw std::invalid_argument("exact mode coefficients must be integers in Z[t]");
        }
        return from_int(num / den);
    }
    [[nodiscard]] value_type from_decimal(const std::string& text) const {
        throw std::invalid_argument("decimal literal '" + text + "' is not allowed in exact mode");
    }
    [[nodiscard]] value_type t_pow(long long d) const { return moduli::t_pow(d, r); }
    [[nodiscard]] value_type symbol(char name) const {
        throw std::invalid_argument(std::string("symbol '") + name + "' is not available in exact mode");
    }
    [[nodiscard]] static bool is_zero(const value_type& v) { return v.is_zero(); }
    [[nodiscard]] static bool equal(const value_type& a, const value_type& b) { return a == b; }

    /// Sum of monomials a*t^k, e.g. "(1 + 2*t - t^5)".
    [[nodiscard]] static std::string format(const value_type& v) {
        std::ostringstream os;
        int terms = 0;
        const auto coeffs = v.coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const auto c = coeffs[k];
            if (c == 0) {
                continue;
            }
            const auto mag = c < 0 ? -c : c;
            if (terms == 0) {
                os << (c < 0 ? "-" : "");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (k == 0) {
                os << mag;
            } else {
                if (mag != 1) {
                    os << mag << '*';
                }
                os << 't';
                if (k != 1) {
                    os << '^' << k;
                }
            }
            ++terms;
        }
        if (terms == 0) {
            return "0";
        }
        const std::string body = os.str();
        if (terms == 1 && body.front() != '-') {
            return body;
        }
        return "(" + body + ")";
    }
};

struct FormalRing {
    using value_type = FormalSeries;

    int order = 8;

    [[nodiscard]] value_type zero() const { return FormalSeries(order); }
    [[nodiscard]] value_type one() const { return FormalSeries::constant(1, order); }
    [[nodiscard]] value_type from_int(long long v) const { return FormalSeries::constant(Rational(v), order); }
    [[nodiscard]] value_type from_rational(long long num, long long den) const {
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return FormalSeries::constant(Rational(num, den), order);
    }
    [[nodiscard]] value_type from_decimal(const std::string& text) const {
        throw std::invalid_argument("decimal literal '" + text + "' is not allowed in formal mode; use a/b");
    }
    [[nodiscard]] value_type t_pow(long long d) const { return FormalSeries::t_pow(d, order); }
    [[nodiscard]] value_type symbol(char name) const {
        if (name == 'h') {
            return FormalSeries::h_pow(1, order);
        }
        throw std::invalid_argument(std::string("symbol '") + name + "' is not available in formal mode");
    }
    [[nodiscard]] static bool is_zero(const value_type& v) { return v.is_zero(); }
    [[nodiscard]] static bool equal(const value_type& a, const value_type& b) { return a == b; }

    /// Series in h = i pi / N, e.g. "(1 + h + 1/2*h^2)".
    [[nodiscard]] static std::string format(const value_type& v) {
        std::ostringstream os;
        int terms = 0;
        for (int k = 0; k <= v.order(); ++k) {
            const Rational& c = v.coeff(k);
            if (c == 0) {
                continue;
            }
            const Rational mag = c < 0 ? Rational(-c) : c;
            if (terms == 0) {
                os << (c < 0 ? "-" : "");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (k == 0) {
                os << mag.str();
            } else {
                if (mag != 1) {
                    os << mag.str() << '*';
                }
                os << 'h';
                if (k != 1) {
                    os << '^' << k;
                }
            }
            ++terms;
        }
        if (terms == 0) {
            return "0";
        }
        const std::string body = os.str();
        if (terms == 1 && body.front() != '-') {
            return body;
        }
        return "(" + body + ")";
    }
};

}  // namespace moduli
