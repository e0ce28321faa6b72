#pragma once

// Truncated formal power series in h = i pi / N with exact rational
// coefficients. The order-k coefficient a_k stands for a_k (i pi)^k N^{-k},
// so every N^{-k} term carries exactly k powers of i pi by construction.

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moduli {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class FormalSeries {
public:
    FormalSeries() = default;

    /// Zero series truncated at order K.
    explicit FormalSeries(int order) : coeffs_(checked_size(order), Rational(0)) {}

    FormalSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(checked_size(order), Rational(0));
    }

    static FormalSeries constant(const Rational& c, int order) {
        FormalSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// t^D = e^{i pi D / N} = sum_k D^k / k! h^k.
    static FormalSeries t_pow(long long d, int order) {
        FormalSeries s(order);
        Rational term(1);
        for (int k = 0; k <= order; ++k) {
            s.coeffs_[static_cast<std::size_t>(k)] = term;
            term *= Rational(d);
            term /= Rational(k + 1);
        }
        return s;
    }

    /// The series variable h itself (to the power `power`).
    static FormalSeries h_pow(int power, int order) {
        if (power < 0) {
            throw std::invalid_argument("formal series has no negative powers of h");
        }
        FormalSeries s(order);
        if (power <= order) {
            s.coeffs_[static_cast<std::size_t>(power)] = 1;
        }
        return s;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    FormalSeries& operator+=(const FormalSeries& o) {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }

    FormalSeries& operator-=(const FormalSeries& o) {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        return *this;
    }

    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }

    friend FormalSeries operator-(FormalSeries a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    /// Cauchy product truncated at the common order.
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        a.check(b);
        const std::size_t n = a.coeffs_.size();
        FormalSeries out(a.order());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.coeffs_[j] != 0) {
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return out;
    }

    FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }

    friend FormalSeries operator*(const Rational& s, FormalSeries a) {
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        return a;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        a.check(b);
        return a.coeffs_ == b.coeffs_;
    }

    /// Resummation at a fixed level: sum_k a_k (i pi / N)^k.
    [[nodiscard]] std::complex<double> evaluate(int N) const {
        const std::complex<double> h(0.0, std::numbers::pi / N);
        std::complex<double> power(1.0, 0.0);
        std::complex<double> sum(0.0, 0.0);
        for (const auto& c : coeffs_) {
            sum += static_cast<double>(c) * power;
            power *= h;
        }
        return sum;
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw std::invalid_argument("truncation order must be non-negative");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    void check(const FormalSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size()) {
            throw std::invalid_argument("formal series truncation orders differ");
        }
    }

    std::vector<Rational> coeffs_;
};

}  // namespace moduli
