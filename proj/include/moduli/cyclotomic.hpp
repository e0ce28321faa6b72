#pragma once

// Exact arithmetic in Z[t]/(t^{2r} + 1), where t = e^{i pi / 2r}.
//
// Every element is kept in canonical form: exactly 2r integer coefficients,
// coeffs[i] multiplying t^i. Structural equality is ring equality in the
// quotient ring, which is all the operator identities downstream need.

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace moduli {

inline void require_level(int r) {
    if (r < 3) {
        throw std::invalid_argument("level r must be >= 3, got " + std::to_string(r));
    }
}

class CyclotomicElement {
public:
    using coeff_type = std::int64_t;

    CyclotomicElement() = default;

    /// Zero element at level r.
    explicit CyclotomicElement(int r) : r_(r), coeffs_(static_cast<std::size_t>(2 * r), 0) {
        if (r < 1) {
            throw std::invalid_argument("cyclotomic level must be positive");
        }
    }

    CyclotomicElement(int r, std::vector<coeff_type> coeffs) : r_(r), coeffs_(std::move(coeffs)) {
        if (r < 1 || coeffs_.size() != static_cast<std::size_t>(2 * r)) {
            throw std::invalid_argument("cyclotomic element needs exactly 2r coefficients");
        }
    }

    static CyclotomicElement zero(int r) { return CyclotomicElement(r); }

    static CyclotomicElement from_int(coeff_type value, int r) {
        CyclotomicElement out(r);
        out.coeffs_[0] = value;
        return out;
    }

    static CyclotomicElement one(int r) { return from_int(1, r); }

    /// t^e for any integer e, folded with t^{2r} = -1.
    static CyclotomicElement monomial(long long e, int r, coeff_type scale = 1) {
        CyclotomicElement out(r);
        const long long period = 4LL * r;
        long long k = e % period;
        if (k < 0) {
            k += period;
        }
        if (k >= 2LL * r) {
            out.coeffs_[static_cast<std::size_t>(k - 2LL * r)] = -scale;
        } else {
            out.coeffs_[static_cast<std::size_t>(k)] = scale;
        }
        return out;
    }

    [[nodiscard]] int level() const noexcept { return r_; }
    [[nodiscard]] std::span<const coeff_type> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] coeff_type operator[](std::size_t i) const { return coeffs_.at(i); }

    [[nodiscard]] bool is_zero() const noexcept {
        for (auto c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    CyclotomicElement& operator+=(const CyclotomicElement& other) {
        check_level(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += other.coeffs_[i];
        }
        return *this;
    }

    CyclotomicElement& operator-=(const CyclotomicElement& other) {
        check_level(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= other.coeffs_[i];
        }
        return *this;
    }

    CyclotomicElement& operator*=(const CyclotomicElement& other) {
        *this = *this * other;
        return *this;
    }

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }

    friend CyclotomicElement operator-(CyclotomicElement a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
        a.check_level(b);
        const std::size_t n = a.coeffs_.size();
        CyclotomicElement out(a.r_);
        for (std::size_t i = 0; i < n; ++i) {
            const auto ai = a.coeffs_[i];
            if (ai == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const auto bj = b.coeffs_[j];
                if (bj == 0) {
                    continue;
                }
                const std::size_t k = i + j;
                if (k >= n) {
                    out.coeffs_[k - n] -= ai * bj;
                } else {
                    out.coeffs_[k] += ai * bj;
                }
            }
        }
        return out;
    }

    friend CyclotomicElement operator*(coeff_type s, CyclotomicElement a) {
        for (auto& c : a.coeffs_) {
            c *= s;
        }
        return a;
    }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        a.check_level(b);
        return a.coeffs_ == b.coeffs_;
    }

    /// Complex conjugation, t -> t^{-1}.
    [[nodiscard]] CyclotomicElement conjugate() const {
        const std::size_t n = coeffs_.size();
        CyclotomicElement out(r_);
        out.coeffs_[0] = coeffs_[0];
        // t^{-i} = -t^{2r-i} for 0 < i < 2r
        for (std::size_t i = 1; i < n; ++i) {
            out.coeffs_[n - i] = -coeffs_[i];
        }
        return out;
    }

    [[nodiscard]] std::complex<double> to_complex() const {
        std::complex<double> sum{0.0, 0.0};
        const double step = std::numbers::pi / (2.0 * r_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) {
                sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
            }
        }
        return sum;
    }

private:
    void check_level(const CyclotomicElement& other) const {
        if (r_ != other.r_) {
            throw std::invalid_argument("cyclotomic level mismatch: " + std::to_string(r_) + " vs " +
                                        std::to_string(other.r_));
        }
    }

    int r_ = 0;
    std::vector<coeff_type> coeffs_;
};

/// Canonical representative of t^e at level r.
inline CyclotomicElement t_pow(long long e, int r) {
    require_level(r);
    return CyclotomicElement::monomial(e, r);
}

inline CyclotomicElement conjugate(const CyclotomicElement& a) { return a.conjugate(); }
inline std::complex<double> to_complex(const CyclotomicElement& a) { return a.to_complex(); }

/// Quantized integer [n] in expanded Laurent form
/// t^{2(n-1)} + t^{2(n-3)} + ... + t^{-2(n-1)}, with [0] = 0 and [-n] = -[n].
inline CyclotomicElement quantum_integer(long long n, int r) {
    require_level(r);
    CyclotomicElement out(r);
    const long long m = n < 0 ? -n : n;
    for (long long e = -(m - 1); e <= m - 1; e += 2) {
        out += CyclotomicElement::monomial(2 * e, r);
    }
    return n < 0 ? -out : out;
}

inline void to_json(nlohmann::json& j, const CyclotomicElement& a) {
    j = nlohmann::json{{"r", a.level()}, {"coeffs", std::vector<std::int64_t>(a.coeffs().begin(), a.coeffs().end())}};
}

inline void from_json(const nlohmann::json& j, CyclotomicElement& a) {
    a = CyclotomicElement(j.at("r").get<int>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

}  // namespace moduli
