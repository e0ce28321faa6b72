#pragma once

// Finite cosine polynomials sum_k a_k c_{p_k, q_k}, where the basis element
// c_{p,q} = 2 cos 2pi(px + qy) and c_{0,0} = 2. Keys are stored canonically
// (p > 0, or p = 0 and q >= 0), since c_{p,q} = c_{-p,-q}.

#include <cmath>
#include <compare>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace moduli {

struct LatticeKey {
    long long p = 0;
    long long q = 0;

    [[nodiscard]] static LatticeKey canonical(long long p, long long q) {
        if (p < 0 || (p == 0 && q < 0)) {
            return {-p, -q};
        }
        return {p, q};
    }

    [[nodiscard]] bool is_canonical() const { return p > 0 || (p == 0 && q >= 0); }

    friend auto operator<=>(const LatticeKey&, const LatticeKey&) = default;
};

template <class R>
bool coefficient_is_zero(const R& v) {
    if constexpr (requires { v.is_zero(); }) {
        return v.is_zero();
    } else {
        return v == R{};
    }
}

template <class R>
class TrigPolynomial {
public:
    using value_type = R;
    using term_map = std::map<LatticeKey, R>;

    TrigPolynomial() = default;

    /// Single term a * c_{p,q}.
    static TrigPolynomial monomial(long long p, long long q, R coeff) {
        TrigPolynomial out;
        out.add(p, q, std::move(coeff));
        return out;
    }

    /// Accumulates a * c_{p,q}; any representative of the key is accepted.
    void add(long long p, long long q, const R& coeff) {
        const LatticeKey key = LatticeKey::canonical(p, q);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!coefficient_is_zero(coeff)) {
                terms_.emplace(key, coeff);
            }
            return;
        }
        it->second += coeff;
        if (coefficient_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    [[nodiscard]] const term_map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of c_{p,q}, or `zero` when absent.
    [[nodiscard]] R coefficient(long long p, long long q, const R& zero) const {
        auto it = terms_.find(LatticeKey::canonical(p, q));
        return it == terms_.end() ? zero : it->second;
    }

    TrigPolynomial& operator+=(const TrigPolynomial& o) {
        for (const auto& [k, c] : o.terms_) {
            add(k.p, k.q, c);
        }
        return *this;
    }

    TrigPolynomial& operator-=(const TrigPolynomial& o) {
        for (const auto& [k, c] : o.terms_) {
            add(k.p, k.q, -c);
        }
        return *this;
    }

    friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
    friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }

    template <class S>
    [[nodiscard]] TrigPolynomial scaled(const S& s) const {
        TrigPolynomial out;
        for (const auto& [k, c] : terms_) {
            out.add(k.p, k.q, s * c);
        }
        return out;
    }

    template <class F>
    [[nodiscard]] auto map_coefficients(F&& f) const -> TrigPolynomial<decltype(f(std::declval<const R&>()))> {
        TrigPolynomial<decltype(f(std::declval<const R&>()))> out;
        for (const auto& [k, c] : terms_) {
            out.add(k.p, k.q, f(c));
        }
        return out;
    }

    friend bool operator==(const TrigPolynomial& a, const TrigPolynomial& b) { return a.terms_ == b.terms_; }

private:
    term_map terms_;
};

/// Equality under a ring's notion of equality (tolerant in complex mode).
template <class Ring>
bool polynomials_equal(const TrigPolynomial<typename Ring::value_type>& a,
                       const TrigPolynomial<typename Ring::value_type>& b, const Ring& ring) {
    const auto zero = ring.zero();
    for (const auto& [k, c] : a.terms()) {
        if (!ring.equal(c, b.coefficient(k.p, k.q, zero))) {
            return false;
        }
    }
    for (const auto& [k, c] : b.terms()) {
        if (!ring.equal(a.coefficient(k.p, k.q, zero), c)) {
            return false;
        }
    }
    return true;
}

/// c_{m,n} * c_{p,q} = t^D c_{m+p,n+q} + t^{-D} c_{m-p,n-q}, D = mq - np,
/// on the given (not necessarily canonical) representatives.
template <class Ring>
TrigPolynomial<typename Ring::value_type> star_monomials(long long m, long long n, long long p, long long q,
                                                         const Ring& ring) {
    const long long d = m * q - n * p;
    TrigPolynomial<typename Ring::value_type> out;
    out.add(m + p, n + q, ring.t_pow(d));
    out.add(m - p, n - q, ring.t_pow(-d));
    return out;
}

/// Bilinear extension of the noncommutative cosine product.
template <class Ring>
TrigPolynomial<typename Ring::value_type> star(const TrigPolynomial<typename Ring::value_type>& f,
                                               const TrigPolynomial<typename Ring::value_type>& g, const Ring& ring) {
    TrigPolynomial<typename Ring::value_type> out;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const long long d = a.p * b.q - a.q * b.p;
            const auto prod = ca * cb;
            out.add(a.p + b.p, a.q + b.q, ring.t_pow(d) * prod);
            out.add(a.p - b.p, a.q - b.q, ring.t_pow(-d) * prod);
        }
    }
    return out;
}

template <class Ring>
bool check_associativity(const TrigPolynomial<typename Ring::value_type>& f,
                         const TrigPolynomial<typename Ring::value_type>& g,
                         const TrigPolynomial<typename Ring::value_type>& h, const Ring& ring) {
    const auto left = star(star(f, g, ring), h, ring);
    const auto right = star(f, star(g, h, ring), ring);
    return polynomials_equal(left, right, ring);
}

/// Pointwise value of a real-coefficient cosine polynomial at (x, y).
template <class R>
double evaluate_at(const TrigPolynomial<R>& f, double x, double y) {
    double sum = 0.0;
    for (const auto& [k, c] : f.terms()) {
        sum += static_cast<double>(c) * 2.0 *
               std::cos(2.0 * std::numbers::pi * (static_cast<double>(k.p) * x + static_cast<double>(k.q) * y));
    }
    return sum;
}

}  // namespace moduli
