#pragma once

// The cosine star algebra as a formal deformation in h = i pi / N:
// Poisson bracket, the bidifferential operators B_k, and the checks tying
// them to the star product. Real-valued inputs use exact rational
// coefficients; every derived quantity is returned as a rational multiple
// of (i pi)^power.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "formal_series.hpp"
#include "qgroup.hpp"
#include "rings.hpp"
#include "trig_polynomial.hpp"

namespace moduli {

using RationalPolynomial = TrigPolynomial<Rational>;

/// coeffs * (i pi)^ipi_power.
struct GradedPolynomial {
    int ipi_power = 0;
    RationalPolynomial coeffs;

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        // the zero polynomial has no well-defined grade
        if (a.coeffs.empty() && b.coeffs.empty()) {
            return true;
        }
        return a.ipi_power == b.ipi_power && a.coeffs == b.coeffs;
    }
};

inline TrigPolynomial<FormalSeries> lift_to_formal(const RationalPolynomial& f, int order) {
    return f.map_coefficients([order](const Rational& c) { return FormalSeries::constant(c, order); });
}

inline TrigPolynomial<CyclotomicElement> lift_to_cyclotomic(const RationalPolynomial& f, int r) {
    return f.map_coefficients([r](const Rational& c) {
        if (denominator(c) != 1) {
            throw std::invalid_argument("exact mode needs integer coefficients");
        }
        return CyclotomicElement::from_int(static_cast<long long>(numerator(c)), r);
    });
}

/// Order-k coefficient of a formal-series polynomial, as a rational
/// multiple of (i pi)^k (the factor N^{-k} is implied).
inline GradedPolynomial order_coefficient(const TrigPolynomial<FormalSeries>& f, int k) {
    GradedPolynomial out{k, {}};
    for (const auto& [key, c] : f.terms()) {
        out.coeffs.add(key.p, key.q, c.coeff(k));
    }
    return out;
}

/// {c_{m,n}, c_{p,q}} = (1/i pi)(f_x g_y - f_y g_x)
///                    = 4 pi i (mq - np)(c_{m+p,n+q} - c_{m-p,n-q}).
inline GradedPolynomial poisson_bracket(const RationalPolynomial& f, const RationalPolynomial& g) {
    GradedPolynomial out{1, {}};
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const long long d = a.p * b.q - a.q * b.p;
            if (d == 0) {
                continue;
            }
            const Rational w = Rational(4 * d) * ca * cb;
            out.coeffs.add(a.p + b.p, a.q + b.q, w);
            out.coeffs.add(a.p - b.p, a.q - b.q, -w);
        }
    }
    return out;
}

namespace detail {

struct ExpKey {
    long long a = 0;
    long long b = 0;
    friend auto operator<=>(const ExpKey&, const ExpKey&) = default;
};

using ExpPolynomial = std::map<ExpKey, Rational>;

/// c_{p,q} = e_{(p,q)} + e_{(-p,-q)}, with c_{0,0} = 2 e_0.
inline ExpPolynomial to_exponentials(const RationalPolynomial& f) {
    ExpPolynomial out;
    for (const auto& [k, c] : f.terms()) {
        out[{k.p, k.q}] += c;
        out[{-k.p, -k.q}] += c;
    }
    return out;
}

/// Inverse of to_exponentials for symmetric (real cosine) inputs.
inline RationalPolynomial to_cosines(const ExpPolynomial& e) {
    RationalPolynomial out;
    for (const auto& [k, c] : e) {
        const LatticeKey canon = LatticeKey::canonical(k.a, k.b);
        if (canon.p != k.a || canon.q != k.b) {
            auto mirror = e.find({canon.p, canon.q});
            const Rational other = mirror == e.end() ? Rational(0) : mirror->second;
            if (other != c) {
                throw std::logic_error("exponential polynomial is not even");
            }
            continue;
        }
        // e_v + e_{-v} = c_v; the constant e_0 = c_{0,0} / 2
        out.add(k.a, k.b, (k.a == 0 && k.b == 0) ? Rational(c / 2) : c);
    }
    return out;
}

}  // namespace detail

/// B_1^k / k! applied to f (x) g and restricted to the diagonal, where
/// B_1 = (1/4 pi i) (d/dx1 d/dy2 - d/dy1 d/dx2). On exponentials
/// e_u (x) e_v the operator (1/4 pi i) det acts by (2 pi i)^2 det(u, v) / (4 pi i)
/// = i pi det(u, v). Returns coefficients of (i pi)^k.
inline GradedPolynomial bidifferential_power(const RationalPolynomial& f, const RationalPolynomial& g, int k) {
    if (k < 0) {
        throw std::invalid_argument("bidifferential order must be non-negative");
    }
    const auto ef = detail::to_exponentials(f);
    const auto eg = detail::to_exponentials(g);
    Rational k_factorial(1);
    for (int i = 2; i <= k; ++i) {
        k_factorial *= i;
    }
    detail::ExpPolynomial prod;
    for (const auto& [u, cu] : ef) {
        for (const auto& [v, cv] : eg) {
            const long long det = u.a * v.b - u.b * v.a;
            BigInt power(1);
            for (int i = 0; i < k; ++i) {
                power *= det;
            }
            const Rational w = Rational(power) / k_factorial * cu * cv;
            if (w != 0) {
                prod[{u.a + v.a, u.b + v.b}] += w;
            }
        }
    }
    return {k, detail::to_cosines(prod)};
}

inline GradedPolynomial b1(const RationalPolynomial& f, const RationalPolynomial& g) {
    return bidifferential_power(f, g, 1);
}

inline GradedPolynomial graded_difference(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (!a.coeffs.empty() && !b.coeffs.empty() && a.ipi_power != b.ipi_power) {
        throw std::invalid_argument("graded polynomials of different (i pi) powers");
    }
    return {a.coeffs.empty() ? b.ipi_power : a.ipi_power, a.coeffs - b.coeffs};
}

struct CorrespondenceReport {
    GradedPolynomial commutator_order1;       // order-N^{-1} part of f*g - g*f
    GradedPolynomial b1_antisymmetrization;   // B_1(f,g) - B_1(g,f)
    GradedPolynomial poisson;                 // {f, g}
    bool matches_b1 = false;
    bool both_zero = false;                   // commutator and bracket vanish
    std::optional<Rational> poisson_ratio;    // commutator / bracket, when uniform
};

inline CorrespondenceReport check_correspondence(const RationalPolynomial& f, const RationalPolynomial& g,
                                                 int order = 8) {
    if (order < 1) {
        throw std::invalid_argument("correspondence needs truncation order >= 1");
    }
    const FormalRing ring{order};
    const auto ff = lift_to_formal(f, order);
    const auto gf = lift_to_formal(g, order);
    CorrespondenceReport rep;
    const auto commutator = star(ff, gf, ring) - star(gf, ff, ring);
    rep.commutator_order1 = order_coefficient(commutator, 1);
    rep.b1_antisymmetrization = graded_difference(b1(f, g), b1(g, f));
    rep.poisson = poisson_bracket(f, g);
    rep.matches_b1 = rep.commutator_order1 == rep.b1_antisymmetrization;

    const auto& comm = rep.commutator_order1.coeffs;
    const auto& pb = rep.poisson.coeffs;
    rep.both_zero = comm.empty() && pb.empty();
    if (!rep.both_zero && !pb.empty()) {
        std::optional<Rational> ratio;
        bool uniform = comm.size() == pb.size();
        for (const auto& [k, c] : pb.terms()) {
            const Rational val = comm.coefficient(k.p, k.q, Rational(0)) / c;
            if (!ratio) {
                ratio = val;
            } else if (*ratio != val) {
                uniform = false;
            }
        }
        if (uniform) {
            rep.poisson_ratio = ratio;
        }
    }
    return rep;
}

/// The order-k coefficient of f*g equals B_1^k/k! (f, g) for every k <= order.
inline bool check_bk_exponential(const RationalPolynomial& f, const RationalPolynomial& g, int order) {
    if (order < 0 || order > 10) {
        throw std::invalid_argument("B_k check supports truncation order 0..10");
    }
    const FormalRing ring{order};
    const auto product = star(lift_to_formal(f, order), lift_to_formal(g, order), ring);
    for (int k = 0; k <= order; ++k) {
        if (!(order_coefficient(product, k) == bidifferential_power(f, g, k))) {
            return false;
        }
    }
    return true;
}

/// Classical pointwise product fg on the cosine basis (B_0).
inline RationalPolynomial classical_product(const RationalPolynomial& f, const RationalPolynomial& g) {
    RationalPolynomial out;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            out.add(a.p + b.p, a.q + b.q, ca * cb);
            out.add(a.p - b.p, a.q - b.q, ca * cb);
        }
    }
    return out;
}

/// c_{p,q} -> C(p,q), extended linearly.
inline ExactOperator operator_of(const TrigPolynomial<CyclotomicElement>& f, int r) {
    ExactOperator out = ExactOperator::zero(r);
    for (const auto& [k, c] : f.terms()) {
        out = out + c * cosine_operator(k.p, k.q, r);
    }
    return out;
}

/// op(f * g) == op(f) op(g) exactly at level r.
inline bool check_operator_compatibility(const TrigPolynomial<CyclotomicElement>& f,
                                         const TrigPolynomial<CyclotomicElement>& g, int r) {
    const CyclotomicRing ring{r};
    return operator_of(star(f, g, ring), r) == operator_of(f, r) * operator_of(g, r);
}

/// Resums a formal-series polynomial at N and compares with a cyclotomic one
/// evaluated through to_complex; returns the largest coefficient deviation.
inline double fixed_level_deviation(const TrigPolynomial<FormalSeries>& formal,
                                    const TrigPolynomial<CyclotomicElement>& exact, int r) {
    const int N = 2 * r;
    double worst = 0.0;
    const auto zero_exact = CyclotomicElement::zero(r);
    for (const auto& [k, c] : formal.terms()) {
        worst = std::max(worst, std::abs(c.evaluate(N) - exact.coefficient(k.p, k.q, zero_exact).to_complex()));
    }
    for (const auto& [k, c] : exact.terms()) {
        if (formal.terms().find(k) == formal.terms().end()) {
            worst = std::max(worst, std::abs(c.to_complex()));
        }
    }
    return worst;
}

}  // namespace moduli
