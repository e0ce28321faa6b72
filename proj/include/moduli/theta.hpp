#pragma once

// Theta functions of level N on the torus, the odd basis zeta_j of the
// pillow-case space H_N, the weighted L^2 inner product computed by
// quadrature, and the line-bundle cocycle.
//
//   theta_j(z) = sum_n exp(-pi (N n^2 + 2 j n) + 2 pi i z (j + N n))
//   zeta_j     = (N/2)^{1/4} exp(-pi j^2 / N) (theta_j - theta_{-j})
//   <f, g>     = int_{[0,1]^2} f conj(g) exp(-2 N pi y^2) dx dy

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "quadrature.hpp"

namespace moduli {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

struct ThetaSpec {
    int N = 0;              // level, even, N = 2r
    int M = 0;              // series truncation: |n| <= M
    int quad_x = 0;         // trapezoid nodes in x
    int quad_y = 0;         // Gauss-Legendre nodes in y (composite)
    double tol = 1e-10;     // target absolute tolerance on the series
    double max_imag = 1.0;  // |Im z| range covered by the truncation bound
    int max_index = 0;      // |j| range covered by the truncation bound (2N)

    [[nodiscard]] int r() const noexcept { return N / 2; }
};

/// Smallest M with sum_{|n|>M} exp(-pi (N n^2 - 2|j| n - 2 N |Im z| n)) < tol / 10,
/// uniformly over |j| <= max_index and |Im z| <= max_imag.
inline int truncation_radius(int N, double tol, int max_index, double max_imag) {
    const double slope = 2.0 * max_index + 2.0 * N * max_imag;
    for (int M = 1; M < 1000; ++M) {
        double tail = 0.0;
        for (int n = M + 1; n <= M + 64; ++n) {
            const double expo = -kPi * (N * double(n) * n - slope * n);
            tail += 2.0 * std::exp(std::min(expo, 700.0));
        }
        // every dropped term must be decaying for the geometric bound to apply
        if (N * double(M + 1) - slope > 0.0 && tail < tol / 10.0) {
            return M;
        }
    }
    throw std::runtime_error("theta truncation did not converge");
}

struct ThetaSpecOptions {
    double tol = 1e-10;
    int quad_y = 400;
    int max_frequency = 6;  // largest |p| of any symbol integrated against
    double max_imag = 1.0;
};

inline ThetaSpec make_theta_spec(int N, const ThetaSpecOptions& opt = {}) {
    if (N < 6 || N % 2 != 0) {
        throw std::invalid_argument("theta level N must be even and >= 6, got " + std::to_string(N));
    }
    if (opt.tol <= 0.0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (opt.quad_y < 20 || opt.quad_y % 20 != 0) {
        throw std::invalid_argument("quad_y must be a positive multiple of 20");
    }
    ThetaSpec spec;
    spec.N = N;
    spec.tol = opt.tol;
    spec.max_imag = opt.max_imag;
    spec.max_index = 2 * N;
    spec.M = truncation_radius(N, opt.tol, spec.max_index, opt.max_imag);
    spec.quad_x = 2 * (2 * N + std::abs(opt.max_frequency)) + 1;
    spec.quad_y = opt.quad_y;
    return spec;
}

inline void validate(const ThetaSpec& spec) {
    if (spec.N < 6 || spec.N % 2 != 0 || spec.M < 1 || spec.quad_x < 1 || spec.quad_y < 20 ||
        spec.quad_y % 20 != 0 || spec.max_index < 1) {
        throw std::invalid_argument("invalid theta spec");
    }
}

namespace detail {

inline cplx theta_series(long long j, cplx z, const ThetaSpec& spec) {
    const double N = spec.N;
    const double dj = static_cast<double>(j);
    cplx sum{0.0, 0.0};
    for (int n = -spec.M; n <= spec.M; ++n) {
        const double dn = n;
        const double freq = dj + N * dn;
        // -pi (N n^2 + 2 j n) + 2 pi i z freq
        const cplx expo = cplx(-kPi * (N * dn * dn + 2.0 * dj * dn), 0.0) + cplx(0.0, 2.0 * kPi * freq) * z;
        sum += std::exp(expo);
    }
    return sum;
}

}  // namespace detail

/// theta_j(z). Outside the truncation box the argument and index are folded back
/// with theta_j(z + i n) = e^{N pi (n^2 - 2 i n z)} theta_j(z) and
/// theta_{j+N} = e^{pi (N + 2 j)} theta_j.
inline cplx theta_eval(long long j, cplx z, const ThetaSpec& spec) {
    const double N = spec.N;
    if (std::abs(z.imag()) > spec.max_imag) {
        const double shift = std::round(z.imag());
        const cplx w = z - cplx(0.0, shift);
        const cplx factor = std::exp(N * kPi * (cplx(shift * shift, 0.0) - cplx(0.0, 2.0 * shift) * w));
        return factor * theta_eval(j, w, spec);
    }
    if (j > spec.max_index) {
        const long long base = j - spec.N;
        return std::exp(kPi * (N + 2.0 * static_cast<double>(base))) * theta_eval(base, z, spec);
    }
    if (j < -spec.max_index) {
        // theta_j = e^{-pi (N + 2 j)} theta_{j+N}
        return std::exp(-kPi * (N + 2.0 * static_cast<double>(j))) * theta_eval(j + spec.N, z, spec);
    }
    return detail::theta_series(j, z, spec);
}

inline double zeta_normalization(long long j, int N) {
    return std::pow(N / 2.0, 0.25) * std::exp(-kPi * static_cast<double>(j) * static_cast<double>(j) / N);
}

inline cplx zeta_eval(long long j, cplx z, const ThetaSpec& spec) {
    return zeta_normalization(j, spec.N) * (theta_eval(j, z, spec) - theta_eval(-j, z, spec));
}

/// Symbol e^{2 pi i (p x + q y)}; (0, 0) is the constant 1.
struct TrigMonomial {
    int p = 0;
    int q = 0;
};

/// Tensor grid for the torus inner product: periodic trapezoid in x,
/// composite Gauss-Legendre (20-node panels) in y. The weight
/// e^{-2 N pi y^2} is folded into the y weights.
struct TorusGrid {
    QuadratureRule x;
    QuadratureRule y;
    std::vector<double> y_weight;  // w_y * exp(-2 N pi y^2)

    explicit TorusGrid(const ThetaSpec& spec)
        : x(periodic_trapezoid(static_cast<std::size_t>(spec.quad_x))),
          y(composite_gauss_legendre(0.0, 1.0, static_cast<std::size_t>(spec.quad_y / 20), 20)) {
        y_weight.resize(y.size());
        for (std::size_t b = 0; b < y.size(); ++b) {
            y_weight[b] = y.weights[b] * std::exp(-2.0 * spec.N * kPi * y.nodes[b] * y.nodes[b]);
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return x.size() * y.size(); }
    [[nodiscard]] cplx point(std::size_t a, std::size_t b) const { return {x.nodes[a], y.nodes[b]}; }
};

/// Sampled functions on a TorusGrid; values[f][b * nx + a].
class SampledBasis {
public:
    template <class Fn>
    SampledBasis(const TorusGrid& grid, std::size_t count, Fn&& fn) : grid_(&grid), values_(count) {
        const std::size_t nx = grid.x.size();
        for (std::size_t f = 0; f < count; ++f) {
            values_[f].resize(grid.size());
            for (std::size_t b = 0; b < grid.y.size(); ++b) {
                for (std::size_t a = 0; a < nx; ++a) {
                    values_[f][b * nx + a] = fn(f, grid.point(a, b));
                }
            }
        }
    }

    [[nodiscard]] std::size_t count() const noexcept { return values_.size(); }

    /// int symbol * u * conj(v) * weight over the torus, symbol = e^{2 pi i (p x + q y)}.
    [[nodiscard]] cplx integrate(const TrigMonomial& symbol, std::size_t u, std::size_t v) const {
        const auto& g = *grid_;
        const std::size_t nx = g.x.size();
        const auto ex = phases(g.x.nodes, symbol.p);
        const auto ey = phases(g.y.nodes, symbol.q);
        const auto& fu = values_[u];
        const auto& fv = values_[v];
        cplx total{0.0, 0.0};
        for (std::size_t b = 0; b < g.y.size(); ++b) {
            cplx row{0.0, 0.0};
            for (std::size_t a = 0; a < nx; ++a) {
                row += ex[a] * fu[b * nx + a] * std::conj(fv[b * nx + a]);
            }
            total += g.y_weight[b] * ey[b] * row;
        }
        return total * g.x.weights.front();
    }

    /// Matrix M(v, u) = int symbol * u * conj(v) * weight, for a symbol given as
    /// a list of (coefficient, monomial) pairs.
    [[nodiscard]] Matrix<cplx> matrix(const std::vector<std::pair<cplx, TrigMonomial>>& symbol) const {
        const auto& g = *grid_;
        const std::size_t nx = g.x.size();
        const std::size_t n = values_.size();
        // symbol sampled once
        std::vector<cplx> s(g.size(), cplx{0.0, 0.0});
        for (const auto& [c, mono] : symbol) {
            const auto ex = phases(g.x.nodes, mono.p);
            const auto ey = phases(g.y.nodes, mono.q);
            for (std::size_t b = 0; b < g.y.size(); ++b) {
                const cplx cy = c * ey[b] * (g.y_weight[b] * g.x.weights.front());
                for (std::size_t a = 0; a < nx; ++a) {
                    s[b * nx + a] += cy * ex[a];
                }
            }
        }
        Matrix<cplx> out(n, n, cplx{0.0, 0.0});
        for (std::size_t u = 0; u < n; ++u) {
            const auto& fu = values_[u];
            for (std::size_t v = 0; v < n; ++v) {
                const auto& fv = values_[v];
                cplx acc{0.0, 0.0};
                for (std::size_t idx = 0; idx < s.size(); ++idx) {
                    acc += s[idx] * fu[idx] * std::conj(fv[idx]);
                }
                out(v, u) = acc;
            }
        }
        return out;
    }

private:
    static std::vector<cplx> phases(const std::vector<double>& nodes, int freq) {
        std::vector<cplx> out(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            out[i] = std::polar(1.0, 2.0 * kPi * freq * nodes[i]);
        }
        return out;
    }

    const TorusGrid* grid_;
    std::vector<std::vector<cplx>> values_;
};

/// int_{[0,1]^2} f theta_j conj(theta_k) e^{-2 N pi y^2} dx dy by quadrature.
inline cplx inner_product(const TrigMonomial& f, long long j, long long k, const ThetaSpec& spec) {
    validate(spec);
    const TorusGrid grid(spec);
    const SampledBasis basis(grid, 2, [&](std::size_t idx, cplx z) { return theta_eval(idx == 0 ? j : k, z, spec); });
    return basis.integrate(f, 0, 1);
}

/// Same integral with the zeta basis functions.
inline cplx zeta_inner_product(const TrigMonomial& f, long long j, long long k, const ThetaSpec& spec) {
    validate(spec);
    const TorusGrid grid(spec);
    const SampledBasis basis(grid, 2, [&](std::size_t idx, cplx z) { return zeta_eval(idx == 0 ? j : k, z, spec); });
    return basis.integrate(f, 0, 1);
}

/// zeta_1 .. zeta_{r-1} sampled on the quadrature grid of `spec`.
inline SampledBasis sample_zeta_basis(const TorusGrid& grid, const ThetaSpec& spec) {
    return SampledBasis(grid, static_cast<std::size_t>(spec.r() - 1),
                        [&](std::size_t idx, cplx z) { return zeta_eval(static_cast<long long>(idx) + 1, z, spec); });
}

/// theta_0 .. theta_{N-1} sampled on the quadrature grid of `spec`.
inline SampledBasis sample_theta_basis(const TorusGrid& grid, const ThetaSpec& spec) {
    return SampledBasis(grid, static_cast<std::size_t>(spec.N),
                        [&](std::size_t idx, cplx z) { return theta_eval(static_cast<long long>(idx), z, spec); });
}

/// G(k, j) = <zeta_j, zeta_k>, j, k = 1..r-1 (0-based storage).
inline Matrix<cplx> gram_matrix(const ThetaSpec& spec) {
    validate(spec);
    const TorusGrid grid(spec);
    const SampledBasis zeta = sample_zeta_basis(grid, spec);
    return zeta.matrix({{cplx{1.0, 0.0}, TrigMonomial{0, 0}}});
}

/// |a - b| / max(|a|, |b|, floor).
inline double relative_residual(cplx a, cplx b, double floor = 1e-300) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return std::abs(a - b) / scale;
}

/// theta_j(z + m + i n) against e^{N pi (n^2 - 2 i n z)} theta_j(z), relative.
inline double check_quasi_periodicity(long long j, int m, int n, cplx z, const ThetaSpec& spec) {
    const double N = spec.N;
    const cplx lhs = theta_eval(j, z + cplx(m, n), spec);
    const cplx factor = std::exp(N * kPi * (cplx(double(n) * n, 0.0) - cplx(0.0, 2.0 * n) * z));
    return relative_residual(lhs, factor * theta_eval(j, z, spec));
}

// ---------------------------------------------------------------------------
// Line bundle cocycle on C / (Lambda u sigma Lambda)

/// z -> s z + (m + i n).
struct GroupElement {
    int m = 0;
    int n = 0;
    int s = 1;

    [[nodiscard]] cplx apply(cplx z) const { return double(s) * z + cplx(m, n); }

    [[nodiscard]] GroupElement inverse() const {
        // s z + a = w  =>  z = s (w - a)
        return {-s * m, -s * n, s};
    }

    static GroupElement sigma() { return {0, 0, -1}; }
    static GroupElement translation(int m, int n) { return {m, n, 1}; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// (outer o inner)(z) = outer(inner(z)); in the cocycle condition this is mu lambda.
inline GroupElement compose(const GroupElement& outer, const GroupElement& inner) {
    return {outer.s * inner.m + outer.m, outer.s * inner.n + outer.n, outer.s * inner.s};
}

enum class CocycleVariant {
    displayed,  // (-1)^{mn} exp(pi [z (m - i n) + (m^2 + n^2)/2])
    mu_nu,      // additionally times exp(-2 pi i (m + n)/2) = (-1)^{m+n}
};

/// chi(z, g). Generators: translations by the closed formula, chi(z, sigma) = -1.
/// A general element g = tau_a o sigma^s is extended by the cocycle condition:
/// chi(z, g) = chi(z, sigma^s) chi(s z, tau_a).
inline cplx cocycle_eval(cplx z, const GroupElement& g, CocycleVariant variant = CocycleVariant::displayed) {
    const cplx w = double(g.s) * z;
    const double m = g.m;
    const double n = g.n;
    const bool odd_mn = ((static_cast<long long>(g.m) * g.n) % 2) != 0;
    double sign = odd_mn ? -1.0 : 1.0;
    if (variant == CocycleVariant::mu_nu && ((g.m + g.n) % 2) != 0) {
        sign = -sign;
    }
    const cplx translation = sign * std::exp(kPi * (w * cplx(m, -n) + 0.5 * (m * m + n * n)));
    return g.s == 1 ? translation : -translation;
}

/// |chi(z, lambda) chi(lambda z, mu) - chi(z, mu lambda)|, relative to |chi(z, mu lambda)|.
inline double verify_cocycle(cplx z, const GroupElement& lambda, const GroupElement& mu,
                             CocycleVariant variant = CocycleVariant::displayed) {
    const cplx lhs = cocycle_eval(z, lambda, variant) * cocycle_eval(lambda.apply(z), mu, variant);
    const cplx rhs = cocycle_eval(z, compose(mu, lambda), variant);
    return relative_residual(lhs, rhs);
}

/// Hermitian weight h(z) = exp(-pi |z|^2 / 2).
inline double hermitian_weight(cplx z) { return std::exp(-0.5 * kPi * std::norm(z)); }

/// | |chi(z, tau_a)| - h(z) / h(z + a) |, relative.
inline double verify_hermitian(cplx z, int m, int n) {
    const double lhs = std::abs(cocycle_eval(z, GroupElement::translation(m, n)));
    // h(z)/h(z+a) = exp(pi/2 (|z+a|^2 - |z|^2)), formed in one exponent
    const double rhs = std::exp(0.5 * kPi * (std::norm(z + cplx(m, n)) - std::norm(z)));
    return relative_residual(lhs, rhs);
}

/// F(z) = exp(N pi z^2 / 2) theta_j(z) against chi_N = chi^N equivariance, relative.
inline double verify_section_correspondence(long long j, int m, int n, cplx z, const ThetaSpec& spec) {
    const double N = spec.N;
    const auto section = [&](cplx w) { return std::exp(0.5 * N * kPi * w * w) * theta_eval(j, w, spec); };
    const cplx lhs = section(z + cplx(m, n));
    const cplx chi = cocycle_eval(z, GroupElement::translation(m, n));
    return relative_residual(lhs, std::pow(chi, spec.N) * section(z));
}

}  // namespace moduli
