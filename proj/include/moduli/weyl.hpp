#pragma once

// Weyl quantization of the pillow case at level N = 2r, computed as the
// Toeplitz quantization of the heat-smoothed symbol e^{-Delta/4N} f.
//
// Toeplitz matrix elements on the theta basis (torus), with theta_j,
// 0 <= j < N, and the symbol e^{2 pi i (p x + q y)}:
//
//   <e theta_j, theta_k> = (2N)^{-1/2} e^{pi (j^2 + k^2)/N} e^{-pi (p^2 + q^2)/2N}
//                          e^{-2 pi i q (j + p/2)/N}       if k = j + p mod N,
//
// and zero otherwise. Since ||theta_k||^2 = (2N)^{-1/2} e^{2 pi k^2 / N},
//
//   T_e theta_j = e^{pi (j^2 - k^2)/N} e^{-pi (p^2 + q^2)/2N} e^{-2 pi i q (j + p/2)/N} theta_k.
//
// The prefactor exponent is pi (j^2 - k^2)/N with the full pi; p (not its
// reduction p0 or p1) enters both the Gaussian and the phase. Both are
// checked against the quadrature oracle in the tests.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matrix.hpp"
#include "qgroup.hpp"
#include "theta.hpp"
#include "trig_polynomial.hpp"

namespace moduli {

inline constexpr const char* kZetaBasisTag = "zeta_ascending";
inline constexpr const char* kThetaBasisTag = "theta_0..N-1";

struct ComplexMatrix {
    Matrix<cplx> entries;
    std::string basis = kZetaBasisTag;

    [[nodiscard]] std::size_t dim() const noexcept { return entries.rows(); }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;
};

inline void to_json(nlohmann::json& j, const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.entries.cols(); ++c) {
            row.push_back({{"re", m.entries(i, c).real()}, {"im", m.entries(i, c).imag()}});
        }
        rows.push_back(std::move(row));
    }
    j = nlohmann::json{{"basis", m.basis}, {"dim", m.entries.rows()}, {"complex", std::move(rows)}};
}

inline void from_json(const nlohmann::json& j, ComplexMatrix& m) {
    const auto n = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("complex");
    if (rows.size() != n) {
        throw std::invalid_argument("complex matrix has wrong number of rows");
    }
    Matrix<cplx> e(n, n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw std::invalid_argument("complex matrix has wrong number of columns");
        }
        for (std::size_t c = 0; c < n; ++c) {
            e(i, c) = cplx(rows[i][c].at("re").get<double>(), rows[i][c].at("im").get<double>());
        }
    }
    m = ComplexMatrix{std::move(e), j.at("basis").get<std::string>()};
}

inline double max_abs_difference(const Matrix<cplx>& a, const Matrix<cplx>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(i, c) - b(i, c)));
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Toeplitz matrix elements in closed form

enum class LemmaRegime {
    direct,   // j + p0 < N: target j + p0
    wrapped,  // j + p0 >= N: target j + p1, p1 = p - (gamma + 1) N
};

struct ToeplitzScalar {
    long long target = 0;  // in 0..N-1
    cplx scalar;
    LemmaRegime regime = LemmaRegime::direct;
};

/// T_{e^{2 pi i (p x + q y)}} theta_j = scalar * theta_target, 0 <= j < N.
/// p = p0 + gamma N with 0 <= p0 < N.
inline ToeplitzScalar toeplitz_monomial_closed_form(long long p, long long q, long long j, int N) {
    if (N < 2 || N % 2 != 0) {
        throw std::invalid_argument("level N must be even");
    }
    if (j < 0 || j >= N) {
        throw std::invalid_argument("theta index must lie in 0..N-1");
    }
    long long p0 = p % N;
    if (p0 < 0) {
        p0 += N;
    }
    const long long gamma = (p - p0) / N;
    ToeplitzScalar out;
    if (j + p0 < N) {
        out.regime = LemmaRegime::direct;
        out.target = j + p0;
    } else {
        out.regime = LemmaRegime::wrapped;
        const long long p1 = p - (gamma + 1) * N;
        out.target = j + p1;
    }
    const double dN = N;
    const double dj = static_cast<double>(j);
    const double dk = static_cast<double>(out.target);
    const double dp = static_cast<double>(p);
    const double dq = static_cast<double>(q);
    const double magnitude = std::exp(kPi * (dj * dj - dk * dk) / dN - kPi * (dp * dp + dq * dq) / (2.0 * dN));
    out.scalar = std::polar(magnitude, -2.0 * kPi * dq * (dj + dp / 2.0) / dN);
    return out;
}

/// Heat-kernel factor e^{pi (p^2 + q^2) / 2N} turning the Toeplitz operator of
/// 2cos 2pi(px+qy) into its Weyl operator.
inline double weyl_symbol_factor(long long p, long long q, int N) {
    if (N < 6 || N % 2 != 0) {
        throw std::invalid_argument("level N must be even and >= 6");
    }
    const double dp = static_cast<double>(p);
    const double dq = static_cast<double>(q);
    return std::exp(kPi * (dp * dp + dq * dq) / (2.0 * N));
}

/// Weyl operator of 2cos 2pi(px+qy) in the zeta basis, assembled from the
/// closed-form Toeplitz scalars. zeta_j = (N/2)^{1/4} (phi_j - phi_{N-j}) with
/// phi_i = e^{-pi i^2/N} theta_i; results are folded back onto zeta labels
/// through reduce_index.
inline Matrix<cplx> weyl_cosine_matrix_closed_form(long long p, long long q, int N) {
    const int r = N / 2;
    require_level(r);
    const auto dim = static_cast<std::size_t>(r - 1);
    const double dN = N;
    Matrix<cplx> out(dim, dim, cplx{});
    const double factor = weyl_symbol_factor(p, q, N);
    for (int j = 1; j <= r - 1; ++j) {
        std::vector<cplx> phi_coeffs(static_cast<std::size_t>(N), cplx{});
        const std::pair<long long, double> sources[] = {{j, 1.0}, {N - j, -1.0}};
        for (const auto& [src, sign] : sources) {
            for (const int orientation : {1, -1}) {
                const ToeplitzScalar ts = toeplitz_monomial_closed_form(orientation * p, orientation * q, src, N);
                const double ds = static_cast<double>(src);
                const double dk = static_cast<double>(ts.target);
                // phi_src -> scalar e^{-pi src^2/N} e^{pi k^2/N} phi_k
                const double rescale = std::exp(kPi * (dk * dk - ds * ds) / dN);
                phi_coeffs[static_cast<std::size_t>(ts.target)] += sign * rescale * ts.scalar;
            }
        }
        for (int i = 0; i < N; ++i) {
            const ReducedIndex red = reduce_index(i, r);
            if (red.is_zero()) {
                continue;
            }
            // each zeta_k is read twice (slots k and N-k); average the readings
            out(static_cast<std::size_t>(red.value - 1), static_cast<std::size_t>(j - 1)) +=
                0.5 * factor * static_cast<double>(red.sign) * phi_coeffs[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

/// Quadrature oracle for Weyl operators at one level: zeta_1..zeta_{r-1} are
/// sampled once and every matrix entry is factor * <2cos * zeta_j, zeta_k>.
class WeylOracle {
public:
    explicit WeylOracle(const ThetaSpec& spec) : spec_(spec), grid_(spec), zeta_(sample_zeta_basis(grid_, spec)) {
        validate(spec);
    }

    [[nodiscard]] const ThetaSpec& spec() const noexcept { return spec_; }

    [[nodiscard]] Matrix<cplx> cosine_matrix(long long p, long long q) const {
        const int ip = static_cast<int>(p);
        const int iq = static_cast<int>(q);
        Matrix<cplx> m = zeta_.matrix({{cplx{1.0, 0.0}, TrigMonomial{ip, iq}}, {cplx{1.0, 0.0}, TrigMonomial{-ip, -iq}}});
        return m.scaled(cplx{weyl_symbol_factor(p, q, spec_.N), 0.0});
    }

    [[nodiscard]] Matrix<cplx> gram() const { return zeta_.matrix({{cplx{1.0, 0.0}, TrigMonomial{0, 0}}}); }

private:
    ThetaSpec spec_;
    TorusGrid grid_;
    SampledBasis zeta_;
};

enum class WeylMethod { closed_form, oracle };

inline ComplexMatrix weyl_cosine_matrix(long long p, long long q, const ThetaSpec& spec, WeylMethod method) {
    if (method == WeylMethod::closed_form) {
        return {weyl_cosine_matrix_closed_form(p, q, spec.N), kZetaBasisTag};
    }
    return {WeylOracle(spec).cosine_matrix(p, q), kZetaBasisTag};
}

/// op_N(f) for a finite cosine polynomial with complex coefficients.
inline ComplexMatrix op_matrix(const TrigPolynomial<cplx>& f, const ThetaSpec& spec,
                               WeylMethod method = WeylMethod::closed_form) {
    const auto dim = static_cast<std::size_t>(spec.r() - 1);
    Matrix<cplx> total(dim, dim, cplx{});
    if (method == WeylMethod::oracle) {
        const WeylOracle oracle(spec);
        for (const auto& [key, c] : f.terms()) {
            total += oracle.cosine_matrix(key.p, key.q).scaled(c);
        }
    } else {
        for (const auto& [key, c] : f.terms()) {
            total += weyl_cosine_matrix_closed_form(key.p, key.q, spec.N).scaled(c);
        }
    }
    return {std::move(total), kZetaBasisTag};
}

struct EquivalenceResult {
    long long p = 0;
    long long q = 0;
    int r = 0;
    double max_abs_deviation = 0.0;
    bool pass = false;
};

inline EquivalenceResult compare_with_qgroup(long long p, long long q, const WeylOracle& oracle, double tol) {
    const int r = oracle.spec().r();
    const Matrix<cplx> weyl = oracle.cosine_matrix(p, q);
    const Matrix<cplx> qg = cosine_operator(p, q, r).to_complex();
    const double dev = max_abs_difference(weyl, qg);
    return {p, q, r, dev, dev < tol};
}

inline EquivalenceResult compare_with_qgroup(long long p, long long q, int r, const ThetaSpec& spec, double tol) {
    if (spec.N != 2 * r) {
        throw std::invalid_argument("theta level must equal 2r");
    }
    return compare_with_qgroup(p, q, WeylOracle(spec), tol);
}

}  // namespace moduli
