#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "moduli/theta.hpp"

using namespace moduli;

namespace {

ThetaSpec spec_for(int N, int max_frequency = 1) {
    ThetaSpecOptions opt;
    opt.max_frequency = max_frequency;
    return make_theta_spec(N, opt);
}

cplx random_z(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> ux(0.0, 1.0);
    std::uniform_real_distribution<double> uy(lo, hi);
    const double x = ux(rng);
    return {x, uy(rng)};
}

}  // namespace

TEST(ThetaSpec, Validation) {
    EXPECT_THROW(make_theta_spec(5), std::invalid_argument);
    EXPECT_THROW(make_theta_spec(4), std::invalid_argument);
    ThetaSpecOptions bad;
    bad.quad_y = 30;
    EXPECT_THROW(make_theta_spec(6, bad), std::invalid_argument);
    bad = {};
    bad.tol = 0.0;
    EXPECT_THROW(make_theta_spec(6, bad), std::invalid_argument);
}

TEST(ThetaSpec, TruncationTailBound) {
    for (int N = 6; N <= 20; N += 2) {
        const ThetaSpec s = make_theta_spec(N);
        const double slope = 2.0 * s.max_index + 2.0 * N * s.max_imag;
        double tail = 0.0;
        for (int n = s.M + 1; n <= s.M + 200; ++n) {
            tail += 2.0 * std::exp(-kPi * (N * double(n) * n - slope * n));
        }
        EXPECT_LT(tail, s.tol / 10.0) << N;
        EXPECT_GE(s.quad_x, 2 * (2 * N + 6) + 1);
    }
}

TEST(Theta, DirectSummationExample) {
    const ThetaSpec s = spec_for(6);
    const double expected = 1.0 + std::exp(-4.0 * kPi) + std::exp(-8.0 * kPi) + std::exp(-20.0 * kPi);
    EXPECT_NEAR(theta_eval(1, {0.0, 0.0}, s).real(), expected, 1e-12);
    EXPECT_NEAR(theta_eval(1, {0.0, 0.0}, s).real(), 1.0000034873545, 1e-12);
    EXPECT_NEAR(theta_eval(1, {0.0, 0.0}, s).imag(), 0.0, 1e-15);
}

TEST(Theta, ZeroIndexAtOrigin) {
    for (int N = 6; N <= 12; N += 2) {
        const ThetaSpec s = spec_for(N);
        EXPECT_NEAR(theta_eval(0, {0.0, 0.0}, s).real(), 1.0 + 2.0 * std::exp(-kPi * N), 1e-12);
    }
}

TEST(Theta, ReflectionAtRandomPoints) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> jd(-12, 12);
    const ThetaSpec s = spec_for(8);
    for (int i = 0; i < 100; ++i) {
        const int j = jd(rng);
        const cplx z = random_z(rng, -1.0, 1.0);
        EXPECT_LT(relative_residual(theta_eval(-j, -z, s), theta_eval(j, z, s)), 1e-10);
    }
}

TEST(Theta, QuasiPeriodicity) {
    const ThetaSpec s = spec_for(6);
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        EXPECT_LT(check_quasi_periodicity(1, 1, 0, random_z(rng, -1.0, 1.0), s), 1e-10);
    }
    EXPECT_LT(check_quasi_periodicity(1, 0, 1, {0.3, -0.8}, s), 1e-9);
    EXPECT_LT(check_quasi_periodicity(1, 0, 1, {0.3, 0.2}, s), 1e-9);
    for (int i = 0; i < 50; ++i) {
        const cplx z = random_z(rng, -0.5, 0.5);
        const double N = s.N;
        const int j = i % 7 - 3;
        EXPECT_LT(relative_residual(theta_eval(j + s.N, z, s), std::exp(kPi * (N + 2.0 * j)) * theta_eval(j, z, s)),
                  1e-9);
    }
}

TEST(Theta, FoldingBeyondTruncationBox) {
    const ThetaSpec s = spec_for(6);
    const cplx z{0.2, 0.4};
    const double N = s.N;
    const cplx direct = detail::theta_series(2, z, s);
    const cplx lifted = theta_eval(2, z + cplx(0.0, 1.0), s);
    EXPECT_LT(relative_residual(lifted, std::exp(N * kPi * (cplx(1.0, 0.0) - cplx(0.0, 2.0) * z)) * direct), 1e-12);
}

TEST(Zeta, VanishesAtOriginAndForIndexR) {
    std::mt19937_64 rng(23);
    for (int r = 3; r <= 8; ++r) {
        const ThetaSpec s = spec_for(2 * r);
        for (int j = -2 * r; j <= 2 * r; ++j) {
            EXPECT_NEAR(std::abs(zeta_eval(j, {0.0, 0.0}, s)), 0.0, 1e-12);
        }
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_z(rng, -0.5, 0.5);
            const double scale = std::abs(theta_eval(r, z, s)) + std::abs(theta_eval(-r, z, s));
            EXPECT_LT(std::abs(zeta_eval(r, z, s)) / (zeta_normalization(r, s.N) * scale), 1e-12);
        }
    }
}

TEST(Zeta, IndexRulesMatchReduction) {
    std::mt19937_64 rng(24);
    for (int r = 3; r <= 8; ++r) {
        const ThetaSpec s = spec_for(2 * r);
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_z(rng, -0.5, 0.5);
            for (int k = 1; k <= r - 1; ++k) {
                EXPECT_LT(relative_residual(zeta_eval(r + k, z, s), -zeta_eval(r - k, z, s)), 1e-9);
                EXPECT_LT(relative_residual(zeta_eval(-k, z, s), -zeta_eval(k, z, s)), 1e-9);
                EXPECT_LT(relative_residual(zeta_eval(k + 2 * r, z, s), zeta_eval(k, z, s)), 1e-9);
                EXPECT_LT(relative_residual(zeta_eval(k, -z, s), -zeta_eval(k, z, s)), 1e-9);
            }
        }
    }
}

TEST(InnerProduct, ThetaOrthogonalityAndNorms) {
    const ThetaSpec s = spec_for(8);
    const double N = s.N;
    for (int j = 0; j < s.N; ++j) {
        const double expected = 0.5 * std::sqrt(2.0 / N) * std::exp(2.0 * kPi * j * j / N);
        const cplx norm = inner_product({0, 0}, j, j, s);
        EXPECT_LT(std::abs(norm - expected) / expected, 1e-8) << j;
        const int k = (j + 3) % s.N;
        const double scale = std::sqrt(expected * 0.5 * std::sqrt(2.0 / N) * std::exp(2.0 * kPi * k * k / N));
        EXPECT_LT(std::abs(inner_product({0, 0}, j, k, s)) / scale, 1e-10);
    }
}

TEST(InnerProduct, ZetaNormsAreOne) {
    for (int r = 3; r <= 6; ++r) {
        const ThetaSpec s = spec_for(2 * r);
        for (int j = 1; j <= r - 1; ++j) {
            EXPECT_NEAR(zeta_inner_product({0, 0}, j, j, s).real(), 1.0, 1e-8);
        }
    }
}

TEST(Gram, IsIdentity) {
    for (int r = 3; r <= 10; ++r) {
        const Matrix<cplx> g = gram_matrix(spec_for(2 * r));
        ASSERT_EQ(g.rows(), static_cast<std::size_t>(r - 1));
        for (std::size_t i = 0; i < g.rows(); ++i) {
            for (std::size_t j = 0; j < g.cols(); ++j) {
                EXPECT_NEAR(std::abs(g(i, j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-8) << r;
            }
        }
    }
}

TEST(Quadrature, DoublingQuadYIsStable) {
    ThetaSpecOptions opt;
    const ThetaSpec base = make_theta_spec(10, opt);
    opt.quad_y = 800;
    const ThetaSpec fine = make_theta_spec(10, opt);
    for (int j = 0; j < 10; ++j) {
        const cplx a = inner_product({1, 1}, j, (j + 1) % 10, base);
        const cplx b = inner_product({1, 1}, j, (j + 1) % 10, fine);
        EXPECT_LT(std::abs(a - b) / std::max(1.0, std::abs(b)), 1e-10);
    }
}

TEST(Cocycle, GeneratorValues) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_z(rng, -1.0, 1.0);
        const cplx expected = -std::exp(kPi * (z * cplx(1.0, -1.0) + 1.0));
        EXPECT_LT(relative_residual(cocycle_eval(z, {1, 1, 1}), expected), 1e-14);
        EXPECT_EQ(cocycle_eval(z, GroupElement::sigma()), cplx(-1.0, 0.0));
    }
}

TEST(Cocycle, ConditionAndHermitian) {
    std::mt19937_64 rng(26);
    std::uniform_int_distribution<int> t(-3, 3);
    for (int i = 0; i < 100; ++i) {
        const cplx z = random_z(rng, 0.0, 1.0);
        const GroupElement a{t(rng), t(rng), i % 2 == 0 ? 1 : -1};
        const GroupElement b{t(rng), t(rng), i % 3 == 0 ? 1 : -1};
        EXPECT_LT(verify_cocycle(z, a, b), 1e-10);
        EXPECT_LT(verify_cocycle(z, a, b, CocycleVariant::mu_nu), 1e-10);
        EXPECT_LT(verify_hermitian(z, a.m, a.n), 1e-10);
    }
}

TEST(Cocycle, MuNuVariantDiffersByParity) {
    const cplx z{0.25, 0.5};
    EXPECT_LT(relative_residual(cocycle_eval(z, {1, 0, 1}, CocycleVariant::mu_nu), -cocycle_eval(z, {1, 0, 1})), 1e-15);
    EXPECT_LT(relative_residual(cocycle_eval(z, {1, 1, 1}, CocycleVariant::mu_nu), cocycle_eval(z, {1, 1, 1})), 1e-15);
}

TEST(GroupElement, CompositionIsAssociative) {
    std::mt19937_64 rng(27);
    std::uniform_int_distribution<int> t(-3, 3);
    for (int i = 0; i < 100; ++i) {
        const GroupElement a{t(rng), t(rng), i % 2 == 0 ? 1 : -1};
        const GroupElement b{t(rng), t(rng), i % 3 == 0 ? 1 : -1};
        const GroupElement c{t(rng), t(rng), i % 5 == 0 ? 1 : -1};
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(compose(a, a.inverse()), (GroupElement{0, 0, 1}));
        const cplx z{0.3, 0.1};
        EXPECT_LT(std::abs(compose(a, b).apply(z) - a.apply(b.apply(z))), 1e-14);
    }
}

TEST(Cocycle, SectionCorrespondence) {
    std::mt19937_64 rng(28);
    for (int r = 3; r <= 6; ++r) {
        const ThetaSpec s = spec_for(2 * r);
        for (int i = 0; i < 30; ++i) {
            const int n = i % 3 - 1;
            const cplx z = random_z(rng, std::max(-1.0, -1.0 - n), std::min(1.0, 1.0 - n));
            EXPECT_LT(verify_section_correspondence(i % (2 * r), i % 5 - 2, n, z, s), 1e-9);
        }
    }
}
