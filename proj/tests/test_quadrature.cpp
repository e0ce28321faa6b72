#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "moduli/quadrature.hpp"

using namespace moduli;

TEST(GaussLegendre, WeightsSumToTwo) {
    for (std::size_t n : {1u, 2u, 5u, 20u, 64u}) {
        const QuadratureRule q = gauss_legendre(n);
        EXPECT_NEAR(std::accumulate(q.weights.begin(), q.weights.end(), 0.0), 2.0, 1e-13) << n;
    }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
    for (std::size_t n = 1; n <= 20; ++n) {
        const QuadratureRule q = gauss_legendre(n);
        for (std::size_t deg = 0; deg <= 2 * n - 1; ++deg) {
            double val = 0.0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                val += q.weights[i] * std::pow(q.nodes[i], static_cast<double>(deg));
            }
            const double exact = deg % 2 == 1 ? 0.0 : 2.0 / static_cast<double>(deg + 1);
            EXPECT_NEAR(val, exact, 1e-13) << "n=" << n << " deg=" << deg;
        }
    }
}

TEST(GaussLegendre, NodesSymmetricAndSorted) {
    const QuadratureRule q = gauss_legendre(9);
    for (std::size_t i = 0; i < q.size(); ++i) {
        EXPECT_NEAR(q.nodes[i], -q.nodes[q.size() - 1 - i], 1e-15);
        if (i > 0) {
            EXPECT_LT(q.nodes[i - 1], q.nodes[i]);
        }
    }
    EXPECT_EQ(q.nodes[4], 0.0);
}

TEST(GaussLegendre, RejectsEmptyRule) {
    EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
    EXPECT_THROW(composite_gauss_legendre(0.0, 1.0, 0, 20), std::invalid_argument);
    EXPECT_THROW(periodic_trapezoid(0), std::invalid_argument);
}

TEST(CompositeGaussLegendre, GaussianWeightIntegral) {
    // int_0^1 exp(-2 N pi y^2) dy = erf(sqrt(2 N pi)) / (2 sqrt(2 N))
    for (int N : {6, 12, 20}) {
        const QuadratureRule q = composite_gauss_legendre(0.0, 1.0, 20, 20);
        double val = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            val += q.weights[i] * std::exp(-2.0 * N * std::numbers::pi * q.nodes[i] * q.nodes[i]);
        }
        const double exact = std::erf(std::sqrt(2.0 * N * std::numbers::pi)) / (2.0 * std::sqrt(2.0 * N));
        EXPECT_NEAR(val, exact, 1e-15) << N;
    }
}

TEST(PeriodicTrapezoid, ExactForBandLimited) {
    const std::size_t n = 17;
    const QuadratureRule q = periodic_trapezoid(n);
    for (int f = -16; f <= 16; ++f) {
        std::complex<double> val{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            val += q.weights[i] * std::polar(1.0, 2.0 * std::numbers::pi * f * q.nodes[i]);
        }
        EXPECT_NEAR(std::abs(val - (f == 0 ? 1.0 : 0.0)), 0.0, 1e-14) << f;
    }
}
