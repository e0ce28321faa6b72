#include <gtest/gtest.h>

#include "moduli/uq_sl2.hpp"

using namespace moduli;

TEST(BuildRep, TrivialRepresentation) {
    const RepMatrices rep = build_rep(1, 5);
    EXPECT_TRUE(rep.X(0, 0).is_zero());
    EXPECT_TRUE(rep.Y(0, 0).is_zero());
    EXPECT_EQ(rep.K(0, 0), CyclotomicElement::one(5));
}

TEST(BuildRep, TwoDimensional) {
    const RepMatrices rep = build_rep(2, 5);
    EXPECT_EQ(rep.K(0, 0), t_pow(-1, 5));
    EXPECT_EQ(rep.K(1, 1), t_pow(1, 5));
    // X e_{-1/2} = [1] e_{1/2}
    EXPECT_EQ(rep.X(1, 0), quantum_integer(1, 5));
    EXPECT_TRUE(rep.X(0, 1).is_zero());
}

TEST(BuildRep, ThreeDimensional) {
    const RepMatrices rep = build_rep(3, 5);
    EXPECT_EQ(rep.X(1, 0), quantum_integer(1, 5));
    EXPECT_EQ(rep.X(2, 1), quantum_integer(2, 5));
    EXPECT_EQ(rep.Y(0, 1), quantum_integer(2, 5));
    EXPECT_EQ(rep.Y(1, 2), quantum_integer(1, 5));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j + 1) {
                EXPECT_TRUE(rep.X(i, j).is_zero());
            }
            if (i + 1 != j) {
                EXPECT_TRUE(rep.Y(i, j).is_zero());
            }
            if (i != j) {
                EXPECT_TRUE(rep.K(i, j).is_zero());
            }
        }
    }
}

TEST(BuildRep, RejectsDimensionOutOfRange) {
    EXPECT_THROW(build_rep(0, 5), std::invalid_argument);
    EXPECT_THROW(build_rep(5, 5), std::invalid_argument);
    EXPECT_THROW(build_rep(1, 2), std::invalid_argument);
}

TEST(VerifyRelations, SmallCases) {
    EXPECT_TRUE(verify_relations(2, 3).all());
    EXPECT_TRUE(verify_relations(1, 5).all());
}

TEST(VerifyRelations, SweepAllLevels) {
    for (int r = 3; r <= 12; ++r) {
        for (int k = 1; k <= r - 1; ++k) {
            const RelationReport rep = verify_relations(k, r);
            EXPECT_TRUE(rep.kx) << "k=" << k << " r=" << r;
            EXPECT_TRUE(rep.ky) << "k=" << k << " r=" << r;
            EXPECT_TRUE(rep.commutator) << "k=" << k << " r=" << r;
            EXPECT_TRUE(rep.nilpotent) << "k=" << k << " r=" << r;
            EXPECT_TRUE(rep.k_order) << "k=" << k << " r=" << r;
        }
    }
}

TEST(VerifyRelations, CommutatorDiagonalIsQuantumInteger) {
    for (int r = 3; r <= 8; ++r) {
        for (int k = 1; k <= r - 1; ++k) {
            const RepMatrices rep = build_rep(k, r);
            const CycloMatrix comm = rep.X * rep.Y - rep.Y * rep.X;
            for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
                EXPECT_EQ(comm(i, i), quantum_integer(RepMatrices::weight_of(k, i), r));
            }
        }
    }
}

TEST(VerifyRelations, JsonHasAllFiveRelations) {
    const nlohmann::json j = verify_relations(3, 4);
    EXPECT_EQ(j.at("k"), 3);
    EXPECT_EQ(j.at("r"), 4);
    int flags = 0;
    for (const auto& [key, value] : j.items()) {
        if (value.is_boolean()) {
            EXPECT_TRUE(value.get<bool>()) << key;
            ++flags;
        }
    }
    EXPECT_GE(flags, 5);
}
