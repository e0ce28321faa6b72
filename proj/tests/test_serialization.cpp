#include <gtest/gtest.h>

#include <random>

#include "moduli/poly_text.hpp"
#include "moduli/star_algebra.hpp"

using namespace moduli;

TEST(PolyText, ParseExactExample) {
    const CyclotomicRing ring{5};
    const auto f = parse_polynomial("2*c(1,0) + t^3*c(2,-1)", ring);
    EXPECT_EQ(f.coefficient(1, 0, ring.zero()), CyclotomicElement::from_int(2, 5));
    EXPECT_EQ(f.coefficient(2, -1, ring.zero()), t_pow(3, 5));
    EXPECT_EQ(f.coefficient(-2, 1, ring.zero()), t_pow(3, 5));
    EXPECT_EQ(f.size(), 2u);
}

TEST(PolyText, ParseFormalExample) {
    const FormalRing ring{4};
    const auto f = parse_polynomial("(1 + h + 1/2*h^2)*c(1,1) - 3/4*c(0,0)", ring);
    const FormalSeries c11 = f.coefficient(1, 1, ring.zero());
    EXPECT_EQ(c11.coeff(0), Rational(1));
    EXPECT_EQ(c11.coeff(1), Rational(1));
    EXPECT_EQ(c11.coeff(2), Rational(1, 2));
    EXPECT_EQ(c11.coeff(3), Rational(0));
    EXPECT_EQ(f.coefficient(0, 0, ring.zero()).coeff(0), Rational(-3, 4));
}

TEST(PolyText, ParseComplexExample) {
    const ComplexRing ring{6};
    const auto f = parse_polynomial("(0.5 + 0.866*i)*c(1,1) + t*c(0,1)", ring);
    EXPECT_NEAR(std::abs(f.coefficient(1, 1, ring.zero()) - std::complex<double>(0.5, 0.866)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.coefficient(0, 1, ring.zero()) - std::polar(1.0, std::numbers::pi / 6.0)), 0.0, 1e-15);
}

TEST(PolyText, RoundTripAllRings) {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> f(-4, 4);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 50; ++i) {
        const int r = 3 + i % 6;
        const CyclotomicRing exact{r};
        TrigPolynomial<CyclotomicElement> e;
        RationalPolynomial q;
        TrigPolynomial<std::complex<double>> z;
        for (int k = 0; k < 4; ++k) {
            const int p = f(rng);
            const int qq = f(rng);
            e.add(p, qq, CyclotomicElement::from_int(c(rng), r) + t_pow(c(rng), r) + t_pow(f(rng), r));
            q.add(p, qq, Rational(c(rng), 1 + std::abs(c(rng))));
            z.add(p, qq, std::complex<double>(c(rng) / 7.0, c(rng) / 3.0));
        }
        EXPECT_EQ(parse_polynomial(emit_polynomial(e, exact), exact), e) << emit_polynomial(e, exact);

        const FormalRing formal{6};
        const auto fs = star(lift_to_formal(q, 6), lift_to_formal(q, 6), formal);
        EXPECT_EQ(parse_polynomial(emit_polynomial(fs, formal), formal), fs) << emit_polynomial(fs, formal);

        const ComplexRing complex{2 * r};
        EXPECT_EQ(parse_polynomial(emit_polynomial(z, complex), complex), z) << emit_polynomial(z, complex);
    }
}

TEST(PolyText, EmitIsCanonicalAndStable) {
    const CyclotomicRing ring{5};
    const auto a = parse_polynomial("c(0,1)*t + c(-1,0) + 2*c(1,0)", ring);
    const auto b = parse_polynomial("3*c(1,0) + t*c(0,-1)", ring);
    EXPECT_EQ(emit_polynomial(a, ring), "t*c(0,1) + 3*c(1,0)");
    EXPECT_EQ(emit_polynomial(a, ring), emit_polynomial(b, ring));
    EXPECT_EQ(emit_polynomial(TrigPolynomial<CyclotomicElement>{}, ring), "0*c(0,0)");
    EXPECT_TRUE(parse_polynomial("0*c(0,0)", ring).empty());
}

TEST(PolyText, Errors) {
    const CyclotomicRing exact{5};
    const FormalRing formal{4};
    const ComplexRing complex{10};
    EXPECT_THROW(parse_polynomial("2*c(1,0) +", exact), PolyParseError);
    EXPECT_THROW(parse_polynomial("2*t", exact), PolyParseError);
    EXPECT_THROW(parse_polynomial("c(1,0)*c(0,1)", exact), PolyParseError);
    EXPECT_THROW(parse_polynomial("c(1,0", exact), PolyParseError);
    EXPECT_THROW(parse_polynomial("c(1,0) $", exact), PolyParseError);
    EXPECT_THROW(parse_polynomial("1/0*c(1,0)", formal), PolyParseError);
    EXPECT_THROW(parse_polynomial("1/2*c(1,0)", exact), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("0.5*c(1,0)", exact), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("h*c(1,0)", exact), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("h^-1*c(1,0)", formal), PolyParseError);
    EXPECT_THROW(parse_polynomial("i*c(1,0)", formal), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("h*c(1,0)", complex), std::invalid_argument);
}

TEST(PolyText, StarResultSerializationIsDeterministic) {
    const CyclotomicRing ring{7};
    const auto f = parse_polynomial("c(1,0) + t^2*c(2,3)", ring);
    const auto g = parse_polynomial("c(0,1) - c(3,-1)", ring);
    const std::string first = emit_polynomial(star(f, g, ring), ring);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(emit_polynomial(star(f, g, ring), ring), first);
    }
    EXPECT_EQ(emit_polynomial(parse_polynomial("c(1,0)", ring), ring), "c(1,0)");
}
