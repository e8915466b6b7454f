#include <gtest/gtest.h>

#include "support/corpus.hpp"

using namespace prunres;
using prunres::testing::Generator;
using prunres::testing::ideal_of;
using prunres::testing::mono;

TEST(Lcm, Examples) {
    EXPECT_EQ(lcm(mono(3, "x1*x2"), mono(3, "x2*x3")), mono(3, "x1*x2*x3"));
    const auto m = mono(3, "x1^2*x3");
    EXPECT_EQ(lcm(m, m), m);
    EXPECT_EQ(lcm(mono(5, "x1^4"), mono(5, "x1*x4^2*x5")), mono(5, "x1^4*x4^2*x5"));
}

TEST(Lcm, AmbientMismatch) {
    EXPECT_THROW(lcm(Monomial{1, 0}, Monomial{1, 0, 0}), AmbientDimensionError);
    EXPECT_THROW(divides(Monomial{1}, Monomial{1, 0}), AmbientDimensionError);
}

TEST(Divides, Examples) {
    EXPECT_TRUE(divides(mono(2, "x2"), mono(2, "x1*x2")));
    EXPECT_FALSE(divides(mono(3, "x1*x2"), mono(3, "x2*x3")));
    EXPECT_TRUE(divides(mono(6, "x2^2*x3^2"), mono(6, "x2^2*x3^2*x6^2")));
}

TEST(Lcm, LatticeLaws) {
    Generator g(11);
    for (int k = 0; k < 300; ++k) {
        const auto a = g.monomial(4, 3), b = g.monomial(4, 3), c = g.monomial(4, 3);
        EXPECT_EQ(lcm(a, b), lcm(b, a));
        EXPECT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
        EXPECT_EQ(lcm(a, a), a);
        EXPECT_TRUE(divides(a, lcm(a, b)));
        EXPECT_EQ(divides(a, b), lcm(a, b) == b);
    }
}

TEST(Monomial, Quotient) {
    EXPECT_EQ(quotient(mono(3, "x1^2*x3"), mono(3, "x1")), mono(3, "x1*x3"));
    EXPECT_EQ(product(mono(3, "x1"), mono(3, "x1*x3")), mono(3, "x1^2*x3"));
    EXPECT_THROW(quotient(mono(3, "x1"), mono(3, "x2")), std::domain_error);
}

TEST(Monomial, Render) {
    const auto names = numbered_variables(3);
    EXPECT_EQ(to_string(mono(3, "x3*x1^2"), names), "x1^2*x3");
    EXPECT_EQ(to_string(Monomial(3), names), "1");
    EXPECT_EQ(mono(3, "x1^2*x3").total_degree(), 3u);
}

TEST(MinimalGenerators, Examples) {
    const auto r = parse_ideal("ring x y\ngens x, x*y");
    EXPECT_EQ(minimal_generators(r).generators(), std::vector<Monomial>{mono(2, "x1")});
    const auto ab = ideal_of(3, "x1*x2, x2*x3");
    EXPECT_EQ(minimal_generators(ab), ab);
    const auto dup = ideal_of(3, "x1*x2, x1*x2*x3, x2*x3, x2*x3");
    EXPECT_EQ(minimal_generators(dup), ab);
}

TEST(MinimalGenerators, IdempotentAndSameIdeal) {
    Generator g(12);
    for (int k = 0; k < 200; ++k) {
        const auto I = g.ideal(5, 8, 3);
        const auto M = minimal_generators(I);
        EXPECT_EQ(minimal_generators(M), M);
        for (const auto& gen : I.generators()) EXPECT_TRUE(M.contains(gen));
        // kept ones come in their original relative order
        std::size_t pos = 0;
        for (const auto& kept : M.generators()) {
            while (pos < I.size() && I[pos] != kept) ++pos;
            ASSERT_LT(pos, I.size());
            ++pos;
        }
        for (std::size_t a = 0; a < M.size(); ++a)
            for (std::size_t b = 0; b < M.size(); ++b)
                if (a != b) EXPECT_FALSE(divides(M[a], M[b]));
    }
}

TEST(Polarize, SquarefreeUnchanged) {
    const auto I = cycle_ideal(5);
    const auto p = polarize(I);
    EXPECT_EQ(p.ideal, I);
    EXPECT_EQ(p.origin, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Polarize, Square) {
    const auto p = polarize(parse_ideal("ring x\ngens x^2"));
    EXPECT_EQ(p.ideal.variables(), (std::vector<std::string>{"x_1", "x_2"}));
    EXPECT_EQ(p.ideal.generators(), std::vector<Monomial>{Monomial({1, 1})});
    EXPECT_EQ(p.origin, (std::vector<std::size_t>{0, 0}));
}

TEST(Polarize, TwoGenerators) {
    const auto p = polarize(parse_ideal("ring x y\ngens x^2, x*y"));
    EXPECT_EQ(p.ideal.variables(), (std::vector<std::string>{"x_1", "x_2", "y"}));
    EXPECT_EQ(p.ideal[0], Monomial({1, 1, 0}));
    EXPECT_EQ(p.ideal[1], Monomial({1, 0, 1}));
    EXPECT_TRUE(p.ideal.is_squarefree());
}

TEST(Polarize, OutputSquarefree) {
    Generator g(13);
    for (int k = 0; k < 100; ++k) {
        const auto p = polarize(g.ideal(4, 5, 3));
        EXPECT_TRUE(p.ideal.is_squarefree());
        EXPECT_EQ(p.origin.size(), p.ideal.ambient());
    }
}

TEST(MonomialIdeal, Basics) {
    const auto I = path_ideal(5);
    EXPECT_EQ(I.size(), 4u);
    EXPECT_TRUE(I.contains(mono(5, "x1*x2*x5")));
    EXPECT_FALSE(I.contains(mono(5, "x1*x3*x5")));
    EXPECT_EQ(I.slice(1, 3).generators(), (std::vector<Monomial>{I[1], I[2]}));
    EXPECT_THROW(MonomialIdeal(numbered_variables(2), {Monomial{1, 0, 0}}), AmbientDimensionError);
}
