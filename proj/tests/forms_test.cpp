#include <gtest/gtest.h>

#include <random>

#include "zred/forms.hpp"

using namespace zred;

namespace {

UnimodularMatrix random_unimodular(std::mt19937_64& rng) {
    // products of the generators [[1,k],[0,1]] and [[0,-1],[1,0]]
    UnimodularMatrix m = UnimodularMatrix::identity();
    std::uniform_int_distribution<int> k(-4, 4);
    for (int i = 0; i < 4; ++i) {
        m = m * UnimodularMatrix(1, k(rng), 0, 1);
        m = m * UnimodularMatrix(0, -1, 1, 0);
    }
    return m;
}

Form random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-40, 40);
    return Form{c(rng), c(rng), c(rng)};
}

}  // namespace

TEST(Forms, DiscriminantExamples) {
    EXPECT_EQ(discriminant(Form{1, 3, -2}), 17);
    EXPECT_EQ(discriminant(Form{1, 5, 2}), 17);
    EXPECT_EQ(discriminant(Form{0, 1, 0}), 1);
}

TEST(Forms, Content) {
    EXPECT_EQ(content(Form{2, 10, 4}), 2);
    EXPECT_TRUE(is_primitive(Form{1, 5, 2}));
    EXPECT_TRUE(is_primitive(Form{4, 9, 4}));
    EXPECT_EQ(content(Form{-6, 0, 9}), 3);
    EXPECT_THROW(content(Form{0, 0, 0}), DomainError);
    EXPECT_THROW(is_primitive(Form{0, 0, 0}), DomainError);
}

TEST(Forms, Indefinite) {
    EXPECT_TRUE(is_indefinite(Form{1, 3, -2}));
    EXPECT_FALSE(is_indefinite(Form{1, 3, 0}));
    EXPECT_FALSE(is_indefinite(Form{1, 0, 1}));
    EXPECT_FALSE(is_indefinite_discriminant(0));
    EXPECT_FALSE(is_indefinite_discriminant(49));
    EXPECT_TRUE(is_indefinite_discriminant(5));
}

TEST(Forms, ReducedPredicates) {
    EXPECT_TRUE(is_g_reduced(Form{1, 3, -2}));
    EXPECT_FALSE(is_z_reduced(Form{1, 3, -2}));
    EXPECT_TRUE(is_z_reduced(Form{1, 5, 2}));
    EXPECT_TRUE(is_z_reduced(Form{1, 3, 1}));
    EXPECT_FALSE(is_z_reduced(Form{1, 2, 1}));   // b = a + c
    EXPECT_FALSE(is_z_reduced(Form{2, 7, 3}));   // square discriminant 25
    EXPECT_FALSE(is_g_reduced(Form{2, 3, -2}));  // square discriminant 25
    EXPECT_FALSE(is_g_reduced(Form{1, 1, -3}));  // b < |a + c|
}

TEST(Forms, ReducedImpliesIndefinite) {
    for (int a = -50; a <= 50; ++a) {
        for (int b = -50; b <= 50; ++b) {
            for (int c = -50; c <= 50; ++c) {
                const Form f{a, b, c};
                if (is_g_reduced(f) || is_z_reduced(f)) ASSERT_TRUE(is_indefinite(f)) << f;
            }
        }
    }
}

TEST(Forms, ActionExamples) {
    EXPECT_EQ(act(Form{1, 5, 2}, UnimodularMatrix(5, 1, -1, 0)), (Form{2, 5, 1}));
    EXPECT_EQ(act(Form{1, 3, -2}, UnimodularMatrix(3, 1, -1, 0)), (Form{-2, 3, 1}));
    EXPECT_EQ(act(Form{7, -3, 11}, UnimodularMatrix::identity()), (Form{7, -3, 11}));
}

TEST(Forms, NonUnimodularMatrixRejected) {
    EXPECT_THROW(UnimodularMatrix(2, 0, 0, 1), DomainError);
    EXPECT_THROW(UnimodularMatrix(1, 1, 1, 1), DomainError);
}

TEST(Forms, ActionIsRightActionAndPreservesInvariants) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Form f = random_form(rng);
        const UnimodularMatrix m = random_unimodular(rng);
        const UnimodularMatrix n = random_unimodular(rng);
        ASSERT_EQ(act(act(f, m), n), act(f, m * n));
        ASSERT_EQ(discriminant(act(f, m)), discriminant(f));
        if (f != Form{0, 0, 0}) ASSERT_EQ(content(act(f, m)), content(f));
    }
}

TEST(Forms, ReverseAndRho) {
    EXPECT_EQ(reverse(Form{1, 5, 2}), (Form{2, 5, 1}));
    EXPECT_EQ(reverse(Form{4, 9, 4}), (Form{4, 9, 4}));
    EXPECT_EQ(reverse(Form{1, 3, -2}), (Form{-2, 3, 1}));
    EXPECT_EQ(rho(Form{-2, 3, 1}), (Form{2, 3, -1}));
    EXPECT_EQ(rho(Form{1, 3, -2}), (Form{-1, 3, 2}));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Form f = random_form(rng);
        ASSERT_EQ(reverse(reverse(f)), f);
        ASSERT_EQ(rho(rho(f)), f);
        ASSERT_EQ(reverse(rho(f)), rho(reverse(f)));
    }
}

TEST(Forms, ScalarMultiple) {
    EXPECT_EQ(scalar_mul(2, Form{1, 3, -2}), (Form{2, 6, -4}));
    EXPECT_EQ(scalar_mul(1, Form{1, 5, 2}), (Form{1, 5, 2}));
    EXPECT_EQ(scalar_mul(2, Form{1, 5, 2}), (Form{2, 10, 4}));
    EXPECT_EQ(discriminant(scalar_mul(3, Form{1, 5, 2})), 9 * 17);
    EXPECT_THROW(scalar_mul(0, Form{1, 5, 2}), DomainError);
}

TEST(Forms, UnboundedCoefficients) {
    const Integer big = Integer(1) << 200;
    const Form f{big, 3 * big, -2 * big};
    EXPECT_EQ(discriminant(f), 17 * big * big);
    EXPECT_EQ(content(f), big);
    EXPECT_EQ(to_string(Form{1, -3, 2}), "(1,-3,2)");
}
