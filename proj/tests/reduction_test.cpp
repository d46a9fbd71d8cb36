#include <gtest/gtest.h>

#include <array>
#include <random>
#include <set>

#include "zred/maps.hpp"
#include "zred/oracle.hpp"
#include "zred/reduction.hpp"

using namespace zred;

namespace {

std::vector<Form> forms(std::initializer_list<std::array<int, 3>> list) {
    std::vector<Form> out;
    for (const auto& f : list) out.push_back(Form{f[0], f[1], f[2]});
    return out;
}

}  // namespace

TEST(ZagierStep, Examples) {
    EXPECT_EQ(reducing_number(Form{1, 5, 2}), 5);
    EXPECT_EQ(r_z(Form{1, 5, 2}), (Form{2, 5, 1}));
    EXPECT_EQ(r_z(Form{2, 5, 1}), (Form{4, 7, 2}));
    EXPECT_EQ(r_z(Form{1, 3, 1}), (Form{1, 3, 1}));
    EXPECT_EQ(act(Form{1, 5, 2}, r_z_matrix(Form{1, 5, 2})), r_z(Form{1, 5, 2}));
    EXPECT_THROW(r_z(Form{1, 2, 1}), DomainError);  // square discriminant
}

TEST(GaussStep, Examples) {
    EXPECT_EQ(r_g(Form{1, 3, -2}), (Form{-2, 3, 1}));
    EXPECT_EQ(r_g(Form{-2, 3, 1}), (Form{2, 1, -2}));
    EXPECT_EQ(gauss_number(Form{1, 3, -2}), 3);
    EXPECT_EQ(act(Form{1, 3, -2}, r_g_matrix(Form{1, 3, -2})), r_g(Form{1, 3, -2}));
    EXPECT_THROW(r_g(Form{1, 5, 2}), DomainError);
    EXPECT_THROW(gauss_number(Form{1, 5, 2}), DomainError);
}

TEST(Orbit, ExampleCycle) {
    const ReductionCycle c = orbit_to_cycle(Form{1, 5, 2}, ReductionOperator::z);
    EXPECT_TRUE(c.pre_period.empty());
    EXPECT_EQ(c.cycle, forms({{1, 5, 2}, {2, 5, 1}, {4, 7, 2}, {4, 9, 4}, {2, 7, 4}}));
    const ReductionCycle g = orbit_to_cycle(Form{1, 3, -2}, ReductionOperator::g);
    EXPECT_TRUE(g.pre_period.empty());
    EXPECT_EQ(g.cycle.front(), (Form{1, 3, -2}));
    EXPECT_THROW(orbit_to_cycle(Form{1, 2, 1}, ReductionOperator::z), DomainError);
}

TEST(Orbit, NonReducedFormsHaveAPrePeriod) {
    const ReductionCycle c = orbit_to_cycle(Form{1, 3, -2}, ReductionOperator::z);
    EXPECT_FALSE(c.pre_period.empty());
    for (const Form& f : c.cycle) EXPECT_TRUE(is_z_reduced(f));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> k(-1000, 1000);
    for (int i = 0; i < 300; ++i) {
        const Form f{k(rng), k(rng), k(rng)};
        if (!is_indefinite(f)) continue;
        const ReductionCycle o = orbit_to_cycle(f, ReductionOperator::z);
        for (const Form& g : o.cycle) ASSERT_TRUE(is_z_reduced(g)) << f;
        ASSERT_EQ(o.pre_period.empty(), is_z_reduced(f)) << f;
    }
}

// A form lies on its own cycle exactly when it is Z-reduced.
TEST(Orbit, PurelyPeriodicIffReduced) {
    for (int a = -30; a <= 30; ++a) {
        for (int b = -30; b <= 30; ++b) {
            for (int c = -30; c <= 30; ++c) {
                const Form f{a, b, c};
                if (!is_indefinite(f)) continue;
                ASSERT_EQ(orbit_to_cycle(f, ReductionOperator::z).pre_period.empty(), is_z_reduced(f)) << f;
            }
        }
    }
}

TEST(Enumeration, Examples) {
    EXPECT_EQ(enumerate_z_reduced(5), forms({{1, 3, 1}}));
    EXPECT_EQ(enumerate_z_reduced(8), forms({{1, 4, 2}, {2, 4, 1}}));
    const auto z17 = enumerate_z_reduced(17);
    EXPECT_EQ(std::set<Form>(z17.begin(), z17.end()),
              std::set<Form>({Form{1, 5, 2}, Form{2, 5, 1}, Form{4, 7, 2}, Form{4, 9, 4}, Form{2, 7, 4}}));
    EXPECT_EQ(enumerate_g_reduced(5), forms({{-1, 1, 1}, {1, 1, -1}}));
    const auto g17 = enumerate_g_reduced(17);
    EXPECT_NE(std::find(g17.begin(), g17.end(), Form{1, 3, -2}), g17.end());
    EXPECT_EQ(g17.size() % 2, 0u);
    EXPECT_THROW(enumerate_z_reduced(16), DomainError);
    EXPECT_THROW(enumerate_g_reduced(0), DomainError);
}

TEST(Enumeration, MatchesBruteForce) {
    for (long long delta = 2; delta <= 3000; ++delta) {
        if (!is_indefinite_discriminant(delta)) continue;
        ASSERT_EQ(enumerate_z_reduced(delta), oracle::brute_z_reduced(delta)) << delta;
        ASSERT_EQ(enumerate_g_reduced(delta), oracle::brute_g_reduced(delta)) << delta;
    }
}

TEST(Cycles, PartitionReducedForms) {
    const auto c17 = cycles(17, ReductionOperator::z);
    ASSERT_EQ(c17.size(), 1u);
    EXPECT_EQ(c17[0].cycle.size(), 5u);
    const auto c12 = cycles(12, ReductionOperator::z);
    EXPECT_EQ(c12.size(), 2u);
    EXPECT_EQ(cycles(5, ReductionOperator::z)[0].cycle, forms({{1, 3, 1}}));
    for (long long delta = 2; delta <= 2000; ++delta) {
        if (!is_indefinite_discriminant(delta)) continue;
        for (ReductionOperator op : {ReductionOperator::z, ReductionOperator::g}) {
            std::multiset<Form> seen;
            for (const ReductionCycle& c : cycles(delta, op)) {
                ASSERT_TRUE(c.pre_period.empty());
                seen.insert(c.cycle.begin(), c.cycle.end());
            }
            const auto all = op == ReductionOperator::z ? enumerate_z_reduced(delta) : enumerate_g_reduced(delta);
            ASSERT_EQ(seen, std::multiset<Form>(all.begin(), all.end())) << delta;
        }
    }
}

TEST(GaussStep, SignsAndReducedness) {
    for (long long delta = 2; delta <= 500; ++delta) {
        if (!is_indefinite_discriminant(delta)) continue;
        for (const Form& f : enumerate_g_reduced(delta)) {
            const Form g = r_g(f);
            ASSERT_TRUE(is_g_reduced(g)) << f;
            ASSERT_EQ(g.a > 0, f.a < 0) << f;
            ASSERT_EQ(discriminant(g), delta);
            if (f.a > 0) ASSERT_GT(r_g(g).a, 0);
        }
    }
}

TEST(ZagierStep, ReducingNumberAndLeadingBead) {
    for (long long delta = 2; delta <= 500; ++delta) {
        if (!is_indefinite_discriminant(delta)) continue;
        for (const Form& f : enumerate_z_reduced(delta)) {
            const Integer n = reducing_number(f);
            ASSERT_GE(n, 2) << f;
            ASSERT_EQ(n == 2, beta(f).front() >= 2) << f;
            ASSERT_TRUE(is_z_reduced(r_z(f))) << f;
        }
    }
}

TEST(Caliber, Examples) {
    EXPECT_EQ(z_caliber(Form{1, 5, 2}), 5u);
    EXPECT_EQ(z_caliber(Form{1, 3, 1}), 1u);
    EXPECT_EQ(z_caliber(Form{2, 10, 4}), 5u);
    EXPECT_EQ(z_caliber(Form{1, 3, -2}), 5u);
    EXPECT_EQ(z_caliber(Form{1, 3, -2}), oracle::slow_z_caliber(Form{1, 3, -2}));
}

TEST(Operators, ParseNames) {
    EXPECT_EQ(parse_reduction_operator("z"), ReductionOperator::z);
    EXPECT_EQ(parse_reduction_operator("g"), ReductionOperator::g);
    EXPECT_THROW(parse_reduction_operator("x"), DomainError);
    EXPECT_STREQ(to_string(ReductionOperator::g), "g");
}
