#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zred/strings.hpp"

using namespace zred;

namespace {

NatString random_nat(std::mt19937_64& rng, int min_len, int max_len, int max_entry) {
    std::uniform_int_distribution<int> len(min_len, max_len), q(1, max_entry);
    NatString s;
    for (int k = len(rng); k > 0; --k) s.emplace_back(q(rng));
    return s;
}

BinString random_bin(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), bit(0, 1);
    std::string bits;
    for (int k = len(rng); k > 0; --k) bits.push_back(bit(rng) ? '1' : '0');
    return BinString(bits);
}

BinString bin(const char* s) { return BinString(s); }

}  // namespace

TEST(StarsAndBars, Examples) {
    EXPECT_EQ(sb(nat({1, 3, 1, 1})), bin("10011"));
    EXPECT_EQ(sb(nat({1, 1})), bin("1"));
    EXPECT_EQ(sb_inv(bin("11001")), nat({1, 1, 3, 1}));
    EXPECT_EQ(sb_inv(bin("1")), nat({1, 1}));
    EXPECT_THROW(sb(nat({4})), DomainError);
    EXPECT_THROW(sb_inv(bin("000")), DomainError);
    EXPECT_THROW(sb_inv(BinString()), DomainError);
    EXPECT_THROW(BinString("10a"), DomainError);
}

TEST(StarsAndBars, BijectionAndCounts) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 3000; ++i) {
        const NatString s = random_nat(rng, 2, 10, 9);
        const BinString b = sb(s);
        ASSERT_EQ(sb_inv(b), s);
        ASSERT_EQ(weight(b), s.size() - 1);
        Integer total = 0;
        for (const Integer& q : s) total += q;
        ASSERT_EQ(Integer(length(b)), total - 1);
        const BinString c = random_bin(rng, 16);
        if (c.weight() > 0) ASSERT_EQ(sb(sb_inv(c)), c);
    }
}

TEST(NatOperators, Examples) {
    EXPECT_EQ(eta_plus(nat({3, 1, 1})), nat({1, 3, 1, 1}));
    EXPECT_EQ(eta_minus(nat({3, 1, 1})), nat({3, 1, 1, 1}));
    EXPECT_EQ(eta_plus(nat({5})), nat({1, 5}));
    EXPECT_EQ(t_g(nat({3, 1, 1})), nat({1, 1, 3}));
    EXPECT_EQ(t_g(nat({4})), nat({4}));
    EXPECT_EQ(t_z(nat({1, 3, 1, 1})), nat({1, 1, 3, 1}));
    EXPECT_EQ(t_z(nat({2, 5})), nat({1, 6}));
    EXPECT_EQ(t_z(nat({1, 4})), nat({4, 1}));
    EXPECT_THROW(t_z(nat({4})), DomainError);
    EXPECT_EQ(reversed(nat({1, 2, 3})), nat({3, 2, 1}));
}

TEST(NatOperators, ShiftIsCyclic) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const NatString s = random_nat(rng, 1, 9, 9);
        NatString r = s;
        for (std::size_t k = 0; k < s.size(); ++k) r = t_g(r);
        ASSERT_EQ(r, s);
    }
}

TEST(PinchKnead, Examples) {
    EXPECT_EQ(pinch_left(nat({3, 1, 1})), nat({1, 2, 1, 1}));
    EXPECT_EQ(pinch_left(nat({1, 4})), nat({5}));
    EXPECT_EQ(pinch_left(nat({1})), nat({1}));
    EXPECT_EQ(pinch_left(nat({})), nat({}));
    EXPECT_EQ(pinch_right(nat({1, 1, 3})), nat({1, 1, 2, 1}));
    EXPECT_EQ(pinch_both(nat({3, 1, 1})), nat({1, 2, 2}));
    EXPECT_EQ(knead(nat({1, 3, 1, 1})), nat({1, 2, 2, 1}));
}

TEST(PinchKnead, ConjugatesToZagierShift) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
        const NatString s = random_nat(rng, 2, 10, 6);
        ASSERT_EQ(pinch_both(knead(pinch_both(s))), t_z(s)) << to_string(s);
    }
}

TEST(Rotation, Examples) {
    EXPECT_EQ(rotate_bin(bin("10011")), bin("11001"));
    EXPECT_EQ(rotate_bin(bin("00111")), bin("01110"));
    EXPECT_EQ(rotate_bin(bin("10000")), bin("00001"));
    EXPECT_EQ(rotate_bin(bin("1")), bin("1"));
    EXPECT_THROW(rotate_bin(bin("000")), DomainError);
    EXPECT_EQ(rotate_left(bin("1100"), 1), bin("1001"));
}

TEST(Rotation, TransportsZagierShift) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 10000; ++i) {
        const NatString s = random_nat(rng, 2, 10, 6);
        ASSERT_EQ(rotate_bin(sb(s)), sb(t_z(s))) << to_string(s);
    }
}

TEST(Rotation, PreservesNecklace) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
        const BinString b = random_bin(rng, 14);
        if (b.weight() == 0) continue;
        BinString r = b;
        for (std::size_t k = 0; k < 2 * b.size(); ++k) {
            r = rotate_bin(r);
            ASSERT_EQ(necklace_of(r), necklace_of(b));
        }
    }
}

TEST(Necklaces, Examples) {
    EXPECT_TRUE(is_primitive_string(bin("10011")));
    EXPECT_EQ(weight(bin("10011")), 3u);
    EXPECT_EQ(length(bin("10011")), 5u);
    EXPECT_FALSE(is_primitive_string(bin("1010")));
    EXPECT_FALSE(is_primitive_string(nat({2, 1, 2, 1})));
    EXPECT_TRUE(is_primitive_string(nat({2, 1, 1})));
    EXPECT_EQ(necklace_of(bin("11001")), necklace_of(bin("10011")));
    EXPECT_EQ(necklace_of(bin("11001")).canonical, bin("00111"));
    EXPECT_NE(necklace_of(bin("1100")), necklace_of(bin("1010")));
    EXPECT_EQ(necklace_of(nat({3, 1, 2})).canonical, nat({1, 2, 3}));
}

TEST(Necklaces, AgreeWithNaiveDefinitions) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 5000; ++i) {
        const BinString b = random_bin(rng, 12);
        const std::string& s = b.bits();
        std::string least = s;
        std::size_t period = s.size();
        for (std::size_t r = 1; r <= s.size(); ++r) {
            const std::string rot = s.substr(r) + s.substr(0, r);
            least = std::min(least, rot);
            if (rot == s && s.size() % r == 0) period = std::min(period, r);
        }
        ASSERT_EQ(necklace_of(b).canonical.bits(), least) << s;
        ASSERT_EQ(minimal_period(b.view()), period) << s;
        ASSERT_EQ(is_primitive_string(b), period == s.size()) << s;
    }
}

TEST(Alternating, Examples) {
    EXPECT_TRUE(alternating_equal(AlternatingString::parse("1g1b"), AlternatingString::parse("1b1g")));
    EXPECT_TRUE(alternating_equal(AlternatingString::parse("1g01b0"), AlternatingString::parse("1g01b0")));
    EXPECT_FALSE(alternating_equal(AlternatingString::parse("1g1b00"), AlternatingString::parse("1b1g00")));
    EXPECT_FALSE(alternating_equal(AlternatingString::parse("1g1b00"), AlternatingString::parse("1g01b0")));
    EXPECT_THROW(AlternatingString::parse("1g0011b"), DomainError);  // odd weight
    EXPECT_THROW(AlternatingString::parse("1g1g"), DomainError);     // colors must alternate
    EXPECT_THROW(AlternatingString(bin("111"), 0), DomainError);
    EXPECT_THROW(AlternatingString(bin("101"), 1), DomainError);  // not a 1
    EXPECT_THROW(AlternatingString(bin("11"), 1 + 5), DomainError);
    EXPECT_EQ(to_string(AlternatingString(bin("0110"), 2)), "01b1g0");
}

TEST(Alternating, NecklaceMatchesEquality) {
    std::mt19937_64 rng(12);
    std::vector<AlternatingString> pool;
    while (pool.size() < 300) {
        const BinString b = random_bin(rng, 8);
        if (b.weight() == 0 || b.weight() % 2 != 0) continue;
        const std::size_t first = b.bits().find('1');
        const std::size_t second = b.bits().find('1', first + 1);
        pool.emplace_back(b, rng() % 2 ? first : second);
    }
    for (const auto& x : pool) {
        for (const auto& y : pool) {
            ASSERT_EQ(alternating_equal(x, y), alternating_necklace_of(x) == alternating_necklace_of(y))
                << to_string(x) << " vs " << to_string(y);
        }
    }
}
