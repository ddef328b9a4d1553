#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "psgl2/nmonoid.hpp"

using namespace psgl2;

namespace {

NClass cls(int p, int f, long long m) { return NClass::from_integer(p, f, m); }

TEST(NClass, MonoidAddition) {
    for (long long b = 0; b < 9; ++b) EXPECT_EQ(nt_add(cls(3, 2, 0), cls(3, 2, b)), cls(3, 2, b));
    EXPECT_EQ(nt_add(cls(3, 1, 1), cls(3, 1, 1)).to_integer(), 2);
    EXPECT_EQ(nt_add(cls(3, 1, 2), cls(3, 1, 2)).to_integer(), 2);
}

TEST(NClass, AdditionMatchesIntegerOracle) {
    for (int p : {3, 5})
        for (int f : {1, 2}) {
            const long long q1 = int_pow(p, f) - 1;
            for (const auto& a : nt_enumerate(p, f))
                for (const auto& b : nt_enumerate(p, f)) {
                    long long want = a.to_integer() + b.to_integer();
                    if (want > 0) want = (want - 1) % q1 + 1;
                    EXPECT_EQ(nt_add(a, b).to_integer(), want);
                }
        }
}

TEST(NClass, GroupDifference) {
    const NClass top = NClass::top(5, 1);
    EXPECT_EQ(nt_sub_group(top, top), top);
    EXPECT_EQ(nt_sub_group(cls(5, 1, 3), cls(5, 1, 0)), cls(5, 1, 3));
    EXPECT_EQ(nt_sub_group(cls(5, 1, 1), cls(5, 1, 3)).to_integer(), 2);
    for (const auto& a : nt_enumerate(3, 2))
        for (const auto& b : nt_enumerate(3, 2))
            if (!a.is_zero()) EXPECT_EQ(nt_add(b, nt_sub_group(a, b)), a);
}

TEST(NClass, DotMinus) {
    const NClass top = NClass::top(3, 2);
    EXPECT_TRUE(nt_dotminus(top, top).is_zero());
    EXPECT_EQ(nt_dotminus(NClass::from_digits(3, {2, 1}), NClass::from_digits(3, {1, 0})),
              NClass::from_digits(3, {1, 1}));
    for (const auto& b : nt_enumerate(3, 2))
        if (!b.is_zero()) EXPECT_TRUE(nt_dotminus(b, b).is_zero());
    EXPECT_THROW(nt_dotminus(cls(3, 2, 4), cls(3, 2, 0)), std::domain_error);
}

TEST(NClass, DigitOrderIsLucas) {
    EXPECT_FALSE(nt_leq(NClass::from_digits(3, {2, 0}), NClass::from_digits(3, {1, 1})));
    for (int p : {3, 5})
        for (int f : {1, 2, 3}) {
            if (int_pow(p, f) > 125) continue;
            const int n = static_cast<int>(int_pow(p, f)) - 1;
            const auto C = oracle::pascal_mod(p, n);
            for (const auto& a : nt_enumerate(p, f))
                for (const auto& b : nt_enumerate(p, f)) {
                    const int want = C[b.to_integer()][a.to_integer()];
                    EXPECT_EQ(nt_leq(a, b), want != 0);
                    EXPECT_EQ(nt_binom_mod_p(b, a), want);
                }
        }
}

TEST(CarrySet, Examples) {
    EXPECT_EQ(carry_set(cls(3, 2, 5), cls(3, 2, 5)).indices(), (std::vector<int>{0, 1}));
    EXPECT_TRUE(carry_set(cls(3, 2, 0), cls(3, 2, 7)).is_empty());
    EXPECT_TRUE(carry_set(NClass::top(3, 2), NClass::top(3, 2)).is_full());
}

TEST(CarrySet, MatchesSchoolbookOracle) {
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}, {3, 4}})
        for (const auto& a : nt_enumerate(p, f))
            for (const auto& b : nt_enumerate(p, f))
                EXPECT_EQ(carry_set(a, b).indices(), oracle::cyclic_carries(p, f, a.to_integer(), b.to_integer()))
                    << p << "," << f << ": " << a.to_integer() << "+" << b.to_integer();
}

TEST(CarrySet, AdmissibleMeansRealizedByADecomposition) {
    EXPECT_TRUE(is_admissible(CarrySet::empty(2), cls(3, 2, 0)));
    EXPECT_FALSE(is_admissible(CarrySet::singleton(2, 0), cls(3, 2, 0)));
    EXPECT_FALSE(is_admissible(CarrySet::singleton(2, 1), NClass::from_digits(3, {0, 1})));
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        std::vector<std::set<std::uint32_t>> realized(static_cast<std::size_t>(int_pow(p, f)));
        for (const auto& a : nt_enumerate(p, f))
            for (const auto& b : nt_enumerate(p, f)) realized[nt_add(a, b).to_integer()].insert(carry_set(a, b).bits());
        for (const auto& g : nt_enumerate(p, f))
            for (std::uint32_t bits = 0; bits <= CarrySet::full_mask(f); ++bits)
                EXPECT_EQ(is_admissible(CarrySet(f, bits), g), realized[g.to_integer()].count(bits) == 1)
                    << p << "," << f << " gamma " << g.to_integer() << " J " << CarrySet(f, bits).to_string();
    }
}

TEST(CarrySet, UnionIdentity) {
    // I(a, b) and I(a + b, c) together equal I(b, c) and I(a, b + c) as multisets of columns.
    for (const auto& a : nt_enumerate(3, 2))
        for (const auto& b : nt_enumerate(3, 2))
            for (const auto& c : nt_enumerate(3, 2)) {
                std::multiset<int> lhs, rhs;
                for (int i : carry_set(a, b).indices()) lhs.insert(i);
                for (int i : carry_set(nt_add(a, b), c).indices()) lhs.insert(i);
                for (int i : carry_set(b, c).indices()) rhs.insert(i);
                for (int i : carry_set(a, nt_add(b, c)).indices()) rhs.insert(i);
                EXPECT_EQ(lhs, rhs);
            }
}

TEST(CarryTree, TwoLeavesAndZeros) {
    const std::vector<NClass> two{cls(3, 2, 5), cls(3, 2, 7)};
    const auto single = carry_multiset_tree(two, CarryTree::all_shapes(0, 2).front());
    std::vector<int> want(2, 0);
    for (int i : carry_set(two[0], two[1]).indices()) ++want[i];
    EXPECT_EQ(single, want);
    const std::vector<NClass> zeros(4, cls(3, 2, 0));
    for (const auto& t : CarryTree::all_shapes(0, 4)) EXPECT_EQ(carry_multiset_tree(zeros, t), (std::vector<int>{0, 0}));
}

TEST(CarryTree, ShapeIndependence) {
    const std::vector<NClass> fives(3, cls(3, 2, 5));
    const auto shapes3 = CarryTree::all_shapes(0, 3);
    ASSERT_EQ(shapes3.size(), 2u);
    EXPECT_EQ(carry_multiset_tree(fives, shapes3[0]), carry_multiset_tree(fives, shapes3[1]));

    std::mt19937_64 rng(20240611);
    for (int m = 3; m <= 5; ++m) {
        const auto shapes = CarryTree::all_shapes(0, m);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<NClass> leaves;
            for (int i = 0; i < m; ++i) leaves.push_back(cls(3, 2, static_cast<long long>(rng() % 9)));
            const auto ref = carry_multiset_tree(leaves, shapes.front());
            for (const auto& t : shapes) EXPECT_EQ(carry_multiset_tree(leaves, t), ref);
        }
    }
}

TEST(CarryTree, RejectsBadTrees) {
    const std::vector<NClass> two{cls(3, 1, 1), cls(3, 1, 2)};
    EXPECT_THROW(carry_multiset_tree(two, CarryTree::leaf(0)), std::invalid_argument);
    EXPECT_THROW(carry_multiset_tree(two, CarryTree::all_shapes(0, 3).front()), std::invalid_argument);
}

}  // namespace
