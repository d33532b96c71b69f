#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace nodal {
namespace {

using testing::cycle;
using testing::dv;
using testing::md;
using testing::path;
using testing::two_components;

TEST(MultidegreeOf, Examples) {
    const Lattice two(two_components(3));
    EXPECT_EQ(two.multidegree_of(dv({0, 1})), md({3, -3}));
    const Lattice tri(cycle(3));
    EXPECT_EQ(tri.multidegree_of(dv({1, 0, 0})), md({-2, 1, 1}));
    EXPECT_TRUE(tri.multidegree_of(dv({1, 1, 1})).is_zero());
    EXPECT_THROW(tri.multidegree_of(dv({1, 0})), Error);
}

TEST(MultidegreeOf, MatchesNodeCountingAndIsAdditive) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        const std::size_t n = g.component_count();
        testing::for_each_box(n, -1, 2, [&](const std::vector<BigInt> &a) {
            const Divisor d(a);
            const Multidegree t = lattice.multidegree_of(d);
            ASSERT_EQ(t.values(), testing::oracle_multidegree(g, a));
            EXPECT_EQ(t.total(), 0);
            const Divisor e = normalize_divisor(d);
            EXPECT_EQ(lattice.multidegree_of(d + e), t + lattice.multidegree_of(e));
        });
    }
}

TEST(NormalizeDivisor, Examples) {
    EXPECT_EQ(normalize_divisor(dv({3, 1, 2})), dv({2, 0, 1}));
    EXPECT_EQ(normalize_divisor(dv({0, 0})), dv({0, 0}));
    EXPECT_EQ(normalize_divisor(dv({-1, -1, 4})), dv({0, 0, 5}));
    EXPECT_EQ(normalize_divisor(normalize_divisor(dv({-4, 7, 2}))), normalize_divisor(dv({-4, 7, 2})));
}

TEST(LambdaMembership, Examples) {
    const Lattice two(two_components(3));
    EXPECT_EQ(two.lambda_membership(md({0, 0})), dv({0, 0}));
    EXPECT_EQ(two.lambda_membership(md({3, -3})), dv({0, 1}));
    EXPECT_FALSE(two.lambda_membership(md({1, -1})));
    EXPECT_FALSE(two.lambda_membership(md({1, 0})));
    const Lattice single(testing::irreducible(2));
    EXPECT_EQ(single.lambda_membership(md({0})), dv({0}));
    EXPECT_FALSE(single.lambda_membership(md({4})));
}

TEST(LambdaMembership, RoundTripsNormalizedDivisors) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        testing::for_each_box(g.component_count(), -2, 2, [&](const std::vector<BigInt> &a) {
            const Divisor d(a);
            EXPECT_EQ(lattice.lambda_membership(lattice.multidegree_of(d)), normalize_divisor(d));
        });
    }
}

TEST(LambdaMembership, SolverAgreesWithHermiteReduction) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        testing::for_each_box(g.component_count(), -3, 3, [&](const std::vector<BigInt> &a) {
            const Multidegree t(a);
            EXPECT_EQ(lattice.lambda_membership(t).has_value(), lattice.contains(t)) << t;
        });
    }
}

TEST(Equivalent, Examples) {
    const Lattice one(two_components(1));
    EXPECT_TRUE(one.equivalent(md({1, 0}), md({0, 1})));
    const Lattice three(two_components(3));
    EXPECT_FALSE(three.equivalent(md({1, 0}), md({0, 1})));
    EXPECT_TRUE(three.equivalent(md({2, 5}), md({2, 5})));
    EXPECT_FALSE(three.equivalent(md({1, 0}), md({0, 0})));
}

TEST(Equivalent, IsAnEquivalenceRelationMatchingClassOf) {
    for (const auto &g : testing::small_corpus()) {
        if (g.component_count() > 3)
            continue;
        const Lattice lattice(g);
        std::vector<Multidegree> box;
        testing::for_each_box(g.component_count(), -1, 2, [&](const std::vector<BigInt> &a) { box.emplace_back(a); });
        for (const auto &a : box) {
            EXPECT_TRUE(lattice.equivalent(a, a));
            for (const auto &b : box) {
                const bool ab = lattice.equivalent(a, b);
                ASSERT_EQ(ab, lattice.equivalent(b, a));
                ASSERT_EQ(ab, lattice.class_of(a) == lattice.class_of(b));
                if (!ab)
                    continue;
                for (const auto &c : box) {
                    if (lattice.equivalent(b, c)) {
                        ASSERT_TRUE(lattice.equivalent(a, c));
                    }
                }
            }
        }
    }
}

TEST(ClassOf, Examples) {
    const Lattice one(two_components(1));
    EXPECT_EQ(one.class_of(md({1, 0})), one.class_of(md({0, 1})));
    const Lattice three(two_components(3));
    EXPECT_NE(three.class_of(md({1, 0})), three.class_of(md({0, 1})));
    EXPECT_EQ(three.class_of(md({1, 0})).total_degree(), 1);
}

TEST(ClassOf, InvariantUnderTwisters) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        const Multidegree base = lattice.enumerate_classes(2).back().representative;
        testing::for_each_box(g.component_count(), -2, 2, [&](const std::vector<BigInt> &a) {
            const Multidegree shifted = base + lattice.multidegree_of(Divisor(a));
            EXPECT_EQ(lattice.class_of(shifted), lattice.class_of(base));
        });
    }
}

TEST(ClassGroupOrder, Examples) {
    EXPECT_EQ(Lattice(testing::irreducible(3)).class_group_order(), 1);
    for (std::size_t delta = 1; delta <= 5; ++delta)
        EXPECT_EQ(Lattice(two_components(delta)).class_group_order(), delta);
    EXPECT_EQ(Lattice(cycle(3)).class_group_order(), 3);
}

TEST(ClassGroupOrder, EqualsSpanningTreeCount) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        EXPECT_EQ(lattice.class_group_order(), testing::brute_force_spanning_trees(g));
    }
}

TEST(EnumerateClasses, Examples) {
    const auto single = Lattice(testing::irreducible(0)).enumerate_classes(5);
    ASSERT_EQ(single.size(), 1U);
    EXPECT_EQ(single[0].representative, md({5}));
    EXPECT_EQ(Lattice(two_components(2)).enumerate_classes(1).size(), 2U);
    const Lattice tri(cycle(3));
    const auto zero = tri.enumerate_classes(0);
    EXPECT_EQ(zero.size(), 3U);
    EXPECT_NE(std::find(zero.begin(), zero.end(), tri.class_of(md({0, 0, 0}))), zero.end());
}

TEST(EnumerateClasses, CompleteDistinctAndIndependentOfDegree) {
    for (const auto &g : testing::small_corpus()) {
        const Lattice lattice(g);
        const BigInt order = lattice.class_group_order();
        for (long long d = -2; d <= 5; ++d) {
            const auto classes = lattice.enumerate_classes(d);
            ASSERT_EQ(BigInt(classes.size()), order);
            EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end()));
            std::set<Multidegree> seen;
            for (const auto &cls : classes) {
                EXPECT_EQ(cls.total_degree(), d);
                EXPECT_EQ(lattice.class_of(cls.representative), cls);
                EXPECT_TRUE(seen.insert(cls.representative).second);
            }
        }
    }
}

} // namespace
} // namespace nodal
