#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nodal {
namespace {

// Known counts of connected multigraphs without loops, up to isomorphism.
TEST(Enumerate, CountsUpToIsomorphism) {
    EXPECT_EQ(connected_multigraphs(1, 3).size(), 1U);
    EXPECT_EQ(connected_multigraphs(2, 3).size(), 3U); // 1, 2 or 3 parallel edges
    // Three components, at most three edges: path, path with a doubled
    // edge, triangle.
    EXPECT_EQ(connected_multigraphs(3, 3).size(), 3U);
    // Trees on four vertices: path and star.
    EXPECT_EQ(connected_multigraphs(4, 3).size(), 2U);
}

TEST(Enumerate, LoopsAreOptional) {
    const auto with = connected_multigraphs(1, 2, 2);
    EXPECT_EQ(with.size(), 3U);
    for (const auto &g : with)
        EXPECT_EQ(g.loop_count(), g.edge_count());
}

TEST(Enumerate, AllConnectedAndWithinBounds) {
    for (const auto &g : connected_multigraphs(EnumerationBounds{4, 6, 1})) {
        EXPECT_LE(g.component_count(), 4U);
        EXPECT_LE(g.edge_count(), 6U);
        EXPECT_LE(g.loop_count(), 1U);
    }
}

TEST(Harness, SmallBoundsPass) {
    const auto report = run_harness(EnumerationBounds{3, 4, 0}, 2, 2);
    EXPECT_GT(report.graphs, 0U);
    EXPECT_EQ(report.instances, report.graphs * 2);
    EXPECT_TRUE(report.failures.empty());
}

} // namespace
} // namespace nodal
