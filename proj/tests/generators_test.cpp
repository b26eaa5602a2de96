#include <gtest/gtest.h>

#include "starcut/generators.hpp"
#include "starcut/io.hpp"

namespace starcut {
namespace {

TEST(Generators, GraphExtremes) {
    for (std::uint64_t s : {0, 1, 99}) {
        const Graph empty = gen_random_graph(5, 0.0, s);
        EXPECT_EQ(empty.order(), 5u);
        EXPECT_EQ(empty.size(), 0u);
        EXPECT_EQ(gen_random_graph(4, 1.0, s), complete_graph(4));
    }
    EXPECT_THROW(gen_random_graph(3, 1.5, 0), std::invalid_argument);
}

TEST(Generators, SeedDeterminism) {
    EXPECT_EQ(write_graph(gen_random_graph(12, 0.3, 42)), write_graph(gen_random_graph(12, 0.3, 42)));
    EXPECT_NE(write_graph(gen_random_graph(12, 0.3, 42)), write_graph(gen_random_graph(12, 0.3, 43)));
    EXPECT_EQ(gen_random_3dm(3, 2, false, 5), gen_random_3dm(3, 2, false, 5));
    EXPECT_TRUE(is_connected(gen_connected_graph(9, 0.3, 1)));
}

TEST(Generators, PlantedMatching) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto inst = gen_random_3dm(2, 1, true, s);
        EXPECT_EQ(inst.triples.size(), 3u);
        EXPECT_TRUE(validate_3dm(inst, false));
        EXPECT_TRUE(solve_3dm(inst));
        for (std::size_t l = 1; l <= 6; ++l) EXPECT_LE(occurrences(inst)[l], 3u);
    }
}

TEST(Generators, UnsolvableByRejection) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto inst = gen_random_3dm(2, 1, false, s);
        EXPECT_FALSE(solve_3dm(inst));
    }
    // every single-triple instance with n = 1 is solvable
    EXPECT_THROW(gen_random_3dm(1, 0, false, 0, {3, 50}), std::runtime_error);
}

TEST(Generators, ConnectedGraphCounts) {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto gs = connected_graphs(n);
        EXPECT_EQ(gs.size(), expected[n]) << n;
        for (const auto& g : gs) EXPECT_TRUE(is_connected(g));
    }
}

}  // namespace
}  // namespace starcut
