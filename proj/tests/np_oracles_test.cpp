#include <gtest/gtest.h>

#include "starcut/generators.hpp"
#include "starcut/np_oracles.hpp"

namespace starcut {
namespace {

TEST(Validate3dm, Examples) {
    const ThreeDMInstance one{1, {{1, 1, 1}}};
    EXPECT_TRUE(validate_3dm(one, false));
    EXPECT_FALSE(validate_3dm(one, true));
    const ThreeDMInstance twos{2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}}};
    EXPECT_TRUE(validate_3dm(twos, true));
}

TEST(Validate3dm, RejectsMalformed) {
    EXPECT_FALSE(validate_3dm(ThreeDMInstance{1, {{1, 1, 2}}}, false));
    EXPECT_FALSE(validate_3dm(ThreeDMInstance{1, {{0, 1, 1}}}, false));
    EXPECT_FALSE(validate_3dm(ThreeDMInstance{2, {{1, 1, 1}, {1, 1, 1}}}, false));
}

TEST(Solve3dm, Examples) {
    EXPECT_EQ(solve_3dm(ThreeDMInstance{1, {{1, 1, 1}}}), (std::vector<std::size_t>{0}));
    EXPECT_FALSE(solve_3dm(ThreeDMInstance{2, {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}}}));
    EXPECT_EQ(solve_3dm(ThreeDMInstance{2, {{1, 1, 1}, {2, 2, 2}, {1, 2, 2}}}), (std::vector<std::size_t>{0, 1}));
}

// Decision agrees with trying every n-subset of triples.
TEST(Solve3dm, AgreesWithSubsetEnumeration) {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 3;
        const std::size_t extra = std::min<std::size_t>(seed % 7, n * n * n - n);
        const bool solvable = n == 1 || seed % 2 == 0;
        ThreeDMInstance inst;
        try {
            inst = gen_random_3dm(n, extra, solvable, seed, {0, 1000});
        } catch (const std::runtime_error&) {
            continue;  // e.g. n = 2 with all 8 triples is always solvable
        }
        if (inst.triples.size() > 12) continue;
        ++checked;
        bool any = false;
        const std::size_t T = inst.triples.size();
        for (std::uint32_t mask = 0; mask < (1U << T) && !any; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
            std::vector<std::size_t> pick;
            for (std::size_t k = 0; k < T; ++k)
                if (mask >> k & 1U) pick.push_back(k);
            any = is_3dm_solution(inst, pick);
        }
        const auto sol = solve_3dm(inst);
        ASSERT_EQ(sol.has_value(), any) << "seed " << seed;
        if (sol) {
            EXPECT_TRUE(is_3dm_solution(inst, *sol));
            EXPECT_EQ(sol->size(), n);
        }
    }
    EXPECT_GE(checked, 200u);
}

TEST(VertexCover, Examples) {
    EXPECT_EQ(solve_vertex_cover({path_graph(3), 1}), (VertexSet{1}));
    EXPECT_FALSE(solve_vertex_cover({complete_graph(3), 1}));
    const auto p4 = solve_vertex_cover({path_graph(4), 2});
    ASSERT_TRUE(p4);
    EXPECT_LE(p4->size(), 2u);
    EXPECT_TRUE(is_vertex_cover(path_graph(4), *p4));
}

TEST(VertexCover, AgreesWithSubsetEnumeration) {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const Graph g = gen_random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
        std::size_t tau = n;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            const auto sz = static_cast<std::size_t>(__builtin_popcount(mask));
            if (sz >= tau) continue;
            std::vector<Vertex> c;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1U) c.push_back(v);
            if (is_vertex_cover(g, VertexSet(c))) tau = sz;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            const auto c = solve_vertex_cover({g, k});
            ASSERT_EQ(c.has_value(), tau <= k) << "seed " << seed << " k " << k;
            if (c) {
                EXPECT_TRUE(is_vertex_cover(g, *c));
                EXPECT_LE(c->size(), k);
            }
        }
    }
}

}  // namespace
}  // namespace starcut
