#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "starcut/cut.hpp"
#include "starcut/generators.hpp"

namespace starcut {
namespace {

Graph bowtie() { return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

CutFamily family(CutKind kind, std::size_t M, std::vector<Star> s) { return CutFamily{std::move(s), kind, M}; }

TEST(Star, Vertices) {
    EXPECT_EQ(star_vertices(Star{3, {}}), (VertexSet{3}));
    EXPECT_EQ(star_vertices(Star{0, {1, 2}}), (VertexSet{0, 1, 2}));
    EXPECT_EQ(star_vertices(Star{5, {1, 2, 3, 4, 6}}).size(), 6u);
}

TEST(Star, MakeStarCanonicalizesSingleEdge) {
    EXPECT_EQ(make_star(4, {2}), (Star{2, {4}}));
    EXPECT_EQ(make_star(1, {3, 2}), (Star{1, {2, 3}}));
    EXPECT_THROW(make_star(1, {1, 2}), std::invalid_argument);
    EXPECT_THROW(make_star(0, {2, 2}), std::invalid_argument);
}

TEST(Star, ValidIn) {
    EXPECT_TRUE(star_valid_in(path_graph(3), Star{1, {0, 2}}));
    EXPECT_FALSE(star_valid_in(path_graph(3), Star{0, {2}}));
    EXPECT_TRUE(star_valid_in(complete_graph(4), Star{0, {1, 2, 3}}));
    EXPECT_THROW((void)star_valid_in(path_graph(3), Star{0, {5}}), std::out_of_range);
}

TEST(SubgraphCut, Examples) {
    EXPECT_TRUE(is_subgraph_cut(cycle_graph(4), family(CutKind::substructure, 0, {{0, {}}, {2, {}}})));
    EXPECT_FALSE(is_subgraph_cut(complete_graph(4), family(CutKind::substructure, 0, {{0, {}}})));
    // a single surviving vertex is trivial
    EXPECT_TRUE(is_subgraph_cut(path_graph(3), family(CutKind::substructure, 1, {{0, {1}}})));
}

TEST(SubgraphCut, ErrorsOnMalformedFamilies) {
    EXPECT_THROW((void)is_subgraph_cut(path_graph(4), family(CutKind::substructure, 1, {{0, {1}}, {1, {2}}})),
                 std::invalid_argument);
    EXPECT_THROW((void)is_subgraph_cut(path_graph(3), family(CutKind::substructure, 1, {{0, {2}}})),
                 std::invalid_argument);
}

TEST(SubgraphCut, TrivialityConventions) {
    const auto all = family(CutKind::substructure, 2, {{1, {0, 2}}});
    EXPECT_TRUE(is_subgraph_cut(path_graph(3), all, Triviality::at_most_one));
    EXPECT_FALSE(is_subgraph_cut(path_graph(3), all, Triviality::exactly_one));
    const auto one = family(CutKind::substructure, 1, {{0, {1}}});
    EXPECT_TRUE(is_subgraph_cut(path_graph(3), one, Triviality::exactly_one));
}

TEST(StructureCut, Examples) {
    EXPECT_TRUE(is_structure_cut(bowtie(), family(CutKind::structure, 2, {{2, {0, 3}}}), 2));
    EXPECT_FALSE(is_structure_cut(cycle_graph(6), family(CutKind::structure, 2, {{1, {0, 2}}}), 2));
    EXPECT_TRUE(is_structure_cut(path_graph(4), family(CutKind::structure, 1, {{1, {2}}}), 1));
    // wrong leaf count is a plain false
    EXPECT_FALSE(is_structure_cut(bowtie(), family(CutKind::structure, 1, {{2, {0, 3}}}), 1));
}

TEST(SubstructureCut, Examples) {
    EXPECT_TRUE(is_substructure_cut(cycle_graph(5), family(CutKind::substructure, 1, {{0, {}}, {2, {}}}), 1));
    EXPECT_FALSE(is_substructure_cut(cycle_graph(5), family(CutKind::substructure, 1, {{0, {1}}}), 1));
    // M+1 leaves: rejected even though the removal disconnects
    EXPECT_FALSE(is_substructure_cut(star_graph(3), family(CutKind::substructure, 2, {{0, {1, 2, 3}}}), 2));
}

// Brute-force cut check straight from the definition: search for a pair of
// survivors with no path between them.
bool definition_cut(const Graph& g, const VertexSet& removed) {
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!removed.contains(v)) alive.push_back(v);
    if (alive.size() <= 1) return true;
    for (Vertex a : alive)
        for (Vertex b : alive) {
            if (a >= b) continue;
            std::vector<bool> seen(g.order(), false);
            std::vector<Vertex> st{a};
            seen[a] = true;
            while (!st.empty()) {
                Vertex v = st.back();
                st.pop_back();
                for (Vertex u : g.neighbors(v))
                    if (!seen[u] && !removed.contains(u)) {
                        seen[u] = true;
                        st.push_back(u);
                    }
            }
            if (!seen[b]) return true;
        }
    return false;
}

TEST(CutProperties, RandomFamilies) {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const Graph g = gen_random_graph(n, 0.5, seed);
        // random disjoint family: greedily grab stars
        std::vector<Star> stars;
        std::vector<bool> used(n, false);
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t M = 1 + seed % 3;
        for (Vertex c : order) {
            if (used[c] || rng() % 3 == 0) continue;
            std::vector<Vertex> leaves;
            for (Vertex u : g.neighbors(c))
                if (!used[u] && leaves.size() < M && rng() % 2) leaves.push_back(u);
            used[c] = true;
            for (Vertex u : leaves) used[u] = true;
            stars.push_back(make_star(c, leaves));
        }
        CutFamily f{stars, CutKind::substructure, M};
        const bool sub = is_substructure_cut(g, f, M);
        EXPECT_EQ(sub, definition_cut(g, family_vertices(f)));
        if (is_structure_cut(g, f, M)) { EXPECT_TRUE(sub); }
        CutFamily shuffled = f;
        std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
        EXPECT_EQ(is_substructure_cut(g, shuffled, M), sub);
        if (family_vertices(f).size() == n) { EXPECT_TRUE(is_subgraph_cut(g, f)); }
    }
}

}  // namespace
}  // namespace starcut
