#include <gtest/gtest.h>

#include <random>

#include "starcut/generators.hpp"
#include "starcut/io.hpp"
#include "starcut/reductions.hpp"

namespace starcut {
namespace {

std::size_t error_line(auto&& parse) {
    try {
        parse();
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError";
    return 0;
}

TEST(GraphFormat, ParsesPath) {
    const Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
    EXPECT_EQ(g, path_graph(3));
    EXPECT_EQ(write_graph(g), "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(GraphFormat, CommentsBlankLinesAndCrlf) {
    const Graph g = parse_graph("c a triangle\r\n\r\np edge 3 3\r\ne 1 2\r\nc middle\r\ne 2 3\r\n  e 3 1 \r\n");
    EXPECT_EQ(g, complete_graph(3));
}

TEST(GraphFormat, Errors) {
    EXPECT_EQ(error_line([] { parse_graph("p edge 2 1\ne 1 1\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph("p edge 2 1\ne 1 3\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"); }), 3u);
    EXPECT_EQ(error_line([] { parse_graph("p edge 3 2\ne 1 2\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph("p edge 3 1\ne 1 2\ne 2 3\n"); }), 3u);
    EXPECT_EQ(error_line([] { parse_graph("c only\np graph 3 1\ne 1 2\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph("p edge x 0\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_graph("p edge 3 1\ne 1 -2\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph(""); }), 1u);
    try {
        parse_graph("p edge 2 1\ne 1 1\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(ThreeDMFormat, RoundTripAndErrors) {
    const ThreeDMInstance inst{2, {{1, 1, 1}, {2, 2, 2}, {1, 2, 1}}};
    const std::string text = write_3dm(inst);
    EXPECT_EQ(text, "3dm 2 3\nt 1 1 1\nt 2 2 2\nt 1 2 1\n");
    EXPECT_EQ(parse_3dm(text), inst);
    EXPECT_EQ(error_line([] { parse_3dm("3dm 2 1\nt 1 3 1\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_3dm("3dm 2 2\nt 1 1 1\nt 1 1 1\n"); }), 3u);
    EXPECT_EQ(error_line([] { parse_3dm("3dm 2 1\nt 1 1\n"); }), 2u);
}

TEST(CutFormat, CanonicalForm) {
    const CutFamily f = parse_cut("cut structure 2 2\ns 5 1 3\ns 2 4 6\n", 6);
    EXPECT_EQ(f.kind, CutKind::structure);
    EXPECT_EQ(f.M, 2u);
    EXPECT_EQ(write_cut(f), "cut structure 2 2\ns 2 4 6\ns 5 1 3\n");
    // a single-edge star is written from its smaller end
    EXPECT_EQ(write_cut(parse_cut("cut substructure 3 1\ns 4 2\n")), "cut substructure 3 1\ns 2 4\n");
}

TEST(CutFormat, Errors) {
    EXPECT_EQ(error_line([] { parse_cut("cut structure 2 1\ns 1 2\n"); }), 2u);             // too few leaves
    EXPECT_EQ(error_line([] { parse_cut("cut substructure 1 1\ns 1 2 3\n"); }), 2u);       // too many
    EXPECT_EQ(error_line([] { parse_cut("cut substructure 3 1\ns 1 3 2\n"); }), 2u);       // unsorted
    EXPECT_EQ(error_line([] { parse_cut("cut substructure 3 2\ns 1 2\n\ns 2 3\n"); }), 4u); // overlap
    EXPECT_EQ(error_line([] { parse_cut("cut substructure 3 1\ns 1 1\n"); }), 2u);         // center as leaf
    EXPECT_EQ(error_line([] { parse_cut("cut substructure 3 1\ns 7\n", 6); }), 2u);
    EXPECT_EQ(error_line([] { parse_cut("cut other 3 0\n"); }), 1u);
}

TEST(RolesFormat, RoundTripAndErrors) {
    const auto red = reduce_3dm(ThreeDMInstance{1, {{1, 1, 1}}}, 5, {.allow_unrestricted = true});
    const std::string text = write_roles(red.roles);
    EXPECT_EQ(text.substr(0, 15), "v 1 TRIPLE 1\nv ");
    EXPECT_EQ(parse_roles(text), red.roles);
    EXPECT_NE(text.find("v 5 CLIQ 1 1\n"), std::string::npos);
    EXPECT_NE(text.find("v 34 UPRM 3\n"), std::string::npos);
    EXPECT_EQ(error_line([] { parse_roles("v 1 TRIPLE 1\nv 3 ELEM 1\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_roles("v 1 WHAT 1\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_roles("v 1 CLIQ 1\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_roles("v 1 ELEM 0\n"); }), 1u);
}

TEST(ResultFormat, Lines) {
    SolveResult r;
    r.value = 1;
    r.certificate = CutFamily{{Star{1, {0, 2}}}, CutKind::structure, 2};
    EXPECT_EQ(write_result(r, CutKind::structure, 2), "kappa structure 2 = 1\ncut structure 2 1\ns 2 1 3\n");
    EXPECT_EQ(write_result(SolveResult{}, CutKind::substructure, 3), "kappa substructure 3 = none\n");
}

// write(parse(write(x))) == write(x) for seeded objects of every format.
TEST(RoundTrip, SeededCorpus) {
    std::mt19937_64 rng(7);
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Graph g = gen_random_graph(1 + rng() % 12, 0.4, s);
        const auto gt = write_graph(g);
        EXPECT_EQ(write_graph(parse_graph(gt)), gt);

        const auto inst = gen_random_3dm(1 + s % 3, s % 3, true, s);
        const auto it = write_3dm(inst);
        EXPECT_EQ(write_3dm(parse_3dm(it)), it);

        // random disjoint stars over the vertices of g
        CutFamily f{{}, s % 2 ? CutKind::substructure : CutKind::structure, 1 + s % 3};
        std::vector<Vertex> pool(20);
        for (Vertex v = 0; v < 20; ++v) pool[v] = v;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t at = 0;
        while (at + f.M + 1 <= pool.size() && rng() % 3) {
            const std::size_t leaves = f.kind == CutKind::structure ? f.M : rng() % (f.M + 1);
            std::vector<Vertex> l(pool.begin() + at + 1, pool.begin() + at + 1 + leaves);
            f.elements.push_back(make_star(pool[at], l));
            at += leaves + 1;
        }
        const auto ct = write_cut(f);
        EXPECT_EQ(write_cut(parse_cut(ct)), ct);
        EXPECT_EQ(parse_cut(ct).canonical(), f.canonical());
    }
    const auto red = reduce_vertex_cover({path_graph(4), 2});
    EXPECT_EQ(write_roles(parse_roles(write_roles(red.roles))), write_roles(red.roles));
}

}  // namespace
}  // namespace starcut
