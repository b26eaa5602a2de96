#pragma once

// Gadget graphs for the two hardness reductions, with per-vertex provenance,
// and the encode/decode maps between source solutions and star cuts.
//
// 3DM -> structure connectivity, vertex id layout:
//   triples t_1..t_|T|, elements w_1..w_3q, cliques V_1..V_{M-3} (each on
//   (M+1)|T| vertices v_{1j}..), U = u_1..u_{3qM} in consecutive blocks of M,
//   U' = u'_1..u'_{3qM}.
// Vertex cover -> substructure connectivity, vertex id layout:
//   original v_1..v_|V|, then cliques V_1..V_{k+2}, each on |V| vertices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starcut/cut.hpp"
#include "starcut/graph.hpp"
#include "starcut/np_oracles.hpp"

namespace starcut {

enum class RoleTag { triple, element, clique, ublock, uprime, original };

/// Gadget provenance of one vertex. Indices are 1-based:
///   triple: first = k          element: first = l
///   clique: first = j (clique), second = i (position, v_{ij})
///   ublock: first = l (block),  second = i (u_i)
///   uprime: first = i          original: first = i
struct VertexRole {
    RoleTag tag = RoleTag::original;
    std::size_t first = 0;
    std::size_t second = 0;

    [[nodiscard]] bool has_second() const { return tag == RoleTag::clique || tag == RoleTag::ublock; }

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

inline std::string_view tag_name(RoleTag t) {
    switch (t) {
        case RoleTag::triple: return "TRIPLE";
        case RoleTag::element: return "ELEM";
        case RoleTag::clique: return "CLIQ";
        case RoleTag::ublock: return "UBLK";
        case RoleTag::uprime: return "UPRM";
        case RoleTag::original: return "ORIG";
    }
    return "?";
}

inline std::optional<RoleTag> tag_from_name(std::string_view s) {
    for (auto t : {RoleTag::triple, RoleTag::element, RoleTag::clique, RoleTag::ublock, RoleTag::uprime,
                   RoleTag::original})
        if (tag_name(t) == s) return t;
    return std::nullopt;
}

struct ReducedInstance {
    Graph graph;
    std::vector<VertexRole> roles;
    std::size_t parameter = 0;  // q for 3DM, k for vertex cover
    std::size_t M = 0;
    std::variant<ThreeDMInstance, VertexCoverInstance> source;

    [[nodiscard]] bool from_3dm() const { return std::holds_alternative<ThreeDMInstance>(source); }
    [[nodiscard]] const ThreeDMInstance& source_3dm() const { return std::get<ThreeDMInstance>(source); }
    [[nodiscard]] const VertexCoverInstance& source_vc() const { return std::get<VertexCoverInstance>(source); }
};

/// A decoded source solution, or the reason decoding failed.
template <class T>
struct Decoded {
    std::optional<T> value;
    std::string diagnostic;
};

struct Reduce3dmOptions {
    bool allow_unrestricted = false;  // skip the two-or-three occurrence check
    bool allow_small_M = false;       // permit M = 4; carries no correctness claim
};

inline std::size_t expected_3dm_gadget_order(std::size_t triples, std::size_t q, std::size_t M) {
    return triples + 3 * q + (M - 3) * (M + 1) * triples + 6 * q * M;
}

inline std::size_t expected_vc_gadget_order(std::size_t n, std::size_t k) { return n * (k + 3); }

/// Audit of the 3DM gadget; returns one message per violated invariant.
inline std::vector<std::string> audit_3dm_gadget(const ReducedInstance& red) {
    std::vector<std::string> bad;
    const auto& inst = red.source_3dm();
    const std::size_t M = red.M, q = inst.n, T = inst.triples.size();
    const Graph& g = red.graph;
    if (!g.audit()) bad.emplace_back("adjacency audit failed");
    if (g.order() != expected_3dm_gadget_order(T, q, M))
        bad.push_back("order " + std::to_string(g.order()) + " != " +
                      std::to_string(expected_3dm_gadget_order(T, q, M)));
    if (red.roles.size() != g.order()) {
        bad.emplace_back("role count mismatch");
        return bad;
    }
    const auto occ = occurrences(inst);
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& r = red.roles[v];
        const std::size_t d = g.degree(v);
        std::size_t want = 0;
        switch (r.tag) {
            case RoleTag::triple: want = M; break;
            case RoleTag::element: want = occ[r.first] + 1; break;
            case RoleTag::clique: want = (M + 1) * T - 1 + (r.second <= T ? 1 : 0); break;
            case RoleTag::ublock: want = (r.second % M == 0) ? M + 1 : M; break;
            case RoleTag::uprime: want = 3 * q * M; break;
            case RoleTag::original: bad.emplace_back("unexpected ORIG role"); continue;
        }
        if (d != want)
            bad.push_back(std::string(tag_name(r.tag)) + " vertex " + std::to_string(v) + " has degree " +
                          std::to_string(d) + ", expected " + std::to_string(want));
    }
    return bad;
}

/// Audit of the vertex-cover gadget; returns one message per violated invariant.
inline std::vector<std::string> audit_vc_gadget(const ReducedInstance& red) {
    std::vector<std::string> bad;
    const auto& src = red.source_vc();
    const std::size_t n = src.graph.order(), k = src.k;
    const Graph& g = red.graph;
    if (!g.audit()) bad.emplace_back("adjacency audit failed");
    if (g.order() != expected_vc_gadget_order(n, k))
        bad.push_back("order " + std::to_string(g.order()) + " != " + std::to_string(expected_vc_gadget_order(n, k)));
    if (red.roles.size() != g.order()) {
        bad.emplace_back("role count mismatch");
        return bad;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& r = red.roles[v];
        if (r.tag == RoleTag::original) {
            if (g.degree(v) != src.graph.degree(v) + k + 2)
                bad.push_back("ORIG vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
            continue;
        }
        if (r.tag != RoleTag::clique) {
            bad.push_back("unexpected role at vertex " + std::to_string(v));
            continue;
        }
        std::size_t outside = 0;
        Vertex which = 0;
        for (Vertex u : g.neighbors(v))
            if (red.roles[u].tag != RoleTag::clique || red.roles[u].first != r.first) {
                ++outside;
                which = u;
            }
        if (outside != 1 || which != r.second - 1)
            bad.push_back("CLIQ vertex " + std::to_string(v) + " has " + std::to_string(outside) +
                          " outside neighbors");
    }
    return bad;
}

inline ReducedInstance reduce_3dm(const ThreeDMInstance& inst, std::size_t M, Reduce3dmOptions opt = {}) {
    if (M < 4 || (M == 4 && !opt.allow_small_M))
        throw std::invalid_argument("reduce_3dm needs M >= 5 (M = 4 only with the small-M override)");
    if (inst.n < 1 || inst.triples.empty()) throw std::invalid_argument("reduce_3dm needs n >= 1 and |T| >= 1");
    if (!validate_3dm(inst, false)) throw std::invalid_argument("malformed 3DM instance");
    if (!opt.allow_unrestricted && !validate_3dm(inst, true))
        throw std::invalid_argument("3DM instance violates the two-or-three occurrence restriction");

    const std::size_t T = inst.triples.size(), q = inst.n, cliques = M - 3, csize = (M + 1) * T, usize = 3 * q * M;
    const std::size_t base_w = T, base_v = T + 3 * q, base_u = base_v + cliques * csize, base_up = base_u + usize;
    const std::size_t order = base_up + usize;

    ReducedInstance red;
    red.M = M;
    red.parameter = q;
    red.source = inst;
    red.roles.resize(order);
    auto tv = [&](std::size_t k) { return static_cast<Vertex>(k - 1); };
    auto wv = [&](std::size_t l) { return static_cast<Vertex>(base_w + l - 1); };
    auto vv = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(base_v + (j - 1) * csize + i - 1); };
    auto uv = [&](std::size_t i) { return static_cast<Vertex>(base_u + i - 1); };
    auto upv = [&](std::size_t i) { return static_cast<Vertex>(base_up + i - 1); };

    for (std::size_t k = 1; k <= T; ++k) red.roles[tv(k)] = {RoleTag::triple, k, 0};
    for (std::size_t l = 1; l <= 3 * q; ++l) red.roles[wv(l)] = {RoleTag::element, l, 0};
    for (std::size_t j = 1; j <= cliques; ++j)
        for (std::size_t i = 1; i <= csize; ++i) red.roles[vv(i, j)] = {RoleTag::clique, j, i};
    for (std::size_t i = 1; i <= usize; ++i) {
        red.roles[uv(i)] = {RoleTag::ublock, (i - 1) / M + 1, i};
        red.roles[upv(i)] = {RoleTag::uprime, i, 0};
    }

    std::vector<Edge> e;
    // E(G_b)
    for (std::size_t k = 1; k <= T; ++k)
        for (auto l : element_indices(inst, inst.triples[k - 1])) e.emplace_back(tv(k), wv(l));
    // (M-3) cliques K_{(M+1)|T|}
    for (std::size_t j = 1; j <= cliques; ++j)
        for (std::size_t a = 1; a <= csize; ++a)
            for (std::size_t b = a + 1; b <= csize; ++b) e.emplace_back(vv(a, j), vv(b, j));
    // 3q blocks K_M on U
    for (std::size_t l = 1; l <= 3 * q; ++l)
        for (std::size_t a = (l - 1) * M + 1; a <= l * M; ++a)
            for (std::size_t b = a + 1; b <= l * M; ++b) e.emplace_back(uv(a), uv(b));
    // K_{3qM} on U'
    for (std::size_t a = 1; a <= usize; ++a)
        for (std::size_t b = a + 1; b <= usize; ++b) e.emplace_back(upv(a), upv(b));
    // E_t, E_w, E_z
    for (std::size_t k = 1; k <= T; ++k)
        for (std::size_t j = 1; j <= cliques; ++j) e.emplace_back(tv(k), vv(k, j));
    for (std::size_t l = 1; l <= 3 * q; ++l) e.emplace_back(wv(l), uv(l * M));
    for (std::size_t i = 1; i <= usize; ++i) e.emplace_back(uv(i), upv(i));

    red.graph = Graph::build(order, e);
    if (auto bad = audit_3dm_gadget(red); !bad.empty())
        throw std::logic_error("3DM gadget audit failed: " + bad.front());
    return red;
}

/// One star per matched triple: the triple vertex and its whole neighborhood.
inline CutFamily matching_to_cut(const ReducedInstance& red, const std::vector<std::size_t>& matching) {
    const auto& inst = red.source_3dm();
    if (!is_3dm_solution(inst, matching)) throw std::invalid_argument("not a 3-dimensional matching");
    CutFamily f{{}, CutKind::structure, red.M};
    for (auto k : matching) {
        const auto center = static_cast<Vertex>(k);
        const auto nb = red.graph.neighbors(center);
        f.elements.push_back(make_star(center, {nb.begin(), nb.end()}));
    }
    return f.canonical();
}

/// Reads the triples at the centers of a verified structure cut and accepts
/// them only if they form a perfect matching of the source instance.
inline Decoded<std::vector<std::size_t>> extract_matching(const ReducedInstance& red, const CutFamily& f) {
    if (!is_structure_cut(red.graph, f, red.M)) throw std::invalid_argument("family is not a verified structure cut");
    const auto& inst = red.source_3dm();
    std::vector<std::size_t> picked;
    std::string others;
    for (const auto& s : f.elements) {
        const auto& r = red.roles[s.center];
        if (r.tag == RoleTag::triple) picked.push_back(r.first - 1);
        else others += std::string(others.empty() ? "" : ", ") + std::string(tag_name(r.tag)) + " center " +
                       std::to_string(s.center + 1);
    }
    std::sort(picked.begin(), picked.end());
    Decoded<std::vector<std::size_t>> out;
    if (is_3dm_solution(inst, picked)) {
        out.value = picked;
        return out;
    }
    out.diagnostic = "triple centers do not form a perfect matching (" + std::to_string(picked.size()) + " of " +
                     std::to_string(inst.n) + " triples" + (others.empty() ? "" : "; non-triple: " + others) + ")";
    return out;
}

/// G' = G plus k+2 cliques K_|V|, with v_i joined to its own vertex v_{ij} in
/// every clique. M is always Delta(G); an explicit conflicting M is refused.
inline ReducedInstance reduce_vertex_cover(const VertexCoverInstance& inst, std::optional<std::size_t> M = {}) {
    const Graph& g = inst.graph;
    const std::size_t n = g.order(), k = inst.k;
    if (n == 0) throw std::invalid_argument("reduce_vertex_cover needs a nonempty graph");
    if (k < 1 || k >= n) throw std::invalid_argument("reduce_vertex_cover needs 1 <= k < |V|");
    const std::size_t delta = g.max_degree();
    if (M && *M != delta)
        throw std::invalid_argument("M must equal the maximum degree " + std::to_string(delta));

    const std::size_t cliques = k + 2;
    auto vv = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(n + (j - 1) * n + i - 1); };
    ReducedInstance red;
    red.M = delta;
    red.parameter = k;
    red.source = inst;
    red.roles.resize(expected_vc_gadget_order(n, k));
    for (std::size_t i = 1; i <= n; ++i) red.roles[i - 1] = {RoleTag::original, i, 0};
    for (std::size_t j = 1; j <= cliques; ++j)
        for (std::size_t i = 1; i <= n; ++i) red.roles[vv(i, j)] = {RoleTag::clique, j, i};

    std::vector<Edge> e = g.edges();
    for (std::size_t j = 1; j <= cliques; ++j)
        for (std::size_t a = 1; a <= n; ++a) {
            for (std::size_t b = a + 1; b <= n; ++b) e.emplace_back(vv(a, j), vv(b, j));
            e.emplace_back(static_cast<Vertex>(a - 1), vv(a, j));
        }
    red.graph = Graph::build(red.roles.size(), e);
    if (auto bad = audit_vc_gadget(red); !bad.empty())
        throw std::logic_error("vertex cover gadget audit failed: " + bad.front());
    return red;
}

/// For each x in K (ascending), a star at x whose leaves are its source
/// neighbors outside K not already used.
inline CutFamily cover_to_cut(const ReducedInstance& red, const VertexSet& cover) {
    const auto& src = red.source_vc();
    if (!is_vertex_cover(src.graph, cover)) throw std::invalid_argument("not a vertex cover of the source graph");
    if (cover.size() > src.k) throw std::invalid_argument("cover exceeds the budget k");
    std::vector<bool> used(src.graph.order(), false);
    for (Vertex x : cover) used[x] = true;
    CutFamily f{{}, CutKind::substructure, red.M};
    for (Vertex x : cover) {
        std::vector<Vertex> leaves;
        for (Vertex u : src.graph.neighbors(x))
            if (!used[u]) {
                used[u] = true;
                leaves.push_back(u);
            }
        f.elements.push_back(make_star(x, std::move(leaves)));
    }
    return f.canonical();
}

/// Collects the source vertex behind each center (an ORIG center itself, a
/// CLIQ center through its unique tap) and accepts the set only if it is a
/// cover of size <= k. A single-edge element has no intrinsic center, so
/// both orientations are tried.
inline Decoded<VertexSet> extract_cover(const ReducedInstance& red, const CutFamily& f) {
    if (!is_substructure_cut(red.graph, f, red.M))
        throw std::invalid_argument("family is not a verified substructure cut");
    const auto& src = red.source_vc();
    auto source_of = [&](Vertex c) -> Vertex {
        const auto& r = red.roles[c];
        return static_cast<Vertex>(r.tag == RoleTag::original ? r.first - 1 : r.second - 1);
    };
    std::vector<std::size_t> flexible;
    for (std::size_t e = 0; e < f.elements.size(); ++e)
        if (f.elements[e].leaf_count() == 1) flexible.push_back(e);
    const std::size_t free_bits = std::min<std::size_t>(flexible.size(), 16);

    Decoded<VertexSet> out;
    for (std::size_t pick = 0; pick < (std::size_t{1} << free_bits); ++pick) {
        std::vector<Vertex> cand;
        std::size_t fi = 0;
        for (std::size_t e = 0; e < f.elements.size(); ++e) {
            const Star& s = f.elements[e];
            Vertex c = s.center;
            if (fi < free_bits && flexible[fi] == e) {
                if ((pick >> fi) & 1U) c = s.leaves[0];
                ++fi;
            }
            cand.push_back(source_of(c));
        }
        VertexSet cover(std::move(cand));
        if (cover.size() <= src.k && is_vertex_cover(src.graph, cover)) {
            out.value = cover;
            return out;
        }
    }
    out.diagnostic = "center-derived vertex set is not a vertex cover of size <= " + std::to_string(src.k);
    return out;
}

}  // namespace starcut
