#pragma once

// Exhaustive solvers for 3-dimensional matching and vertex cover, used as
// ground truth for the reductions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// (r, b, y), each coordinate 1-based in 1..n.
struct Triple {
    std::size_t r = 0, b = 0, y = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct ThreeDMInstance {
    std::size_t n = 0;
    std::vector<Triple> triples;

    friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

/// Element index l in 1..3n: R occupies 1..n, B n+1..2n, Y 2n+1..3n.
inline std::array<std::size_t, 3> element_indices(const ThreeDMInstance& inst, const Triple& t) {
    return {t.r, inst.n + t.b, 2 * inst.n + t.y};
}

/// Occurrence count per element, indexed 1..3n (slot 0 unused).
inline std::vector<std::size_t> occurrences(const ThreeDMInstance& inst) {
    std::vector<std::size_t> occ(3 * inst.n + 1, 0);
    for (const auto& t : inst.triples)
        for (auto l : element_indices(inst, t)) ++occ[l];
    return occ;
}

inline bool validate_3dm(const ThreeDMInstance& inst, bool enforce_restriction) {
    std::set<Triple> seen;
    for (const auto& t : inst.triples) {
        for (auto c : {t.r, t.b, t.y})
            if (c < 1 || c > inst.n) return false;
        if (!seen.insert(t).second) return false;
    }
    if (!enforce_restriction) return true;
    const auto occ = occurrences(inst);
    std::size_t twos = 0, threes = 0;
    for (std::size_t l = 1; l < occ.size(); ++l) {
        if (occ[l] == 2) ++twos;
        else if (occ[l] == 3) ++threes;
        else return false;
    }
    return 2 * twos + 3 * threes == 3 * inst.triples.size();
}

/// Independent check: exactly n triples, every element covered once.
inline bool is_3dm_solution(const ThreeDMInstance& inst, const std::vector<std::size_t>& chosen) {
    if (chosen.size() != inst.n) return false;
    std::vector<int> hit(3 * inst.n + 1, 0);
    for (auto k : chosen) {
        if (k >= inst.triples.size()) return false;
        for (auto l : element_indices(inst, inst.triples[k]))
            if (l == 0 || l > 3 * inst.n || hit[l]++) return false;
    }
    return true;
}

/// Triple indices (0-based, ascending) of a perfect matching, or nullopt.
inline std::optional<std::vector<std::size_t>> solve_3dm(const ThreeDMInstance& inst) {
    if (!validate_3dm(inst, false)) throw std::invalid_argument("malformed 3DM instance");
    const std::size_t n = inst.n;
    if (n == 0) return std::vector<std::size_t>{};
    const auto occ = occurrences(inst);

    // Fail-first: triples whose rarest element is scarcest come first.
    std::vector<std::size_t> order(inst.triples.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    auto scarcity = [&](std::size_t k) {
        std::size_t s = static_cast<std::size_t>(-1);
        for (auto l : element_indices(inst, inst.triples[k])) s = std::min(s, occ[l]);
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return scarcity(a) < scarcity(b); });

    std::vector<std::vector<std::size_t>> by_r(n + 1);
    for (auto k : order) by_r[inst.triples[k].r].push_back(k);

    std::vector<bool> usedB(n + 1, false), usedY(n + 1, false);
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t r) -> bool {
        if (r > n) return true;
        for (auto k : by_r[r]) {
            const auto& t = inst.triples[k];
            if (usedB[t.b] || usedY[t.y]) continue;
            usedB[t.b] = usedY[t.y] = true;
            chosen.push_back(k);
            if (self(self, r + 1)) return true;
            chosen.pop_back();
            usedB[t.b] = usedY[t.y] = false;
        }
        return false;
    };
    if (!rec(rec, 1)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    if (!is_3dm_solution(inst, chosen)) throw std::logic_error("3DM solver produced an invalid matching");
    return chosen;
}

struct VertexCoverInstance {
    Graph graph;
    std::size_t k = 0;
};

inline bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    require_within(g, c);
    for (auto [u, v] : g.edges())
        if (!c.contains(u) && !c.contains(v)) return false;
    return true;
}

/// A cover of size at most k, found by branching on a maximum-degree vertex:
/// either it joins the cover or all of its remaining neighbors do.
inline std::optional<VertexSet> solve_vertex_cover(const VertexCoverInstance& inst) {
    const Graph& g = inst.graph;
    std::vector<bool> in(g.order(), false);
    std::vector<Vertex> picked;

    auto rec = [&](auto&& self, std::size_t budget) -> bool {
        Vertex best = 0;
        std::size_t best_deg = 0;
        std::size_t live_edges = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (in[v]) continue;
            std::size_t d = 0;
            for (Vertex u : g.neighbors(v))
                if (!in[u]) ++d;
            live_edges += d;
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        live_edges /= 2;
        if (live_edges == 0) return true;
        if (budget == 0) return false;
        // each chosen vertex removes at most best_deg edges
        if (budget * best_deg < live_edges) return false;

        in[best] = true;
        picked.push_back(best);
        if (self(self, budget - 1)) return true;
        picked.pop_back();
        in[best] = false;

        std::vector<Vertex> nb;
        for (Vertex u : g.neighbors(best))
            if (!in[u]) nb.push_back(u);
        if (nb.size() <= budget) {
            for (Vertex u : nb) {
                in[u] = true;
                picked.push_back(u);
            }
            if (self(self, budget - nb.size())) return true;
            for (Vertex u : nb) {
                in[u] = false;
                picked.pop_back();
            }
        }
        return false;
    };
    if (!rec(rec, inst.k)) return std::nullopt;
    VertexSet cover(picked);
    if (!is_vertex_cover(g, cover) || cover.size() > inst.k)
        throw std::logic_error("vertex cover solver produced an invalid cover");
    return cover;
}

}  // namespace starcut
