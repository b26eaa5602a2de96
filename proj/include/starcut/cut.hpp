#pragma once

// Stars, disjoint star families, and the cut verifiers for K_{1,M}
// structure and substructure cuts.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// A center plus leaves; a star with j leaves models K_{1,j}, j=0 models K_1.
struct Star {
    Vertex center = 0;
    std::vector<Vertex> leaves;  // sorted, center not included

    [[nodiscard]] std::size_t leaf_count() const { return leaves.size(); }

    friend bool operator==(const Star&, const Star&) = default;
    friend auto operator<=>(const Star&, const Star&) = default;
};

/// Sorts leaves, rejects center-as-leaf and repeated leaves, and orients a
/// single-edge star so that the smaller id is the center.
inline Star make_star(Vertex center, std::vector<Vertex> leaves) {
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end())
        throw std::invalid_argument("star has a repeated leaf");
    if (std::binary_search(leaves.begin(), leaves.end(), center))
        throw std::invalid_argument("star center " + std::to_string(center) + " is also a leaf");
    if (leaves.size() == 1 && leaves[0] < center) std::swap(leaves[0], center);
    return Star{center, std::move(leaves)};
}

enum class CutKind { structure, substructure };

inline std::string_view to_string(CutKind k) {
    return k == CutKind::structure ? "structure" : "substructure";
}

/// How an empty remainder is treated. The default counts any remainder with
/// at most one vertex as trivial; the strict reading requires exactly one.
enum class Triviality { at_most_one, exactly_one };

struct CutFamily {
    std::vector<Star> elements;
    CutKind kind = CutKind::structure;
    std::size_t M = 0;

    [[nodiscard]] std::size_t size() const { return elements.size(); }

    /// Elements sorted; verification does not depend on order.
    [[nodiscard]] CutFamily canonical() const {
        CutFamily c = *this;
        std::sort(c.elements.begin(), c.elements.end());
        return c;
    }

    friend bool operator==(const CutFamily&, const CutFamily&) = default;
};

inline VertexSet star_vertices(const Star& s) {
    std::vector<Vertex> v(s.leaves.begin(), s.leaves.end());
    v.push_back(s.center);
    return VertexSet(std::move(v));
}

inline VertexSet family_vertices(const CutFamily& f) {
    std::vector<Vertex> v;
    for (const auto& s : f.elements) {
        v.push_back(s.center);
        v.insert(v.end(), s.leaves.begin(), s.leaves.end());
    }
    return VertexSet(std::move(v));
}

inline bool star_valid_in(const Graph& g, const Star& s) {
    if (s.center >= g.order())
        throw std::out_of_range("star center " + std::to_string(s.center) + " out of range");
    for (Vertex l : s.leaves) {
        if (l >= g.order()) throw std::out_of_range("star leaf " + std::to_string(l) + " out of range");
        if (l == s.center || !g.adjacent(s.center, l)) return false;
    }
    return true;
}

/// True iff removing `removed` leaves g disconnected or trivial.
inline bool disconnects(const Graph& g, const VertexSet& removed, Triviality triv = Triviality::at_most_one) {
    const auto rest = remove_vertices(g, removed);
    const std::size_t left = rest.graph.order();
    if (left == 1) return true;
    if (left == 0) return triv == Triviality::at_most_one;
    return !is_connected(rest.graph);
}

/// Subgraph-cut test. Overlapping or invalid elements are input errors.
inline bool is_subgraph_cut(const Graph& g, const CutFamily& f, Triviality triv = Triviality::at_most_one) {
    std::vector<bool> used(g.order(), false);
    for (const auto& s : f.elements) {
        if (!star_valid_in(g, s))
            throw std::invalid_argument("element centered at " + std::to_string(s.center) +
                                        " is not a star of the graph");
        for (Vertex v : star_vertices(s)) {
            if (used[v]) throw std::invalid_argument("elements overlap at vertex " + std::to_string(v));
            used[v] = true;
        }
    }
    return disconnects(g, family_vertices(f), triv);
}

inline bool is_structure_cut(const Graph& g, const CutFamily& f, std::size_t M,
                             Triviality triv = Triviality::at_most_one) {
    const bool cut = is_subgraph_cut(g, f, triv);
    return cut && std::all_of(f.elements.begin(), f.elements.end(),
                              [M](const Star& s) { return s.leaf_count() == M; });
}

/// Connected subgraphs of K_{1,M} are exactly K_1 and K_{1,j}, 1 <= j <= M.
inline bool is_substructure_cut(const Graph& g, const CutFamily& f, std::size_t M,
                                Triviality triv = Triviality::at_most_one) {
    const bool cut = is_subgraph_cut(g, f, triv);
    return cut && std::all_of(f.elements.begin(), f.elements.end(),
                              [M](const Star& s) { return s.leaf_count() <= M; });
}

inline bool verify_cut(const Graph& g, const CutFamily& f, Triviality triv = Triviality::at_most_one) {
    return f.kind == CutKind::structure ? is_structure_cut(g, f, f.M, triv)
                                        : is_substructure_cut(g, f, f.M, triv);
}

}  // namespace starcut
