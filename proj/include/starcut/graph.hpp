#pragma once

// Simple undirected graphs over dense vertex ids 0..n-1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starcut {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> xs) : members_(xs) { normalize(); }
    explicit VertexSet(std::vector<Vertex> xs) : members_(std::move(xs)) { normalize(); }

    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices. Duplicate pairs collapse; self-loops and
    /// out-of-range endpoints throw.
    static Graph build(std::size_t n, std::span<const Edge> edges) {
        Graph g;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        std::size_t total = 0;
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            total += nb.size();
        }
        g.m_ = total / 2;
        return g;
    }

    static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    [[nodiscard]] std::size_t order() const { return adj_.size(); }
    [[nodiscard]] std::size_t size() const { return m_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        check(v);
        return adj_[v];
    }

    [[nodiscard]] std::size_t degree(Vertex v) const {
        check(v);
        return adj_[v].size();
    }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    [[nodiscard]] std::size_t min_degree() const {
        std::size_t d = adj_.empty() ? 0 : adj_[0].size();
        for (const auto& nb : adj_) d = std::min(d, nb.size());
        return d;
    }

    [[nodiscard]] std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& nb : adj_) d = std::max(d, nb.size());
        return d;
    }

    /// Edges with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Checks symmetry, sortedness, no self-loops and the edge count.
    [[nodiscard]] bool audit() const {
        std::size_t total = 0;
        for (Vertex u = 0; u < adj_.size(); ++u) {
            const auto& nb = adj_[u];
            if (!std::is_sorted(nb.begin(), nb.end())) return false;
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
            for (Vertex v : nb) {
                if (v >= adj_.size() || v == u) return false;
                if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u)) return false;
            }
            total += nb.size();
        }
        return total == 2 * m_;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const {
        if (v >= adj_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(adj_.size()) + ")");
    }

    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

inline void require_within(const Graph& g, const VertexSet& x) {
    if (!x.empty() && x.members().back() >= g.order())
        throw std::out_of_range("vertex " + std::to_string(x.members().back()) +
                                " out of range (n=" + std::to_string(g.order()) + ")");
}

/// N[X]: X together with every neighbor of a member of X.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    require_within(g, x);
    std::vector<Vertex> out(x.begin(), x.end());
    for (Vertex v : x)
        for (Vertex u : g.neighbors(v)) out.push_back(u);
    return VertexSet(std::move(out));
}

/// N(X) = N[X] \ X.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<Vertex> out;
    for (Vertex v : closed_neighborhood(g, x))
        if (!x.contains(v)) out.push_back(v);
    return VertexSet(std::move(out));
}

/// Result of vertex deletion: the induced graph on the survivors, densely
/// re-indexed, plus original[new_id] = old_id.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& x) {
    require_within(g, x);
    constexpr Vertex gone = ~Vertex{0};
    std::vector<Vertex> renum(g.order(), gone);
    InducedSubgraph out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (x.contains(v)) continue;
        renum[v] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (renum[u] != gone && renum[v] != gone) kept.emplace_back(renum[u], renum[v]);
    out.graph = Graph::build(out.original.size(), kept);
    return out;
}

/// Component label per vertex; returns the number of components.
inline std::size_t components(const Graph& g, std::vector<std::size_t>* label = nullptr) {
    const std::size_t n = g.order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, unset);
    std::vector<Vertex> stack;
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != unset) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (comp[u] == unset) {
                    comp[u] = count;
                    stack.push_back(u);
                }
        }
        ++count;
    }
    if (label) *label = std::move(comp);
    return count;
}

/// True iff g has at most one component (n=0 and K_1 count as connected).
inline bool is_connected(const Graph& g) { return components(g) <= 1; }

// Standard constructors.

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::build(n, e);
}

/// K_{1,M}: vertex 0 is the center, 1..M the leaves.
inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::build(leaves + 1, e);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return Graph::build(n, e);
}

/// C_n for n >= 3; smaller n degrade to the path on n vertices.
inline Graph cycle_graph(std::size_t n) {
    if (n < 3) return path_graph(n);
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::build(n, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const auto off = static_cast<Vertex>(a.order());
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    return Graph::build(a.order() + b.order(), e);
}

}  // namespace starcut
