#pragma once

// Brute-force connectivity oracle: enumerate every vertex subset whose
// removal disconnects (or trivializes) the graph, then find the fewest
// disjoint stars that partition it. Shares no search code with solver.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "starcut/cut.hpp"
#include "starcut/graph.hpp"
#include "starcut/solver.hpp"

namespace starcut {

inline constexpr std::size_t default_oracle_cap = 14;

namespace detail {

class StarPartitioner {
public:
    StarPartitioner(const Graph& g, std::size_t M, bool exact) : M_(M), exact_(exact), adj_(g.order(), 0) {
        if (g.order() > 63) throw std::invalid_argument("star partition oracle supports at most 63 vertices");
        for (Vertex v = 0; v < g.order(); ++v)
            for (Vertex u : g.neighbors(v)) adj_[v] |= std::uint64_t{1} << u;
    }

    static constexpr int infeasible = 1 << 20;

    // Fewest disjoint stars whose vertex sets partition `mask`.
    int best(std::uint64_t mask) {
        if (mask == 0) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second.count;
        Entry e{infeasible, 0, 0};
        const int v = __builtin_ctzll(mask);
        const std::uint64_t vbit = std::uint64_t{1} << v;
        auto consider = [&](int center, std::uint64_t set) {
            const int sub = best(mask & ~set);
            if (sub + 1 < e.count) e = Entry{sub + 1, center, set};
        };
        // v as the center
        subsets(adj_[v] & mask, exact_ ? M_ : 0, M_, [&](std::uint64_t leaves) { consider(v, vbit | leaves); });
        // v as a leaf of a neighbor u
        if (M_ >= 1) {
            std::uint64_t us = adj_[v] & mask;
            while (us) {
                const int u = __builtin_ctzll(us);
                us &= us - 1;
                const std::uint64_t ubit = std::uint64_t{1} << u;
                subsets(adj_[u] & mask & ~vbit, exact_ ? M_ - 1 : 0, M_ - 1,
                        [&](std::uint64_t leaves) { consider(u, ubit | vbit | leaves); });
            }
        }
        memo_[mask] = e;
        return e.count;
    }

    // Stars realizing best(mask), or empty when infeasible.
    std::vector<Star> stars(std::uint64_t mask) {
        std::vector<Star> out;
        if (best(mask) >= infeasible) return out;
        while (mask) {
            const Entry& e = memo_.at(mask);
            std::vector<Vertex> leaves;
            for (std::uint64_t s = e.set & ~(std::uint64_t{1} << e.center); s; s &= s - 1)
                leaves.push_back(static_cast<Vertex>(__builtin_ctzll(s)));
            out.push_back(make_star(static_cast<Vertex>(e.center), std::move(leaves)));
            mask &= ~e.set;
        }
        return out;
    }

private:
    struct Entry {
        int count;
        int center;
        std::uint64_t set;
    };

    template <class F>
    static void subsets(std::uint64_t pool, std::size_t lo, std::size_t hi, F&& f) {
        auto rec = [&](auto&& self, std::uint64_t rest, std::uint64_t cur, std::size_t k) -> void {
            if (k >= lo) f(cur);
            if (k == hi) return;
            while (rest) {
                const std::uint64_t bit = rest & (~rest + 1);
                rest &= rest - 1;
                self(self, rest, cur | bit, k + 1);
            }
        };
        rec(rec, pool, 0, 0);
    }

    std::size_t M_;
    bool exact_;
    std::vector<std::uint64_t> adj_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

inline bool oracle_connected(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    if (alive == 0) return true;
    std::uint64_t seen = alive & (~alive + 1);
    std::vector<int> stack{__builtin_ctzll(seen)};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        std::uint64_t fresh = adj[v] & alive & ~seen;
        seen |= fresh;
        while (fresh) {
            stack.push_back(__builtin_ctzll(fresh));
            fresh &= fresh - 1;
        }
    }
    return seen == alive;
}

}  // namespace detail

/// Minimum number of disjoint stars of g (exactly M leaves when `exact`, else
/// at most M) whose vertex sets partition X; nullopt if none exists.
inline std::optional<std::size_t> min_star_partition(const Graph& g, const VertexSet& x, std::size_t M, bool exact) {
    require_within(g, x);
    if (x.empty()) return 0;
    detail::StarPartitioner p(g, M, exact);
    std::uint64_t mask = 0;
    for (Vertex v : x) mask |= std::uint64_t{1} << v;
    const int b = p.best(mask);
    if (b >= detail::StarPartitioner::infeasible) return std::nullopt;
    return static_cast<std::size_t>(b);
}

/// Subset-enumeration oracle for kappa / kappa^s, capped at t_max.
inline SolveResult oracle_connectivity(const Graph& g, std::size_t M, CutKind kind, std::size_t t_max,
                                       Triviality triv = Triviality::at_most_one,
                                       std::size_t cap = default_oracle_cap) {
    const std::size_t n = g.order();
    if (n > cap || n > 63)
        throw std::invalid_argument("oracle input has " + std::to_string(n) + " vertices, cap is " +
                                    std::to_string(cap));
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    detail::StarPartitioner part(g, M, kind == CutKind::structure);
    int best = detail::StarPartitioner::infeasible;
    std::uint64_t best_set = 0;
    for (std::uint64_t x = 0; x <= full; ++x) {
        const std::uint64_t alive = full & ~x;
        const int left = __builtin_popcountll(alive);
        bool cut;
        if (left == 0) cut = triv == Triviality::at_most_one;
        else if (left == 1) cut = true;
        else cut = !detail::oracle_connected(adj, alive);
        if (!cut) continue;
        const int b = part.best(x);
        if (b < best) {
            best = b;
            best_set = x;
        }
    }
    SolveResult res;
    res.bound = t_max;
    if (best < detail::StarPartitioner::infeasible && static_cast<std::size_t>(best) <= t_max) {
        res.value = static_cast<std::size_t>(best);
        res.certificate = CutFamily{part.stars(best_set), kind, M}.canonical();
    }
    return res;
}

}  // namespace starcut
