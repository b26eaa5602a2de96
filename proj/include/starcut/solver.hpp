#pragma once

// Exact K_{1,M} structure / substructure connectivity by iterative deepening
// over families of pairwise-disjoint stars.
//
// For each family size t = 1, 2, ... the search walks strictly increasing
// index sequences over the canonical star list, so the first cut found at
// level t is the lexicographically least certificate of minimum size.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "starcut/cut.hpp"
#include "starcut/detail/bits.hpp"
#include "starcut/graph.hpp"

namespace starcut {

struct SearchOptions {
    std::size_t t_max = 1;
    Triviality triviality = Triviality::at_most_one;
    // Skip every last-level star at a center whose closed neighborhood cannot
    // separate the rest of the graph (see anchor_possible below).
    bool anchor_pruning = true;
    // Try stars with a larger outside boundary first. The value is unchanged;
    // the certificate is then a minimum cut but not necessarily the
    // lexicographically least one.
    bool damage_order = false;
    // Keep one star (the least) per vertex set; equal vertex sets remove the
    // same vertices.
    bool merge_equal_vertex_sets = true;
    unsigned threads = 1;
    std::optional<std::chrono::milliseconds> time_budget;
};

struct SolveResult {
    std::optional<std::size_t> value;
    std::optional<CutFamily> certificate;
    std::size_t bound = 0;          // largest family size fully explored
    bool budget_exhausted = false;  // the time budget ran out before a decision
    std::uint64_t nodes = 0;
};

namespace detail {

// Calls emit(leaves) for every subset of `pool` with a size in [lo, hi], in
// lexicographic order of the sorted leaf vector.
template <class Emit>
void for_each_leaf_set(std::span<const Vertex> pool, std::size_t lo, std::size_t hi, Emit&& emit) {
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() >= lo) emit(static_cast<const std::vector<Vertex>&>(cur));
        if (cur.size() == hi) return;
        // not enough candidates left to reach lo
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (cur.size() + 1 + (pool.size() - i - 1) < lo) break;
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Visits canonical stars in ascending order: by center, then leaf vector.
template <class Emit>
void for_each_star(const Graph& g, std::size_t M, bool exact, Emit&& emit) {
    for (Vertex c = 0; c < g.order(); ++c) {
        const auto nb = g.neighbors(c);
        const std::size_t lo = exact ? M : 0;
        if (nb.size() < lo) continue;
        for_each_leaf_set(nb, lo, M, [&](const std::vector<Vertex>& leaves) {
            // a single-edge star belongs to its smaller endpoint
            if (leaves.size() == 1 && leaves[0] < c) return;
            emit(c, leaves);
        });
    }
}

template <std::size_t W>
class StarSearch {
public:
    using Mask = Bits<W>;

    StarSearch(const Graph& g, std::size_t M, CutKind kind, const SearchOptions& opt)
        : g_(g), M_(M), kind_(kind), opt_(opt), adj_(g.order()) {
        for (Vertex v = 0; v < g.order(); ++v) {
            all_.set(v);
            for (Vertex u : g.neighbors(v)) adj_[v].set(u);
        }
        const bool exact = kind == CutKind::structure;
        std::unordered_set<Mask, BitsHash<W>> seen;
        for_each_star(g, M, exact, [&](Vertex c, const std::vector<Vertex>& leaves) {
            Cand cand{{}, c};
            cand.mask.set(c);
            for (Vertex l : leaves) cand.mask.set(l);
            if (opt.merge_equal_vertex_sets && !seen.insert(cand.mask).second) return;
            cands_.push_back(cand);
        });
        if (opt.damage_order) {
            std::vector<std::size_t> dmg(cands_.size());
            for (std::size_t i = 0; i < cands_.size(); ++i) {
                Mask b{};
                cands_[i].mask.for_each([&](std::size_t v) { b |= adj_[v]; });
                dmg[i] = minus(b, cands_[i].mask).count();
            }
            std::vector<std::size_t> idx(cands_.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return dmg[a] > dmg[b]; });
            std::vector<Cand> sorted;
            sorted.reserve(cands_.size());
            for (auto i : idx) sorted.push_back(cands_[i]);
            cands_ = std::move(sorted);
        }
        // end of the run of equal centers starting at i (only when center-sorted)
        block_end_.resize(cands_.size());
        for (std::size_t i = cands_.size(); i-- > 0;) {
            const bool same = !opt.damage_order && i + 1 < cands_.size() &&
                              cands_[i + 1].center == cands_[i].center;
            block_end_[i] = same ? block_end_[i + 1] : i + 1;
        }
    }

    SolveResult run() {
        if (opt_.time_budget) deadline_ = Clock::now() + *opt_.time_budget;
        SolveResult res;
        for (std::size_t t = 1; t <= opt_.t_max; ++t) {
            std::optional<std::vector<std::size_t>> hit;
            if (t <= g_.order()) hit = level(t);
            res.nodes = nodes_;
            if (stop_.load()) {
                res.budget_exhausted = true;
                return res;
            }
            res.bound = t;
            if (hit) {
                CutFamily f{{}, kind_, M_};
                for (auto i : *hit) f.elements.push_back(to_star(cands_[i]));
                res.value = t;
                res.certificate = f.canonical();
                return res;
            }
        }
        return res;
    }

    [[nodiscard]] std::size_t candidate_count() const { return cands_.size(); }

private:
    using Clock = std::chrono::steady_clock;
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    struct Cand {
        Mask mask;
        Vertex center;
    };

    struct Worker {
        std::vector<std::uint32_t> stamp;
        std::vector<std::uint8_t> ok;
        std::uint32_t gen = 0;
        std::uint64_t nodes = 0;
        std::vector<std::size_t> chosen;
    };

    Star to_star(const Cand& c) const {
        std::vector<Vertex> leaves;
        c.mask.for_each([&](std::size_t v) {
            if (v != c.center) leaves.push_back(static_cast<Vertex>(v));
        });
        return Star{c.center, std::move(leaves)};
    }

    Worker make_worker() const {
        Worker w;
        w.stamp.assign(g_.order(), 0);
        w.ok.assign(g_.order(), 0);
        return w;
    }

    bool expired(Worker& w) {
        if ((++w.nodes & 0xFFF) == 0 && deadline_ && Clock::now() >= *deadline_) stop_.store(true);
        return stop_.load(std::memory_order_relaxed);
    }

    [[nodiscard]] bool cut_after(const Mask& removed) const {
        const Mask alive = minus(all_, removed);
        const std::size_t left = alive.count();
        if (left == 1) return true;
        if (left == 0) return opt_.triviality == Triviality::at_most_one;
        return !connected_within<W>(adj_, alive);
    }

    // With Q = alive \ N[c]: if Q is connected with at least two vertices and
    // every neighbor of c touches Q, then alive minus any star centered at c
    // is connected and non-trivial.
    [[nodiscard]] bool anchor_possible(Vertex c, const Mask& alive) const {
        const Mask nb = adj_[c] & alive;
        Mask q = minus(alive, nb);
        q.reset(c);
        if (q.count() <= 1) return true;
        if (!connected_within<W>(adj_, q)) return true;
        bool loose = false;
        nb.for_each([&](std::size_t a) {
            if (!loose && !adj_[a].intersects(q)) loose = true;
        });
        return loose;
    }

    bool center_ok(Worker& w, Vertex c, const Mask& alive) {
        if (!opt_.anchor_pruning) return true;
        if (w.stamp[c] != w.gen) {
            w.stamp[c] = w.gen;
            w.ok[c] = anchor_possible(c, alive) ? 1 : 0;
        }
        return w.ok[c] != 0;
    }

    bool last(Worker& w, std::size_t start, const Mask& removed) {
        if (++w.gen == 0) {
            std::fill(w.stamp.begin(), w.stamp.end(), 0);
            w.gen = 1;
        }
        const Mask alive = minus(all_, removed);
        for (std::size_t i = start; i < cands_.size();) {
            if (expired(w)) return false;
            const Cand& c = cands_[i];
            if (!alive.test(c.center) || !center_ok(w, c.center, alive)) {
                i = block_end_[i];
                continue;
            }
            if (!c.mask.intersects(removed) && cut_after(removed | c.mask)) {
                w.chosen.push_back(i);
                return true;
            }
            ++i;
        }
        return false;
    }

    bool dfs(Worker& w, std::size_t r, std::size_t start, const Mask& removed) {
        if (r == 1) return last(w, start, removed);
        for (std::size_t i = start; i < cands_.size(); ++i) {
            if (expired(w)) return false;
            if (cands_[i].mask.intersects(removed)) continue;
            w.chosen.push_back(i);
            if (dfs(w, r - 1, i + 1, removed | cands_[i].mask)) return true;
            w.chosen.pop_back();
        }
        return false;
    }

    // Returns the chosen candidate indices of the first cut of size t.
    std::optional<std::vector<std::size_t>> level(std::size_t t) {
        const unsigned threads = std::max(1U, opt_.threads);
        if (threads == 1 || t == 1) {
            Worker w = make_worker();
            const bool hit = dfs(w, t, 0, Mask{});
            nodes_ += w.nodes;
            if (hit) return w.chosen;
            return std::nullopt;
        }
        // Subtrees rooted at distinct first stars run concurrently; the
        // subtree with the smallest first index wins, which is the answer the
        // sequential walk returns.
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{none};
        std::vector<std::size_t> best_chosen;
        std::mutex mu;
        std::atomic<std::uint64_t> nodes{0};
        auto body = [&] {
            Worker w = make_worker();
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cands_.size() || i > best.load() || stop_.load()) break;
                w.chosen.assign(1, i);
                if (dfs(w, t - 1, i + 1, cands_[i].mask)) {
                    std::lock_guard lock(mu);
                    if (i < best.load()) {
                        best.store(i);
                        best_chosen = w.chosen;
                    }
                }
            }
            nodes += w.nodes;
        };
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(body);
        for (auto& th : pool) th.join();
        nodes_ += nodes.load();
        if (best.load() != none) return best_chosen;
        return std::nullopt;
    }

    const Graph& g_;
    std::size_t M_;
    CutKind kind_;
    SearchOptions opt_;
    std::vector<Mask> adj_;
    Mask all_{};
    std::vector<Cand> cands_;
    std::vector<std::size_t> block_end_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<bool> stop_{false};
    std::uint64_t nodes_ = 0;
};

template <std::size_t W>
SolveResult run_search(const Graph& g, std::size_t M, CutKind kind, const SearchOptions& opt) {
    StarSearch<W> s(g, M, kind, opt);
    return s.run();
}

}  // namespace detail

/// All canonical stars of g: exactly M leaves when `exact`, else 0..M leaves.
/// Sorted by (center, leaves); a single-edge star is centered at its smaller end.
inline std::vector<Star> enumerate_stars(const Graph& g, std::size_t M, bool exact) {
    std::vector<Star> out;
    detail::for_each_star(g, M, exact,
                          [&](Vertex c, const std::vector<Vertex>& leaves) { out.push_back(Star{c, leaves}); });
    return out;
}

inline constexpr std::size_t max_search_order = 512;

inline SolveResult solve_connectivity(const Graph& g, std::size_t M, CutKind kind, const SearchOptions& opt) {
    if (g.order() < 2) throw std::invalid_argument("connectivity is undefined on a trivial graph");
    if (!is_connected(g)) throw std::invalid_argument("connectivity is undefined on a disconnected graph");
    if (opt.t_max < 1) throw std::invalid_argument("t_max must be at least 1");
    const std::size_t n = g.order();
    if (n <= 64) return detail::run_search<1>(g, M, kind, opt);
    if (n <= 128) return detail::run_search<2>(g, M, kind, opt);
    if (n <= 256) return detail::run_search<4>(g, M, kind, opt);
    if (n <= max_search_order) return detail::run_search<8>(g, M, kind, opt);
    throw std::invalid_argument("graph too large for exact search (n=" + std::to_string(n) + ")");
}

/// kappa(G; K_{1,M}) searched up to t_max elements.
inline SolveResult structure_connectivity(const Graph& g, std::size_t M, const SearchOptions& opt) {
    return solve_connectivity(g, M, CutKind::structure, opt);
}

/// kappa^s(G; K_{1,M}) searched up to t_max elements.
inline SolveResult substructure_connectivity(const Graph& g, std::size_t M, const SearchOptions& opt) {
    return solve_connectivity(g, M, CutKind::substructure, opt);
}

}  // namespace starcut
