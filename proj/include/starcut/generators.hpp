#pragma once

// Seeded instance generators for test corpora. Every generator is a pure
// function of its arguments: mt19937_64 plus hand-rolled sampling, so
// corpora are identical across standard library implementations.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/np_oracles.hpp"

namespace starcut {

namespace detail {

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t below(std::mt19937_64& rng, std::size_t bound) {
    // bound is tiny in every caller; modulo bias is irrelevant at these sizes
    return static_cast<std::size_t>(rng() % bound);
}

}  // namespace detail

/// G(n, p): each pair is an edge independently with probability p.
inline Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (detail::unit(rng) < p) e.emplace_back(u, v);
    return Graph::build(n, e);
}

/// First connected G(n, p) sample in the seed's attempt sequence.
inline Graph gen_connected_graph(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts = 10000) {
    for (std::size_t a = 0; a < max_attempts; ++a) {
        Graph g = gen_random_graph(n, p, seed * 1000003ULL + a);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("no connected sample after " + std::to_string(max_attempts) +
                             " attempts; raise p or n");
}

struct Gen3dmOptions {
    std::size_t max_occurrence = 3;  // cap on occurrences per element (0 = no cap)
    std::size_t rejection_limit = 100000;
};

/// solvable: plants a perfect matching then adds `extra` distinct triples.
/// unsolvable: draws n + extra distinct triples until the exact solver finds
/// no matching.
inline ThreeDMInstance gen_random_3dm(std::size_t n, std::size_t extra, bool solvable, std::uint64_t seed,
                                      Gen3dmOptions opt = {}) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    std::mt19937_64 rng(seed);
    const std::size_t total = n + extra;
    if (total > n * n * n) throw std::invalid_argument("more triples requested than exist");

    auto fits = [&](const ThreeDMInstance& inst, const Triple& t) {
        if (opt.max_occurrence == 0) return true;
        auto occ = occurrences(inst);
        for (auto l : element_indices(inst, t))
            if (occ[l] + 1 > opt.max_occurrence) return false;
        return true;
    };
    auto draw = [&] {
        return Triple{detail::below(rng, n) + 1, detail::below(rng, n) + 1, detail::below(rng, n) + 1};
    };
    auto fill = [&](ThreeDMInstance& inst) {
        std::set<Triple> have(inst.triples.begin(), inst.triples.end());
        std::size_t tries = 0;
        while (inst.triples.size() < total) {
            if (++tries > opt.rejection_limit) return false;
            const Triple t = draw();
            if (have.count(t) || !fits(inst, t)) continue;
            have.insert(t);
            inst.triples.push_back(t);
        }
        return true;
    };

    for (std::size_t attempt = 0; attempt < opt.rejection_limit; ++attempt) {
        ThreeDMInstance inst{n, {}};
        if (solvable) {
            std::vector<std::size_t> b(n), y(n);
            std::iota(b.begin(), b.end(), 1);
            std::iota(y.begin(), y.end(), 1);
            for (std::size_t i = n; i > 1; --i) {
                std::swap(b[i - 1], b[detail::below(rng, i)]);
                std::swap(y[i - 1], y[detail::below(rng, i)]);
            }
            for (std::size_t r = 1; r <= n; ++r) inst.triples.push_back({r, b[r - 1], y[r - 1]});
        }
        if (!fill(inst)) continue;
        // shuffle so the planted triples are not always first
        for (std::size_t i = inst.triples.size(); i > 1; --i)
            std::swap(inst.triples[i - 1], inst.triples[detail::below(rng, i)]);
        if (solvable || !solve_3dm(inst)) return inst;
    }
    throw std::runtime_error("3DM rejection limit exceeded; try a different extra count or seed");
}

/// All connected graphs on n vertices up to isomorphism (n <= 7), each in
/// its canonical labeling (the edge bitmask minimal over all relabelings).
inline std::vector<Graph> connected_graphs(std::size_t n) {
    if (n > 7) throw std::invalid_argument("isomorphism enumeration supports n <= 7");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        index[pairs[k].first][pairs[k].second] = k;
        index[pairs[k].second][pairs[k].first] = k;
    }
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canon;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        std::uint32_t best = mask;
        for (const auto& p : perms) {
            std::uint32_t img = 0;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1U) img |= std::uint32_t{1} << index[p[pairs[k].first]][p[pairs[k].second]];
            best = std::min(best, img);
            if (best < mask) break;
        }
        if (best == mask) canon.insert(mask);
    }
    std::vector<Graph> out;
    for (auto mask : canon) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1U) e.push_back(pairs[k]);
        Graph g = Graph::build(n, e);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace starcut
