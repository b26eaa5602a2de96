#pragma once

// Fixed-width vertex bitsets used by the search kernels.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace starcut::detail {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    static constexpr std::size_t capacity = 64 * W;

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

    [[nodiscard]] bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    [[nodiscard]] bool none() const { return !any(); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    // Index of the lowest set bit; capacity if empty.
    [[nodiscard]] std::size_t first() const {
        for (std::size_t k = 0; k < W; ++k)
            if (w[k]) return 64 * k + static_cast<std::size_t>(std::countr_zero(w[k]));
        return capacity;
    }

    [[nodiscard]] bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < W; ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < W; ++k) w[k] |= o.w[k];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < W; ++k) w[k] &= o.w[k];
        return *this;
    }
    Bits& andnot(const Bits& o) {
        for (std::size_t k = 0; k < W; ++k) w[k] &= ~o.w[k];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.andnot(b); }
    friend bool operator==(const Bits&, const Bits&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < W; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                f(64 * k + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

template <std::size_t W>
struct BitsHash {
    std::size_t operator()(const Bits<W>& b) const { return b.hash(); }
};

// Vertices of `alive` reachable from `start` through `adj`, restricted to `alive`.
template <std::size_t W, class Adj>
Bits<W> reach(const Adj& adj, const Bits<W>& alive, std::size_t start) {
    Bits<W> seen{};
    seen.set(start);
    Bits<W> frontier = seen;
    while (frontier.any()) {
        Bits<W> next{};
        frontier.for_each([&](std::size_t v) { next |= adj[v]; });
        next &= alive;
        next.andnot(seen);
        seen |= next;
        frontier = next;
    }
    return seen;
}

template <std::size_t W, class Adj>
bool connected_within(const Adj& adj, const Bits<W>& alive) {
    const std::size_t s = alive.first();
    if (s == Bits<W>::capacity) return true;
    return reach<W>(adj, alive, s) == alive;
}

}  // namespace starcut::detail
