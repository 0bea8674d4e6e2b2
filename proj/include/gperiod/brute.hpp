#pragma once

// Exhaustive reference procedures for small graphs. None of these use the
// lifted graph or the product-space search.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gperiod/bool_matrix.hpp"
#include "gperiod/digraph.hpp"

namespace gperiod::brute {

// Bit (u*n + v) of `mask` is the edge (u, v).
inline Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < n * n; ++b) {
        if ((mask >> b) & 1U) edges.push_back({static_cast<Vertex>(b / n), static_cast<Vertex>(b % n)});
    }
    return Digraph(n, edges);
}

// Calls f on every digraph with n vertices (2^(n^2) of them); n <= 5.
inline void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& f) {
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t mask = 0; mask < count; ++mask) f(digraph_from_mask(n, mask));
}

inline bool strongly_connected_by_bfs(const Digraph& g) {
    for (Vertex u = 0; u < g.size(); ++u) {
        const auto seen = reachable_from(g, u);
        for (bool b : seen) {
            if (!b) return false;
        }
    }
    return true;
}

// Backtracking over labelings V -> Z_k with vertex 0 fixed to class 0
// (any consistent labeling can be rotated to that form).
inline std::optional<std::vector<std::uint64_t>> find_consistent_labeling(const Digraph& g, std::uint64_t k) {
    const std::size_t n = g.size();
    std::vector<std::uint64_t> label(n, 0);
    const auto edges = g.edges();
    auto consistent_so_far = [&](std::size_t assigned) {
        for (const Edge& e : edges) {
            if (e.from < assigned && e.to < assigned && label[e.to] != (label[e.from] + 1) % k) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> place = [&](std::size_t v) {
        if (!consistent_so_far(v)) return false;
        if (v == n) return true;
        const std::uint64_t options = v == 0 ? 1 : k;
        for (std::uint64_t c = 0; c < options; ++c) {
            label[v] = c;
            if (place(v + 1)) return true;
        }
        return false;
    };
    if (place(0)) return label;
    return std::nullopt;
}

// All simple cycles, each rotated to start at its smallest vertex. Stops
// after `limit` cycles.
inline std::vector<std::vector<Vertex>> simple_cycles(const Digraph& g, std::size_t limit = 1000) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    std::vector<bool> on_path(g.size(), false);
    std::function<void(Vertex, Vertex)> extend = [&](Vertex root, Vertex u) {
        for (Vertex w : g.successors(u)) {
            if (out.size() >= limit) return;
            if (w == root) {
                out.push_back(stack);
            } else if (w > root && !on_path[w]) {
                on_path[w] = true;
                stack.push_back(w);
                extend(root, w);
                stack.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (Vertex root = 0; root < g.size(); ++root) {
        stack.assign(1, root);
        on_path[root] = true;
        extend(root, root);
        on_path[root] = false;
    }
    return out;
}

// "For every i in [lo, hi] there is an (s, t)-walk of length K + i*P",
// evaluated with explicit matrix powers.
inline bool paths_for_all_multiples(const Digraph& g, Vertex s, Vertex t, std::uint64_t length,
                                    std::uint64_t period, std::uint64_t lo, std::uint64_t hi) {
    const BoolMatrix a = adjacency(g);
    const BoolMatrix step = power(a, period);
    BoolMatrix current = power(a, length + lo * period);
    for (std::uint64_t i = lo; i <= hi; ++i) {
        if (!current.get(s, t)) return false;
        current = bmm(current, step);
    }
    return true;
}

}  // namespace gperiod::brute
