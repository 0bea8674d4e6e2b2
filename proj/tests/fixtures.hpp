#pragma once

// Small named digraphs used across the test suites.

#include <vector>

#include "gperiod/digraph.hpp"

namespace gperiod::fixtures {

inline Digraph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Digraph(n, e);
}

// Disjoint cycles of the given lengths, numbered consecutively.
inline Digraph disjoint_cycles(const std::vector<std::size_t>& lengths) {
    std::vector<Edge> e;
    Vertex base = 0;
    for (std::size_t len : lengths) {
        for (std::size_t i = 0; i < len; ++i) {
            e.push_back({static_cast<Vertex>(base + i), static_cast<Vertex>(base + (i + 1) % len)});
        }
        base += static_cast<Vertex>(len);
    }
    return Digraph(base, e);
}

// Cycle 0->1->2->3->0 plus chord 3->1.
inline Digraph wielandt4() { return Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}}); }

inline Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }

// Period 2 but no 2-consistent partition: 0 -> 1, 0 -> 2, 1 <-> 2.
inline Digraph no_partition_example() { return Digraph(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}); }

// A 4-cycle and a 6-cycle sharing vertex 0.
inline Digraph cycles_4_6_shared() {
    return Digraph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
}

// Reference source digraph for the period reduction: s=0, p2=1, t'=2, s'=3,
// r2=4, t=5, z1=6. The only s-t route is s -> p2 -> z1 -> t.
struct StFixture {
    Digraph graph;
    Vertex s, t, s_prime, t_prime;
};

inline StFixture reduction_source() {
    return {Digraph(7, {{0, 1}, {1, 2}, {3, 1}, {3, 4}, {4, 5}, {4, 2}, {1, 6}, {6, 5}}), 0, 5, 3, 2};
}

inline StFixture reduction_source_cut() {
    return {Digraph(7, {{0, 1}, {1, 2}, {3, 1}, {3, 4}, {4, 5}, {4, 2}, {6, 5}}), 0, 5, 3, 2};
}

// Reference source digraph for the exponent reduction: s=0, t'=1, t=2, s'=3.
inline StFixture exponent_source() { return {Digraph(4, {{0, 1}, {3, 1}, {3, 2}}), 0, 2, 3, 1}; }

inline StFixture exponent_source_reachable() { return {Digraph(4, {{0, 1}, {3, 1}, {3, 2}, {0, 2}}), 0, 2, 3, 1}; }

}  // namespace gperiod::fixtures
