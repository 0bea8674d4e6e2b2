#pragma once

// Brute-force reference values from explicit Boolean matrix powers.
//
// Everything here is deliberately naive: it materialises A^k one product at
// a time and compares whole matrices. The structural engines are checked
// against it, so it must not share their code paths.

#include <cstdint>
#include <numeric>
#include <optional>

#include "gperiod/arith.hpp"
#include "gperiod/bool_matrix.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/scc.hpp"

namespace gperiod {

// Index m and period p of the sequence A^0 = I, A^1, A^2, ...:
// the smallest m >= 0 and p >= 1 with A^{i+p} = A^i for all i >= m.
struct PowerSignature {
    std::uint64_t index = 0;
    BigInt period{1};

    bool operator==(const PowerSignature&) const = default;
};

inline PowerSignature oracle_signature(const Digraph& g) {
    const std::size_t n = g.size();
    const BoolMatrix a = adjacency(g);
    const std::uint64_t settle = static_cast<std::uint64_t>(n) * n;

    // The index never exceeds n^2, so A^{n^2} lies on the periodic part and
    // the first return to it gives the period.
    BoolMatrix anchor = BoolMatrix::identity(n);
    for (std::uint64_t k = 0; k < settle; ++k) anchor = bmm(anchor, a);

    std::uint64_t period = 1;
    BoolMatrix probe = bmm(anchor, a);
    while (!(probe == anchor)) {
        probe = bmm(probe, a);
        ++period;
    }

    BoolMatrix low = BoolMatrix::identity(n);
    BoolMatrix high = low;
    for (std::uint64_t k = 0; k < period; ++k) high = bmm(high, a);
    std::uint64_t index = 0;
    while (!(low == high)) {
        low = bmm(low, a);
        high = bmm(high, a);
        ++index;
    }
    return PowerSignature{index, BigInt(period)};
}

// gcd of the k in [1, n^2] with A^k[v][v] = 1, or nullopt if there is none.
inline std::optional<std::uint64_t> oracle_cycle_gcd(const Digraph& g, Vertex v) {
    if (!is_strongly_connected(g)) throw DomainError("oracle_cycle_gcd: graph is not strongly connected");
    if (v >= g.size()) throw std::out_of_range("oracle_cycle_gcd: vertex out of range");
    const std::size_t n = g.size();
    const BoolMatrix a = adjacency(g);
    BoolMatrix pw = a;
    std::uint64_t g_acc = 0;
    for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(n) * n; ++k) {
        if (pw.get(v, v)) g_acc = std::gcd(g_acc, k);
        pw = bmm(pw, a);
    }
    if (g_acc == 0) return std::nullopt;
    return g_acc;
}

}  // namespace gperiod
