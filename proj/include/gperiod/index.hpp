#pragma once

// Index of convergence without iterating to n^2 matrix powers blindly.
//
// K is below the index iff some pair (s, t) disagrees between "there is an
// (s, t)-path of length K" and "for all large i there is an (s, t)-path of
// length K + i*P". The second predicate holds iff some cyclic component C
// lies on an (s, t)-path whose length is K mod per(C), which is plain
// reachability in V x Z_per(C) x {not yet in C, been in C}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gperiod/arith.hpp"
#include "gperiod/bool_matrix.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/oracle.hpp"
#include "gperiod/period.hpp"
#include "gperiod/scc.hpp"

namespace gperiod {

// Is there an (s, t)-walk with exactly `length` edges? Length 0 means s == t.
inline bool has_path_of_length(const Digraph& g, Vertex s, Vertex t, std::uint64_t length) {
    if (s >= g.size() || t >= g.size()) throw std::out_of_range("has_path_of_length: vertex out of range");
    std::vector<char> frontier(g.size(), 0), next(g.size(), 0);
    frontier[s] = 1;
    for (std::uint64_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (Vertex u = 0; u < g.size(); ++u) {
            if (!frontier[u]) continue;
            for (Vertex w : g.successors(u)) {
                next[w] = 1;
                any = true;
            }
        }
        if (!any) return false;
        frontier.swap(next);
    }
    return frontier[t] != 0;
}

struct ResidueQuery {
    Vertex source = 0;
    Vertex target = 0;
    std::uint64_t length = 0;          // K
    std::size_t component = 0;         // index into the SccDecomposition
    std::uint64_t component_period = 1;
    BigInt global_period{1};
};

namespace detail {

// Breadth-first search over (vertex, length mod p, touched C) from
// (source, 0, source in C). Shortest paths in this space have at most
// 2*n*p - 1 edges.
class ResidueSearch {
public:
    ResidueSearch(const Digraph& g, const std::vector<bool>& in_component, std::uint64_t p, Vertex source)
        : n_(g.size()), p_(p), parent_(n_ * p_ * 2, unseen) {
        const std::size_t start = state(source, 0, in_component[source]);
        parent_[start] = start;
        std::vector<std::size_t> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            const Vertex u = static_cast<Vertex>(x / (2 * p_));
            const std::uint64_t r = (x / 2) % p_;
            const bool touched = (x % 2) != 0;
            for (Vertex w : g.successors(u)) {
                const std::size_t y = state(w, (r + 1) % p_, touched || in_component[w]);
                if (parent_[y] == unseen) {
                    parent_[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }

    bool reached(Vertex t, std::uint64_t residue) const { return parent_[state(t, residue, true)] != unseen; }

    std::optional<std::vector<Vertex>> path_to(Vertex t, std::uint64_t residue) const {
        std::size_t x = state(t, residue, true);
        if (parent_[x] == unseen) return std::nullopt;
        std::vector<Vertex> path;
        while (true) {
            path.push_back(static_cast<Vertex>(x / (2 * p_)));
            if (parent_[x] == x) break;
            x = parent_[x];
        }
        return std::vector<Vertex>(path.rbegin(), path.rend());
    }

private:
    static constexpr std::size_t unseen = static_cast<std::size_t>(-1);

    std::size_t state(Vertex u, std::uint64_t r, bool touched) const {
        return (static_cast<std::size_t>(u) * p_ + r) * 2 + (touched ? 1 : 0);
    }

    std::size_t n_;
    std::uint64_t p_;
    std::vector<std::size_t> parent_;
};

inline void validate(const Digraph& g, const SccDecomposition& scc, const ResidueQuery& q) {
    const std::uint64_t n = g.size();
    if (q.source >= n || q.target >= n) throw std::out_of_range("residue query: vertex out of range");
    if (q.component >= scc.count()) throw std::out_of_range("residue query: no such component");
    if (!scc.has_cycle[q.component]) throw std::invalid_argument("residue query: component has no cycle");
    if (q.component_period == 0) throw std::invalid_argument("residue query: period must be positive");
    if (q.global_period % q.component_period != 0) {
        throw std::invalid_argument("residue query: component period does not divide the global period");
    }
    if (q.length > n * n) throw std::invalid_argument("residue query: length exceeds n^2");
}

inline std::vector<bool> membership(const Digraph& g, const SccDecomposition& scc, std::size_t c) {
    std::vector<bool> in(g.size(), false);
    for (Vertex v : scc.components[c]) in[v] = true;
    return in;
}

}  // namespace detail

// A shortest (s, t)-path that meets component C and has length = K mod p,
// as its vertex sequence; nullopt if none exists. A path of zero edges
// counts when s == t lies in C.
inline std::optional<std::vector<Vertex>> residue_witness(const Digraph& g, const SccDecomposition& scc,
                                                          const ResidueQuery& q) {
    detail::validate(g, scc, q);
    const detail::ResidueSearch search(g, detail::membership(g, scc, q.component), q.component_period, q.source);
    return search.path_to(q.target, q.length % q.component_period);
}

inline bool residue_path_exists(const Digraph& g, const SccDecomposition& scc, const ResidueQuery& q) {
    detail::validate(g, scc, q);
    const detail::ResidueSearch search(g, detail::membership(g, scc, q.component), q.component_period, q.source);
    return search.reached(q.target, q.length % q.component_period);
}

inline bool residue_path_exists(const Digraph& g, const ResidueQuery& q) {
    return residue_path_exists(g, scc_decompose(g), q);
}

// Precomputed eventual-reachability tables for one digraph.
//
// For every cyclic component C with period p and every residue r < p,
// eventual_[C][r] holds at (s, t) iff some (s, t)-path through C has length
// r mod p. The union over C at residues K mod p is the set of pairs joined
// by paths of length K + i*P for all large i.
class ConvergenceAnalysis {
public:
    explicit ConvergenceAnalysis(const Digraph& g)
        : n_(g.size()), scc_(scc_decompose(g)), periods_(component_periods(g, scc_)) {
        std::vector<std::int64_t> cyclic;
        for (const auto& p : periods_) {
            if (p) cyclic.push_back(static_cast<std::int64_t>(*p));
        }
        period_ = lcm_list(cyclic);

        const std::size_t n = g.size();
        for (std::size_t c = 0; c < scc_.count(); ++c) {
            if (!periods_[c]) continue;
            const std::uint64_t p = *periods_[c];
            const auto in = detail::membership(g, scc_, c);
            std::vector<BoolMatrix> by_residue(p, BoolMatrix(n));
            for (Vertex s = 0; s < n; ++s) {
                const detail::ResidueSearch search(g, in, p, s);
                for (Vertex t = 0; t < n; ++t) {
                    for (std::uint64_t r = 0; r < p; ++r) {
                        if (search.reached(t, r)) by_residue[r].set(s, t);
                    }
                }
            }
            eventual_.push_back({p, std::move(by_residue)});
        }
    }

    const SccDecomposition& scc() const noexcept { return scc_; }
    const std::vector<std::optional<std::uint64_t>>& periods() const noexcept { return periods_; }
    const PeriodResult& period() const noexcept { return period_; }

    bool eventually_connected(Vertex s, Vertex t, std::uint64_t length) const {
        for (const auto& [p, tables] : eventual_) {
            if (tables[length % p].get(s, t)) return true;
        }
        return false;
    }

    // `power` must be adjacency(g)^length.
    bool below_index(std::uint64_t length, const BoolMatrix& power) const {
        const std::size_t n = n_;
        const std::size_t words = power.words_per_row();
        std::vector<BoolMatrix::Word> row(words);
        for (Vertex s = 0; s < n; ++s) {
            std::fill(row.begin(), row.end(), 0);
            for (const auto& [p, tables] : eventual_) {
                const auto src = tables[length % p].row(s);
                for (std::size_t w = 0; w < words; ++w) row[w] |= src[w];
            }
            const auto actual = power.row(s);
            if (!std::equal(row.begin(), row.end(), actual.begin())) return true;
        }
        return false;
    }

private:
    struct Residues {
        std::uint64_t period;
        std::vector<BoolMatrix> tables;
    };

    std::size_t n_;
    SccDecomposition scc_;
    std::vector<std::optional<std::uint64_t>> periods_;
    PeriodResult period_;
    std::vector<Residues> eventual_;
};

namespace detail {

inline BoolMatrix power_by_propagation(const Digraph& g, std::uint64_t length) {
    const BoolMatrix a = adjacency(g);
    BoolMatrix x = BoolMatrix::identity(g.size());
    for (std::uint64_t k = 0; k < length; ++k) x = bmm(a, x);
    return x;
}

}  // namespace detail

// Is `length` strictly below the index of convergence?
inline bool k_below_index(const Digraph& g, std::uint64_t length) {
    const std::uint64_t n = g.size();
    if (length > n * n) throw std::invalid_argument("k_below_index: length exceeds n^2");
    const ConvergenceAnalysis analysis(g);
    return analysis.below_index(length, detail::power_by_propagation(g, length));
}

inline PowerSignature index_of_convergence(const Digraph& g) {
    const ConvergenceAnalysis analysis(g);
    const std::uint64_t n = g.size();
    const BoolMatrix a = adjacency(g);
    BoolMatrix x = BoolMatrix::identity(n);
    for (std::uint64_t k = 0; k <= n * n; ++k) {
        if (!analysis.below_index(k, x)) return PowerSignature{k, analysis.period().value};
        // a * x keeps the sparse adjacency on the left.
        x = bmm(a, x);
    }
    throw std::logic_error("index_of_convergence: no K <= n^2 passed, which contradicts the n^2 bound");
}

// Exponent of primitivity; requires a primitive digraph.
inline std::uint64_t exponent(const Digraph& g) {
    const SccDecomposition scc = scc_decompose(g);
    if (scc.count() != 1) throw DomainError("exponent: graph is not strongly connected");
    if (!scc.has_cycle[0]) throw DomainError("exponent: graph has no cycle");
    const std::uint64_t p = period_scc(g);
    if (p != 1) throw DomainError("exponent: graph has period " + std::to_string(p) + ", not 1");
    return index_of_convergence(g).index;
}

}  // namespace gperiod
