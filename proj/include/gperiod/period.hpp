#pragma once

// Structural period computation.
//
// For a strongly connected G and k >= 1, the lifted graph G'_k is the
// undirected graph on V x Z_k joining (u, i) and (v, i+1 mod k) for every
// edge (u, v). Walking an edge forwards adds one to the residue and walking
// it backwards subtracts one, so (v, 0) and (v, i != 0) are connected
// exactly when some closed undirected walk through v has a net length that
// is nonzero mod k. That happens iff k does not divide the period, and when
// k does divide it the component of (v, 0) spells out a k-consistent
// partition.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gperiod/arith.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/scc.hpp"

namespace gperiod {

class LiftedGraph {
public:
    LiftedGraph(const Digraph& g, std::uint64_t k) : base_n_(g.size()), k_(k) {
        if (k == 0) throw std::invalid_argument("lift: modulus must be at least 1");
        const std::size_t total = base_n_ * k_;
        std::vector<std::size_t> degree(total, 0);
        for (Vertex u = 0; u < base_n_; ++u) {
            for (Vertex v : g.successors(u)) {
                for (std::uint64_t i = 0; i < k_; ++i) {
                    ++degree[encode(u, i)];
                    ++degree[encode(v, (i + 1) % k_)];
                }
            }
        }
        offsets_.assign(total + 1, 0);
        for (std::size_t x = 0; x < total; ++x) offsets_[x + 1] = offsets_[x] + degree[x];
        neighbours_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (Vertex u = 0; u < base_n_; ++u) {
            for (Vertex v : g.successors(u)) {
                for (std::uint64_t i = 0; i < k_; ++i) {
                    const std::size_t a = encode(u, i);
                    const std::size_t b = encode(v, (i + 1) % k_);
                    neighbours_[fill[a]++] = b;
                    neighbours_[fill[b]++] = a;
                }
            }
        }
        for (std::size_t x = 0; x < total; ++x) {
            std::sort(neighbours_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]),
                      neighbours_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]));
        }
    }

    std::size_t base_size() const noexcept { return base_n_; }
    std::uint64_t modulus() const noexcept { return k_; }
    std::size_t size() const noexcept { return base_n_ * k_; }

    std::size_t encode(Vertex u, std::uint64_t residue) const noexcept {
        return static_cast<std::size_t>(u) * k_ + residue;
    }
    Vertex vertex_of(std::size_t x) const noexcept { return static_cast<Vertex>(x / k_); }
    std::uint64_t residue_of(std::size_t x) const noexcept { return x % k_; }

    std::span<const std::size_t> neighbours(std::size_t x) const {
        return {neighbours_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
    }

    bool adjacent(std::size_t a, std::size_t b) const {
        const auto nb = neighbours(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    // Connected-component label of every lifted vertex, labels in order of
    // first appearance.
    std::vector<std::size_t> component_labels() const {
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> label(size(), none);
        std::size_t next = 0;
        std::vector<std::size_t> queue;
        for (std::size_t root = 0; root < size(); ++root) {
            if (label[root] != none) continue;
            label[root] = next;
            queue.assign(1, root);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (std::size_t y : neighbours(queue[head])) {
                    if (label[y] == none) {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            ++next;
        }
        return label;
    }

    // Residues j such that (u, j) is connected to `from`, per base vertex.
    // Stops early, returning nullopt, as soon as two residues of `stop_vertex`
    // are found connected to `from`.
    std::optional<std::vector<std::vector<std::uint64_t>>> residues_reached(std::size_t from,
                                                                          Vertex stop_vertex) const {
        std::vector<bool> seen(size(), false);
        std::vector<std::vector<std::uint64_t>> residues(base_n_);
        std::vector<std::size_t> queue{from};
        seen[from] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            residues[vertex_of(x)].push_back(residue_of(x));
            if (residues[stop_vertex].size() > 1) return std::nullopt;
            for (std::size_t y : neighbours(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        return residues;
    }

private:
    std::size_t base_n_;
    std::uint64_t k_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> neighbours_;
};

inline LiftedGraph lift(const Digraph& g, std::uint64_t k) { return LiftedGraph(g, k); }

struct ConsistentPartition {
    std::uint64_t k = 1;
    std::vector<std::uint64_t> class_of;  // vertex -> residue in [0, k)

    bool operator==(const ConsistentPartition&) const = default;
};

namespace detail {

inline void require_strongly_connected(const Digraph& g, const char* op) {
    if (!is_strongly_connected(g)) {
        throw DomainError(std::string(op) + ": graph is not strongly connected");
    }
}

// The divisibility test without the strong-connectivity check.
inline bool divides_period_unchecked(const Digraph& g, std::uint64_t k, Vertex v) {
    const LiftedGraph lifted(g, k);
    return lifted.residues_reached(lifted.encode(v, 0), v).has_value();
}

// Length of a shortest cycle through v, or nullopt if v is on no cycle.
inline std::optional<std::uint64_t> shortest_cycle_through(const Digraph& g, Vertex v) {
    constexpr std::uint64_t unseen = static_cast<std::uint64_t>(-1);
    std::vector<std::uint64_t> dist(g.size(), unseen);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    std::optional<std::uint64_t> best;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.successors(u)) {
            if (w == v) {
                const std::uint64_t len = dist[u] + 1;
                if (!best || len < *best) best = len;
            } else if (dist[w] == unseen) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return best;
}

}  // namespace detail

// True iff (v, 0) reaches no (v, i), i != 0, in lift(g, k); for strongly
// connected g this is exactly "k divides the period".
inline bool divides_period(const Digraph& g, std::uint64_t k, Vertex v = 0) {
    detail::require_strongly_connected(g, "divides_period");
    if (k == 0 || k > g.size()) throw std::invalid_argument("divides_period: k must lie in [1, n]");
    if (v >= g.size()) throw std::out_of_range("divides_period: vertex out of range");
    return detail::divides_period_unchecked(g, k, v);
}

// The largest k in [1, n] passing the divisibility test at vertex 0.
//
// The period divides the length c of any cycle, so only divisors of the
// shortest cycle through vertex 0 can pass; they are tried from the largest
// down and the first success is the answer. This returns the same value as
// scanning every k in [1, n].
inline std::uint64_t period_scc(const Digraph& g) {
    detail::require_strongly_connected(g, "period_scc");
    const auto cycle = detail::shortest_cycle_through(g, 0);
    if (!cycle) throw DomainError("period_scc: graph has no cycle (single vertex without self-loop)");
    for (std::uint64_t k = *cycle; k >= 1; --k) {
        if (*cycle % k != 0) continue;
        if (k == 1 || detail::divides_period_unchecked(g, k, 0)) return k;
    }
    return 1;
}

// The k-consistent partition anchored at vertex 0 (class_of[0] == 0), or
// nullopt if k does not divide the period.
inline std::optional<ConsistentPartition> consistent_partition(const Digraph& g, std::uint64_t k) {
    detail::require_strongly_connected(g, "consistent_partition");
    if (k == 0) throw std::invalid_argument("consistent_partition: k must be at least 1");
    const LiftedGraph lifted(g, k);
    auto residues = lifted.residues_reached(lifted.encode(0, 0), 0);
    if (!residues) return std::nullopt;
    ConsistentPartition out{k, std::vector<std::uint64_t>(g.size(), 0)};
    for (Vertex u = 0; u < g.size(); ++u) {
        // Strong connectivity makes the lifted component meet every fibre.
        if ((*residues)[u].size() != 1) return std::nullopt;
        out.class_of[u] = (*residues)[u].front();
    }
    return out;
}

inline bool verify_partition(const Digraph& g, const ConsistentPartition& part) {
    if (part.k == 0 || part.class_of.size() != g.size()) return false;
    for (std::uint64_t c : part.class_of) {
        if (c >= part.k) return false;
    }
    for (const Edge& e : g.edges()) {
        if (part.class_of[e.to] != (part.class_of[e.from] + 1) % part.k) return false;
    }
    return true;
}

// Period of every component, nullopt for components without a cycle.
inline std::vector<std::optional<std::uint64_t>> component_periods(const Digraph& g,
                                                                   const SccDecomposition& scc) {
    std::vector<std::optional<std::uint64_t>> out(scc.count());
    for (std::size_t c = 0; c < scc.count(); ++c) {
        if (!scc.has_cycle[c]) continue;
        out[c] = period_scc(induced_subgraph(g, scc.components[c]));
    }
    return out;
}

inline PeriodResult period_general(const Digraph& g, const SccDecomposition& scc) {
    std::vector<std::int64_t> periods;
    for (const auto& p : component_periods(g, scc)) {
        if (p) periods.push_back(static_cast<std::int64_t>(*p));
    }
    return lcm_list(periods);
}

inline PeriodResult period_general(const Digraph& g) { return period_general(g, scc_decompose(g)); }

inline bool is_primitive(const Digraph& g) {
    const SccDecomposition scc = scc_decompose(g);
    if (scc.count() != 1 || !scc.has_cycle[0]) return false;
    return period_scc(g) == 1;
}

}  // namespace gperiod
