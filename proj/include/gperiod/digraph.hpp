#pragma once

// Finite directed graph on dense vertex ids 0..n-1.
//
// Self-loops are allowed and parallel edges collapse, which is all the
// Boolean semiring can see of a nonnegative matrix. A Digraph is immutable
// once built; adjacency lists are kept sorted so every traversal is
// deterministic.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gperiod {

using Vertex = std::uint32_t;

struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const Edge&) const = default;
};

// Raised when an operation's structural precondition does not hold
// (e.g. a period requested for a graph that is not strongly connected).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Digraph {
public:
    explicit Digraph(std::size_t n) : Digraph(n, std::span<const Edge>{}) {}

    Digraph(std::size_t n, std::span<const Edge> edges)
        : n_(n), succ_(n), pred_(n) {
        if (n == 0) {
            throw std::invalid_argument("digraph must have at least one vertex");
        }
        for (const Edge& e : edges) {
            if (e.from >= n || e.to >= n) {
                throw std::out_of_range("edge (" + std::to_string(e.from) + ", " +
                                        std::to_string(e.to) + ") has endpoint >= " +
                                        std::to_string(n));
            }
            succ_[e.from].push_back(e.to);
            pred_[e.to].push_back(e.from);
        }
        for (std::size_t u = 0; u < n; ++u) {
            normalize(succ_[u]);
            normalize(pred_[u]);
            edge_count_ += succ_[u].size();
        }
    }

    Digraph(std::size_t n, std::initializer_list<Edge> edges)
        : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Vertex>& successors(Vertex u) const { return succ_.at(u); }
    const std::vector<Vertex>& predecessors(Vertex u) const { return pred_.at(u); }

    std::size_t out_degree(Vertex u) const { return succ_.at(u).size(); }
    std::size_t in_degree(Vertex u) const { return pred_.at(u).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& s = succ_.at(u);
        return std::binary_search(s.begin(), s.end(), v);
    }

    // Edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < n_; ++u) {
            for (Vertex v : succ_[u]) {
                out.push_back({static_cast<Vertex>(u), v});
            }
        }
        return out;
    }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && succ_ == other.succ_;
    }

private:
    static void normalize(std::vector<Vertex>& list) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
};

// Forward BFS; result[v] is true iff v is reachable from source (source included).
inline std::vector<bool> reachable_from(const Digraph& g, Vertex source) {
    std::vector<bool> seen(g.size(), false);
    std::vector<Vertex> queue{source};
    seen.at(source) = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.successors(queue[head])) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

inline bool reaches(const Digraph& g, Vertex s, Vertex t) { return reachable_from(g, s).at(t); }

// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
inline Digraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices) {
    std::vector<std::int64_t> local(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local.at(vertices[i]) = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.successors(vertices[i])) {
            if (local[w] >= 0) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(local[w])});
            }
        }
    }
    return Digraph(vertices.size(), edges);
}

inline bool is_acyclic(const Digraph& g) {
    std::vector<std::size_t> indeg(g.size());
    std::vector<Vertex> order;
    for (Vertex u = 0; u < g.size(); ++u) {
        indeg[u] = g.in_degree(u);
        if (indeg[u] == 0) order.push_back(u);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex w : g.successors(order[head])) {
            if (--indeg[w] == 0) order.push_back(w);
        }
    }
    return order.size() == g.size();
}

}  // namespace gperiod
