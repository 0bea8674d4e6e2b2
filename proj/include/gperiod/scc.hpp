#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gperiod/digraph.hpp"

namespace gperiod {

// Strongly connected components in canonical order: components are sorted
// by their smallest vertex and each vertex list is ascending, so the
// numbering depends only on the graph.
struct SccDecomposition {
    std::vector<std::size_t> component_id;       // vertex -> component index
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> has_cycle;                  // at least one internal edge (self-loops count)
    std::vector<bool> is_sink;                    // no edge leaves the component

    std::size_t count() const noexcept { return components.size(); }

    std::size_t sink_count() const {
        return static_cast<std::size_t>(std::count(is_sink.begin(), is_sink.end(), true));
    }
};

inline SccDecomposition scc_decompose(const Digraph& g) {
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

    // Iterative Tarjan.
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> raw;
    std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next successor position)
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            const auto& succ = g.successors(u);
            if (next < succ.size()) {
                const Vertex w = succ[next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            const Vertex done = u;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                raw.push_back(std::move(comp));
            }
        }
    }

    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    SccDecomposition out;
    out.component_id.assign(n, 0);
    out.components = std::move(raw);
    const std::size_t c = out.components.size();
    out.has_cycle.assign(c, false);
    out.is_sink.assign(c, true);
    for (std::size_t i = 0; i < c; ++i) {
        for (Vertex v : out.components[i]) out.component_id[v] = i;
    }
    for (Vertex u = 0; u < n; ++u) {
        const std::size_t cu = out.component_id[u];
        for (Vertex w : g.successors(u)) {
            if (out.component_id[w] == cu) {
                out.has_cycle[cu] = true;
            } else {
                out.is_sink[cu] = false;
            }
        }
    }
    return out;
}

inline bool is_strongly_connected(const Digraph& g) { return scc_decompose(g).count() == 1; }

// Unique sink component, and every cycle lives inside it.
inline bool is_almost_strongly_connected(const SccDecomposition& scc) {
    if (scc.sink_count() != 1) return false;
    for (std::size_t c = 0; c < scc.count(); ++c) {
        if (scc.has_cycle[c] && !scc.is_sink[c]) return false;
    }
    return true;
}

inline bool is_almost_strongly_connected(const Digraph& g) {
    return is_almost_strongly_connected(scc_decompose(g));
}

}  // namespace gperiod
