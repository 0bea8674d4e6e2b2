#pragma once

// Instance generators: plain families (cycles, Wielandt digraphs, random
// digraphs) and the hardness reductions from st-reachability and ORD, each
// labelled with the answer the reduction encodes. Labels are computed from
// the source instance by BFS or by reading off the path order, never by the
// period or index engines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gperiod/digraph.hpp"
#include "gperiod/io.hpp"

namespace gperiod {

enum class ExponentSide { at_most_half, at_least_half_plus_one };

struct GadgetLabel {
    std::optional<std::uint64_t> expected_period;
    std::optional<ExponentSide> exponent_side;
    std::uint64_t half = 0;  // |V'| / 2, meaningful with exponent_side

    // "period=1", "exponent_at_most=4" or "exponent_at_least=5".
    std::string to_string() const {
        if (expected_period) return "period=" + std::to_string(*expected_period);
        if (exponent_side == ExponentSide::at_most_half) return "exponent_at_most=" + std::to_string(half);
        if (exponent_side) return "exponent_at_least=" + std::to_string(half + 1);
        return "none";
    }
};

struct GadgetInstance {
    Digraph graph;
    GadgetLabel label;
    std::string family;
    std::string provenance;
    std::map<std::string, Vertex> special;

    std::vector<std::pair<std::string, std::string>> header() const {
        std::string names;
        for (const auto& [name, v] : special) {
            if (!names.empty()) names += ' ';
            names += name + "=" + std::to_string(v);
        }
        std::vector<std::pair<std::string, std::string>> out{
            {"family", family}, {"provenance", provenance}, {"label", label.to_string()}};
        if (!names.empty()) out.emplace_back("special", names);
        return out;
    }
};

// ---------------------------------------------------------------------------
// Plain families

inline Digraph gen_cycle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gen_cycle: n must be at least 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return Digraph(n, edges);
}

// n-cycle plus the chord (n-1) -> 1; exponent (n-1)^2 + 1.
inline Digraph gen_wielandt(std::size_t n) {
    if (n < 3) throw std::invalid_argument("gen_wielandt: n must be at least 3");
    std::vector<Edge> edges = gen_cycle(n).edges();
    edges.push_back({static_cast<Vertex>(n - 1), 1});
    return Digraph(n, edges);
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; unlike the standard
// distributions this is the same on every standard library.
inline double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(rng, i)]);
}

}  // namespace detail

// Each of the n^2 ordered pairs (self-loops included) is an edge with
// probability p, independently.
inline Digraph gen_random(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_random: n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random: probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (detail::unit_interval(rng) < p) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    }
    return Digraph(n, edges);
}

// Random strongly connected digraph whose period is a multiple of a random
// d in [1, n]: vertices get classes mod d, edges only step class i -> i+1,
// and a closed walk through every vertex keeps the graph strongly connected.
inline Digraph gen_random_strongly_connected(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_random_strongly_connected: n must be at least 1");
    std::mt19937_64 rng(seed);
    const std::size_t d = 1 + detail::below(rng, n);
    const double density = 0.5 * detail::unit_interval(rng);

    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    detail::shuffle(order, rng);
    std::vector<std::size_t> class_of(n);
    std::vector<std::vector<Vertex>> members(d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = i < d ? i : detail::below(rng, d);
        class_of[order[i]] = c;
        members[c].push_back(order[i]);
    }

    std::vector<Edge> edges;
    std::size_t rounds = 0;
    for (const auto& m : members) rounds = std::max(rounds, m.size());
    std::vector<Vertex> walk;
    for (std::size_t r = 0; r < rounds; ++r) {
        for (std::size_t c = 0; c < d; ++c) walk.push_back(members[c][r % members[c].size()]);
    }
    for (std::size_t i = 0; i < walk.size(); ++i) edges.push_back({walk[i], walk[(i + 1) % walk.size()]});

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (class_of[v] == (class_of[u] + 1) % d && detail::unit_interval(rng) < density) {
                edges.push_back({u, v});
            }
        }
    }
    return Digraph(n, edges);
}

// ---------------------------------------------------------------------------
// st-reachability normal form

struct LayeredGraph {
    Digraph graph;
    Vertex source;
    Vertex target;
};

// |V| copies of V; copy i of u has edges to copy i+1 of u and of every
// successor of u. A shortest s-t path has at most |V|-1 edges, so s reaches
// t iff copy 0 of s reaches the last copy of t.
inline LayeredGraph acyclify_layered(const Digraph& g, Vertex s, Vertex t, std::size_t layers = 0) {
    const std::size_t n = g.size();
    if (s >= n || t >= n) throw std::out_of_range("acyclify_layered: vertex out of range");
    if (layers == 0) layers = n;
    if (layers < n) throw std::invalid_argument("acyclify_layered: need at least |V| layers");
    auto at = [n](Vertex u, std::size_t layer) { return static_cast<Vertex>(layer * n + u); };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < layers; ++i) {
        for (Vertex u = 0; u < n; ++u) {
            edges.push_back({at(u, i), at(u, i + 1)});
            for (Vertex v : g.successors(u)) edges.push_back({at(u, i), at(v, i + 1)});
        }
    }
    return LayeredGraph{Digraph(n * layers, edges), at(s, 0), at(t, layers - 1)};
}

struct StReachInstance {
    Digraph graph;
    Vertex s;
    Vertex t;
    Vertex s_prime;
    Vertex t_prime;
};

// Layered DAG in which s is a source, t is a sink, and s', t' are the only
// other source and sink. All first-layer vertices except s merge into s' and
// all last-layer vertices except t merge into t'; neither merge touches an
// s-t path since s' has no in-edges and t' no out-edges. A single-vertex
// input is layered twice and gets fresh s' -> t and s -> t' helpers.
inline StReachInstance normalize_streach(const Digraph& g, Vertex s, Vertex t) {
    const std::size_t n = g.size();
    const std::size_t layers = std::max<std::size_t>(n, 2);
    const LayeredGraph layered = acyclify_layered(g, s, t, layers);
    const std::size_t total = layered.graph.size();
    const std::size_t last = (layers - 1) * n;

    enum class Role { keep, into_s_prime, into_t_prime };
    std::vector<Role> role(total, Role::keep);
    bool have_s_prime = false, have_t_prime = false;
    for (std::size_t x = 0; x < n; ++x) {
        if (x != layered.source) {
            role[x] = Role::into_s_prime;
            have_s_prime = true;
        }
        if (last + x != layered.target) {
            role[last + x] = Role::into_t_prime;
            have_t_prime = true;
        }
    }

    std::vector<Vertex> renumber(total, 0);
    Vertex next = 0;
    for (std::size_t x = 0; x < total; ++x) {
        if (role[x] == Role::keep) renumber[x] = next++;
    }
    const Vertex s_prime = next++;
    const Vertex t_prime = next++;
    for (std::size_t x = 0; x < total; ++x) {
        if (role[x] == Role::into_s_prime) renumber[x] = s_prime;
        if (role[x] == Role::into_t_prime) renumber[x] = t_prime;
    }

    std::vector<Edge> edges;
    for (const Edge& e : layered.graph.edges()) edges.push_back({renumber[e.from], renumber[e.to]});
    const Vertex new_s = renumber[layered.source];
    const Vertex new_t = renumber[layered.target];
    if (!have_s_prime) edges.push_back({s_prime, new_t});
    if (!have_t_prime) edges.push_back({new_s, t_prime});
    return StReachInstance{Digraph(next, edges), new_s, new_t, s_prime, t_prime};
}

// What both st-reachability reductions rely on: an acyclic graph where s has
// no in-edges, t no out-edges, and t' is the only other vertex without
// out-edges (so every vertex reaches t or t').
inline void check_reduction_input(const Digraph& g, Vertex s, Vertex t, Vertex t_prime) {
    const std::size_t n = g.size();
    auto fail = [](const std::string& why) { throw DomainError("normal-form violation: " + why); };
    if (s >= n || t >= n || t_prime >= n) fail("special vertex out of range");
    if (s == t || s == t_prime || t == t_prime) fail("s, t and t' must be distinct");
    if (!is_acyclic(g)) fail("graph has a cycle");
    if (g.in_degree(s) != 0) fail("s has incoming edges");
    if (g.out_degree(t) != 0) fail("t has outgoing edges");
    if (g.out_degree(t_prime) != 0) fail("t' has outgoing edges");
    for (Vertex u = 0; u < n; ++u) {
        if (u != t && u != t_prime && g.out_degree(u) == 0) {
            fail("vertex " + std::to_string(u) + " has no outgoing edges");
        }
    }
}

namespace detail {

inline std::optional<Vertex> other_source(const Digraph& g, Vertex s) {
    for (Vertex u = 0; u < g.size(); ++u) {
        if (u != s && g.in_degree(u) == 0) return u;
    }
    return std::nullopt;
}

}  // namespace detail

// Every edge becomes a path of length two, then (s, t), (t', t) and (t, s)
// are added. All cycles use (t, s); an odd one exists iff s reaches t, so
// the period is 1 if s reaches t and 2 otherwise.
inline GadgetInstance gen_period_gadget(const Digraph& g, Vertex s, Vertex t, Vertex t_prime) {
    check_reduction_input(g, s, t, t_prime);
    const std::size_t n = g.size();
    const auto original = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const Vertex mid = static_cast<Vertex>(n + i);
        edges.push_back({original[i].from, mid});
        edges.push_back({mid, original[i].to});
    }
    edges.push_back({s, t});
    edges.push_back({t_prime, t});
    edges.push_back({t, s});

    GadgetInstance out{Digraph(n + original.size(), edges), {}, "period-gadget", {}, {}};
    out.label.expected_period = reaches(g, s, t) ? 1 : 2;
    out.provenance = "st-reachability n=" + std::to_string(n) + " m=" + std::to_string(original.size()) +
                     " s=" + std::to_string(s) + " t=" + std::to_string(t);
    out.special = {{"s", s}, {"t", t}, {"t'", t_prime}};
    if (auto sp = detail::other_source(g, s)) out.special["s'"] = *sp;
    return out;
}

inline GadgetInstance gen_period_gadget(const StReachInstance& in) {
    return gen_period_gadget(in.graph, in.s, in.t, in.t_prime);
}

// Adds a (t', t)-path through |V| fresh vertices u_1..u_|V|, an edge from
// every vertex to s and from t to every vertex. The result is primitive;
// its exponent is at most |V| = |V'|/2 iff s reaches t in g.
inline GadgetInstance gen_exponent_gadget(const Digraph& g, Vertex s, Vertex t, Vertex t_prime) {
    check_reduction_input(g, s, t, t_prime);
    const std::size_t n = g.size();
    const std::size_t total = 2 * n;
    std::vector<Edge> edges = g.edges();
    for (Vertex x = 0; x < total; ++x) {
        edges.push_back({x, s});
        edges.push_back({t, x});
    }
    auto u = [n](std::size_t i) { return static_cast<Vertex>(n + i); };  // u_{i+1}
    edges.push_back({t_prime, u(0)});
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({u(i), u(i + 1)});
    edges.push_back({u(n - 1), t});

    GadgetInstance out{Digraph(total, edges), {}, "exponent-gadget", {}, {}};
    out.label.half = n;
    out.label.exponent_side = reaches(g, s, t) ? ExponentSide::at_most_half : ExponentSide::at_least_half_plus_one;
    out.provenance = "st-reachability n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()) +
                     " s=" + std::to_string(s) + " t=" + std::to_string(t);
    out.special = {{"s", s}, {"t", t}, {"t'", t_prime}, {"u1", u(0)}, {"u" + std::to_string(n), u(n - 1)}};
    if (auto sp = detail::other_source(g, s)) out.special["s'"] = *sp;
    return out;
}

inline GadgetInstance gen_exponent_gadget(const StReachInstance& in) {
    return gen_exponent_gadget(in.graph, in.s, in.t, in.t_prime);
}

// ---------------------------------------------------------------------------
// ORD

// Vertices of the single directed path described by an unordered successor
// list, first to last.
inline std::vector<Vertex> path_order(std::span<const Edge> successor) {
    if (successor.empty()) throw std::invalid_argument("ORD input: empty successor relation");
    std::map<Vertex, Vertex> next, prev;
    for (const Edge& e : successor) {
        if (e.from == e.to) throw std::invalid_argument("ORD input: not a single path (self-loop)");
        if (!next.emplace(e.from, e.to).second) {
            throw std::invalid_argument("ORD input: not a single path (vertex with two successors)");
        }
        if (!prev.emplace(e.to, e.from).second) {
            throw std::invalid_argument("ORD input: not a single path (vertex with two predecessors)");
        }
    }
    std::optional<Vertex> first;
    for (const auto& [v, w] : next) {
        if (!prev.contains(v)) {
            if (first) throw std::invalid_argument("ORD input: not a single path (several starts)");
            first = v;
        }
    }
    if (!first) throw std::invalid_argument("ORD input: not a single path (cycle)");
    std::vector<Vertex> order{*first};
    for (auto it = next.find(*first); it != next.end(); it = next.find(it->second)) {
        order.push_back(it->second);
        if (order.size() > successor.size() + 1) break;
    }
    if (order.size() != successor.size() + 1) throw std::invalid_argument("ORD input: not a single path");
    return order;
}

// Subdivides the path v -> ... -> v', reroutes the edge entering s through a
// new vertex s', and adds (v', v), (v, s), (v, t), (v, v'). The result has
// exactly four cycles, all through v, and period 1 iff t precedes s.
//
// Output numbering: path vertex at position i is i, the midpoint of the i-th
// path edge is m+1+i (m = number of path edges), and s' is 2m+1.
inline GadgetInstance gen_ord_gadget(std::span<const Edge> successor, Vertex s, Vertex t) {
    const std::vector<Vertex> order = path_order(successor);
    const std::size_t m = order.size() - 1;
    auto position = [&](Vertex x) -> std::size_t {
        const auto it = std::find(order.begin(), order.end(), x);
        if (it == order.end()) throw std::invalid_argument("ORD input: vertex " + std::to_string(x) + " is not on the path");
        return static_cast<std::size_t>(it - order.begin());
    };
    const std::size_t ps = position(s);
    const std::size_t pt = position(t);
    if (ps == pt) throw std::invalid_argument("ORD input: s and t must differ");
    if (ps == m || pt == m) throw std::invalid_argument("ORD input: the last path vertex v' must differ from s and t");
    if (ps == 0) throw std::invalid_argument("ORD input: s must not be the first path vertex (no edge enters it)");

    const Vertex v = 0;
    const Vertex v_prime = static_cast<Vertex>(m);
    const Vertex s_prime = static_cast<Vertex>(2 * m + 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex mid = static_cast<Vertex>(m + 1 + i);
        edges.push_back({static_cast<Vertex>(i), mid});
        if (i + 1 == ps) {
            edges.push_back({mid, s_prime});
            edges.push_back({s_prime, static_cast<Vertex>(ps)});
        } else {
            edges.push_back({mid, static_cast<Vertex>(i + 1)});
        }
    }
    edges.push_back({v_prime, v});
    edges.push_back({v, static_cast<Vertex>(ps)});
    edges.push_back({v, static_cast<Vertex>(pt)});
    edges.push_back({v, v_prime});

    GadgetInstance out{Digraph(2 * m + 2, edges), {}, "ord-gadget", {}, {}};
    out.label.expected_period = pt < ps ? 1 : 2;
    std::string path;
    for (Vertex x : order) path += (path.empty() ? "" : ",") + std::to_string(x);
    out.provenance = "ord path=" + path + " s=" + std::to_string(s) + " t=" + std::to_string(t);
    out.special = {{"v", v},
                   {"v'", v_prime},
                   {"s", static_cast<Vertex>(ps)},
                   {"t", static_cast<Vertex>(pt)},
                   {"s'", s_prime}};
    return out;
}

// ---------------------------------------------------------------------------
// Seeded source instances for the reductions

struct StReachSample {
    Digraph graph;
    Vertex s;
    Vertex t;
};

inline StReachSample random_streach(std::size_t n, double p, std::uint64_t seed) {
    Digraph g = gen_random(n, p, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const Vertex s = static_cast<Vertex>(detail::below(rng, n));
    const Vertex t = static_cast<Vertex>(detail::below(rng, n));
    return StReachSample{std::move(g), s, t};
}

struct OrdSample {
    std::vector<Edge> successor;  // shuffled
    Vertex s;
    Vertex t;
};

// A path over `vertices` >= 3 randomly labelled vertices with s and t at
// random admissible positions.
inline OrdSample random_ord(std::size_t vertices, std::uint64_t seed) {
    if (vertices < 3) throw std::invalid_argument("random_ord: need at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(vertices);
    for (std::size_t i = 0; i < vertices; ++i) order[i] = static_cast<Vertex>(i);
    detail::shuffle(order, rng);
    std::vector<Edge> successor;
    for (std::size_t i = 0; i + 1 < vertices; ++i) successor.push_back({order[i], order[i + 1]});
    detail::shuffle(successor, rng);
    // s in [1, last), t in [0, last), t != s.
    const std::size_t last = vertices - 1;
    const std::size_t ps = 1 + detail::below(rng, last - 1);
    std::size_t pt = detail::below(rng, last - 1);
    if (pt >= ps) ++pt;
    return OrdSample{std::move(successor), order[ps], order[pt]};
}

}  // namespace gperiod
