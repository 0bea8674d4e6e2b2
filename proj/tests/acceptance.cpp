// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "gperiod/brute.hpp"
#include "gperiod/gperiod.hpp"

using namespace gperiod;

namespace {

struct Verdict {
    bool passed = true;
    std::size_t checked = 0;
    std::string detail;  // first failure

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

// Instances seen by criteria 1-3, reused by the bound checks.
struct BoundsLog {
    std::size_t instances = 0;
    std::vector<std::string> violations;

    void record(const Digraph& g, const PowerSignature& sig, bool strongly_connected_cyclic) {
        ++instances;
        const std::uint64_t n = g.size();
        if (sig.index > n * n) violations.push_back("index " + std::to_string(sig.index) + " > n^2\n" + to_edgelist(g));
        if (strongly_connected_cyclic && sig.period > n) {
            violations.push_back("period " + sig.period.str() + " > n\n" + to_edgelist(g));
        }
    }
};

BoundsLog bounds;

bool scc_cyclic(const Digraph& g) {
    const SccDecomposition scc = scc_decompose(g);
    return scc.count() == 1 && scc.has_cycle[0];
}

bool bfs_reaches(const Digraph& g, Vertex s, Vertex t) {
    std::vector<bool> seen(g.size(), false);
    std::vector<Vertex> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.successors(queue[head])) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen[t];
}

void compare_with_oracle(const Digraph& g, Verdict& v) {
    ++v.checked;
    const PowerSignature expected = oracle_signature(g);
    const PeriodResult period = period_general(g);
    const PowerSignature got = index_of_convergence(g);
    bounds.record(g, expected, scc_cyclic(g));
    if (period.value != expected.period || !(got == expected)) {
        std::ostringstream why;
        why << "oracle (index " << expected.index << ", period " << expected.period << "), period_general "
            << period.value << ", index_of_convergence (" << got.index << ", " << got.period << ")\n"
            << to_edgelist(g);
        v.fail(why.str());
    }
}

double edge_probability(std::uint64_t seed) { return 0.05 + 0.05 * static_cast<double>(seed % 7); }

Verdict ac1() {
    Verdict v;
    for (std::size_t n = 1; n <= 4; ++n) brute::for_each_digraph(n, [&](const Digraph& g) { compare_with_oracle(g, v); });
    return v;
}

Verdict ac2() {
    Verdict v;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) compare_with_oracle(gen_random(1 + seed % 8, edge_probability(seed), seed), v);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        compare_with_oracle(gen_random(1 + seed % 10, edge_probability(seed), 1'000'000 + seed), v);
    }
    return v;
}

// Strongly connected samples with n in [2, 10] (so a cycle always exists).
Digraph ac3_instance(std::uint64_t seed) { return gen_random_strongly_connected(2 + seed % 9, 2'000'000 + seed); }

Verdict ac3() {
    Verdict v;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Digraph g = ac3_instance(seed);
        ++v.checked;
        const std::uint64_t p = period_scc(g);
        const auto gcd = oracle_cycle_gcd(g, 0);
        const PowerSignature sig = oracle_signature(g);
        bounds.record(g, sig, true);
        if (!gcd || *gcd != p || sig.period != p) {
            v.fail("period_scc " + std::to_string(p) + " disagrees with the oracle\n" + to_edgelist(g));
            continue;
        }
        for (std::uint64_t k = 1; k <= g.size(); ++k) {
            const bool at_zero = divides_period(g, k, 0);
            for (Vertex u = 0; u < g.size(); ++u) {
                const bool got = divides_period(g, k, u);
                if (got != (p % k == 0) || got != at_zero) {
                    v.fail("divides_period(k=" + std::to_string(k) + ", v=" + std::to_string(u) + ") wrong, period " +
                           std::to_string(p) + "\n" + to_edgelist(g));
                }
            }
        }
    }
    return v;
}

Verdict ac4() {
    Verdict v;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Digraph g = ac3_instance(seed);
        ++v.checked;
        const std::uint64_t p = *oracle_cycle_gcd(g, 0);
        if (period_scc(g) != p) v.fail("period_scc disagrees with the cycle gcd\n" + to_edgelist(g));
        const auto part = consistent_partition(g, p);
        if (!part) {
            v.fail("no partition at the period\n" + to_edgelist(g));
        } else if (!verify_partition(g, *part)) {
            v.fail("partition at the period does not verify\n" + to_edgelist(g));
        }
    }
    // Period 2 without a 2-consistent partition: 0 -> 1, 0 -> 2, 1 <-> 2.
    const Digraph g(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}});
    ++v.checked;
    if (oracle_signature(g).period != 2 || period_general(g).value != 2) v.fail("counterexample period is not 2");
    for (unsigned mask = 0; mask < 8; ++mask) {
        const std::vector<std::uint64_t> label{mask & 1U, (mask >> 1) & 1U, (mask >> 2) & 1U};
        bool consistent = true;
        for (const Edge& e : g.edges()) consistent = consistent && label[e.to] == (label[e.from] + 1) % 2;
        if (consistent) v.fail("counterexample has a 2-consistent labeling");
    }
    return v;
}

Verdict ac5() {
    Verdict v;
    v.checked = bounds.instances;
    if (bounds.instances == 0) v.fail("no instances recorded");
    if (!bounds.violations.empty()) v.fail(bounds.violations.front());
    return v;
}

StReachSample ac6_base(std::uint64_t seed) {
    return random_streach(1 + seed % 12, 0.04 + 0.04 * static_cast<double>(seed % 6), 3'000'000 + seed);
}

Verdict ac6() {
    Verdict v;
    std::size_t reachable = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const StReachSample base = ac6_base(seed);
        ++v.checked;
        const bool path = bfs_reaches(base.graph, base.s, base.t);
        reachable += path ? 1 : 0;
        const GadgetInstance gadget = gen_period_gadget(normalize_streach(base.graph, base.s, base.t));
        const PeriodResult p = period_general(gadget.graph);
        if (p.value != (path ? 1 : 2)) {
            v.fail("gadget period " + p.value.str() + " with reachability " + (path ? "true" : "false") + "\n" +
                   to_edgelist(base.graph) + "s=" + std::to_string(base.s) + " t=" + std::to_string(base.t));
        }
        if (!is_almost_strongly_connected(gadget.graph)) v.fail("gadget not almost strongly connected");
    }
    if (reachable == 0 || reachable == 500) v.fail("samples do not cover both answers");
    return v;
}

Verdict ac7() {
    Verdict v;
    std::size_t before = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const OrdSample base = random_ord(3 + seed % 14, 4'000'000 + seed);
        ++v.checked;
        // Position along the path, found by walking the successor pairs.
        std::vector<Vertex> order;
        {
            std::vector<int> indeg(base.successor.size() + 1, 0);
            for (const Edge& e : base.successor) ++indeg[e.to];
            Vertex x = 0;
            while (indeg[x] != 0) ++x;
            order.push_back(x);
            for (bool moved = true; moved;) {
                moved = false;
                for (const Edge& e : base.successor) {
                    if (e.from == order.back()) {
                        order.push_back(e.to);
                        moved = true;
                        break;
                    }
                }
            }
        }
        const auto pos = [&](Vertex x) { return std::find(order.begin(), order.end(), x) - order.begin(); };
        const bool t_first = pos(base.t) < pos(base.s);
        before += t_first ? 1 : 0;

        const GadgetInstance gadget = gen_ord_gadget(base.successor, base.s, base.t);
        if (!is_strongly_connected(gadget.graph)) {
            v.fail("gadget not strongly connected");
            continue;
        }
        const std::uint64_t p = period_scc(gadget.graph);
        if ((p == 1) != t_first || p > 2) v.fail("gadget period " + std::to_string(p) + " for seed " + std::to_string(seed));
        const auto cycles = brute::simple_cycles(gadget.graph, 64);
        if (cycles.size() != 4) v.fail(std::to_string(cycles.size()) + " simple cycles for seed " + std::to_string(seed));
        const Vertex hub = gadget.special.at("v");
        for (const auto& c : cycles) {
            if (std::find(c.begin(), c.end(), hub) == c.end()) v.fail("a cycle avoids v");
        }
    }
    if (before == 0 || before == 500) v.fail("samples do not cover both orders");
    return v;
}

Verdict ac8() {
    Verdict v;
    std::size_t reachable = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const StReachSample base = ac6_base(5'000'000 + seed);
        ++v.checked;
        const bool path = bfs_reaches(base.graph, base.s, base.t);
        reachable += path ? 1 : 0;
        const GadgetInstance gadget = gen_exponent_gadget(normalize_streach(base.graph, base.s, base.t));
        if (!is_primitive(gadget.graph)) {
            v.fail("gadget not primitive");
            continue;
        }
        const std::uint64_t e = exponent(gadget.graph);
        const std::uint64_t half = gadget.graph.size() / 2;
        if (path ? e > half : e < half + 1) {
            v.fail("exponent " + std::to_string(e) + " with |V'|/2 = " + std::to_string(half) + " and reachability " +
                   (path ? "true" : "false"));
        }
    }
    if (reachable == 0 || reachable == 500) v.fail("samples do not cover both answers");
    return v;
}

Verdict ac9() {
    Verdict v;
    auto expect = [&](bool ok, const std::string& what) {
        ++v.checked;
        if (!ok) v.fail(what);
    };
    const GadgetInstance left = gen_ord_gadget(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}, 1, 2);
    const GadgetInstance right = gen_ord_gadget(std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}}, 1, 2);
    expect(period_scc(left.graph) == 2, "ORD gadget v,s,t,v' period is not 2");
    expect(period_scc(right.graph) == 1, "ORD gadget v,t,s,v' period is not 1");

    // s=0, p2=1, t'=2, s'=3, r2=4, t=5, z1=6.
    const Digraph st(7, {{0, 1}, {1, 2}, {3, 1}, {3, 4}, {4, 5}, {4, 2}, {1, 6}, {6, 5}});
    expect(period_general(gen_period_gadget(st, 0, 5, 2).graph).value == 1, "period gadget instance is not period 1");

    // s=0, t'=1, t=2, s'=3.
    const GadgetInstance exp = gen_exponent_gadget(Digraph(4, {{0, 1}, {3, 1}, {3, 2}}), 0, 2, 1);
    expect(exp.graph.size() == 8, "exponent gadget does not have 8 vertices");
    expect(exponent(exp.graph) >= 5, "exponent gadget exponent below 5");
    return v;
}

IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (auto& row : m) {
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % 4);
    }
    return m;
}

Verdict ac10() {
    Verdict v;
    std::mt19937_64 rng(6'000'000);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const IntMatrix a = random_matrix(n, rng);
        const IntMatrix b = random_matrix(n, rng);
        ++v.checked;
        if (!(chi(int_multiply(a, b)) == bmm(chi(a), chi(b)))) v.fail("chi(AB) != chi(A) chi(B) at pair " + std::to_string(i));
    }
    return v;
}

Verdict ac11() {
    Verdict v;
    std::mt19937_64 rng(7'000'000);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<std::int64_t> values(rng() % 21);
        for (auto& x : values) x = 1 + static_cast<std::int64_t>(rng() % 1000);
        BigInt fold = 1;
        for (std::int64_t x : values) fold = fold / boost::integer::gcd(fold, BigInt(x)) * x;
        const PeriodResult r = lcm_list(values);
        ++v.checked;
        if (r.value != fold || multiply_out(r.factors) != fold) v.fail("lcm mismatch at trial " + std::to_string(trial));
    }
    const std::vector<std::size_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::vector<Edge> edges;
    Vertex base = 0;
    for (std::size_t p : primes) {
        for (std::size_t i = 0; i < p; ++i) edges.push_back({static_cast<Vertex>(base + i), static_cast<Vertex>(base + (i + 1) % p)});
        base += static_cast<Vertex>(p);
    }
    const PeriodResult big = period_general(Digraph(base, edges));
    ++v.checked;
    if (big.value <= BigInt(std::numeric_limits<std::uint64_t>::max())) v.fail("period does not exceed 2^64");
    if (big.value.str() != "32589158477190044730") v.fail("decimal form " + big.value.str());
    if (format_factored(big) !=
        "32589158477190044730 = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41 * 43 * 47 * 53") {
        v.fail("factored form " + format_factored(big));
    }
    return v;
}

void check_witnesses(const Digraph& g, Verdict& v) {
    const std::uint64_t n = g.size();
    const SccDecomposition scc = scc_decompose(g);
    const auto periods = component_periods(g, scc);
    const PeriodResult global = period_general(g, scc);
    for (std::size_t c = 0; c < scc.count(); ++c) {
        if (!periods[c]) continue;
        const std::uint64_t p = *periods[c];
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                for (std::uint64_t K = 0; K < std::min<std::uint64_t>(p, n * n + 1); ++K) {
                    const ResidueQuery q{s, t, K, c, p, global.value};
                    if (!residue_path_exists(g, scc, q)) continue;
                    ++v.checked;
                    const auto w = residue_witness(g, scc, q);
                    if (!w) {
                        v.fail("no witness for a true query\n" + to_edgelist(g));
                        continue;
                    }
                    const std::uint64_t len = w->size() - 1;
                    bool ok = w->front() == s && w->back() == t && len % p == K % p && len <= 2 * n * p;
                    bool touches = false;
                    for (std::size_t i = 0; i < w->size(); ++i) {
                        touches = touches || scc.component_id[(*w)[i]] == c;
                        if (i + 1 < w->size()) ok = ok && g.has_edge((*w)[i], (*w)[i + 1]);
                    }
                    if (!ok || !touches) v.fail("bad witness of length " + std::to_string(len) + "\n" + to_edgelist(g));
                }
            }
        }
    }
}

Verdict ac12() {
    Verdict v;
    for (std::size_t n = 1; n <= 3; ++n) brute::for_each_digraph(n, [&](const Digraph& g) { check_witnesses(g, v); });
    for (std::uint64_t seed = 0; seed < 500; ++seed) check_witnesses(gen_random(1 + seed % 10, edge_probability(seed), 8'000'000 + seed), v);
    for (std::uint64_t seed = 0; seed < 200; ++seed) check_witnesses(gen_random_strongly_connected(2 + seed % 9, 9'000'000 + seed), v);
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1  oracle equivalence, exhaustive n<=4", ac1},
        {"AC2  oracle equivalence, 2000 samples n<=8 and 500 n<=10", ac2},
        {"AC3  divisibility law on 500 strongly connected samples", ac3},
        {"AC4  partition at the period; period-2 graph without a 2-partition", ac4},
        {"AC5  index <= n^2 and strongly connected period <= n", ac5},
        {"AC6  period gadget soundness, 500 bases", ac6},
        {"AC7  ORD gadget soundness, 500 paths", ac7},
        {"AC8  exponent gadget soundness, 500 bases", ac8},
        {"AC9  fixed reference instances", ac9},
        {"AC10 chi homomorphism, 1000 pairs", ac10},
        {"AC11 lcm engine vs gcd fold; 16-prime period beyond 2^64", ac11},
        {"AC12 residue witnesses within 2np", ac12},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Verdict v = run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s  (checked=%zu, %.1fs)\n", v.passed ? "PASS" : "FAIL", name.c_str(), v.checked, secs);
        if (!v.passed) std::printf("  first failure: %s\n", v.detail.c_str());
        std::fflush(stdout);
        all = all && v.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return all ? 0 : 1;
}
