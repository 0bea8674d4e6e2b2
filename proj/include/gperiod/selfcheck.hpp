#pragma once

// Property checks shared by the `selfcheck` command and the test suites.
//
// Each check_* function inspects one instance and returns a description of
// the first violation, or nullopt. run_selfcheck drives them over an
// exhaustive small-n sweep plus seeded random samples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gperiod/arith.hpp"
#include "gperiod/bool_matrix.hpp"
#include "gperiod/brute.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/gadgets.hpp"
#include "gperiod/index.hpp"
#include "gperiod/io.hpp"
#include "gperiod/oracle.hpp"
#include "gperiod/period.hpp"
#include "gperiod/scc.hpp"

namespace gperiod {

// The engines under test. Tests swap in deliberately broken versions to
// make sure the properties notice.
struct Solvers {
    std::function<bool(const Digraph&, std::uint64_t, Vertex)> divides_period =
        [](const Digraph& g, std::uint64_t k, Vertex v) { return gperiod::divides_period(g, k, v); };
    std::function<std::uint64_t(const Digraph&)> period_scc = [](const Digraph& g) {
        return gperiod::period_scc(g);
    };
    std::function<PeriodResult(const Digraph&)> period_general = [](const Digraph& g) {
        return gperiod::period_general(g);
    };
    std::function<PowerSignature(const Digraph&)> index_of_convergence = [](const Digraph& g) {
        return gperiod::index_of_convergence(g);
    };
};

using Failure = std::optional<std::string>;

namespace detail {

inline std::string fmt_sig(const PowerSignature& s) {
    return "(index " + std::to_string(s.index) + ", period " + s.period.str() + ")";
}

}  // namespace detail

// period_general and index_of_convergence agree with explicit powers.
inline Failure check_against_oracle(const Digraph& g, const Solvers& solvers = {}) {
    const PowerSignature expected = oracle_signature(g);
    const PeriodResult period = solvers.period_general(g);
    if (period.value != expected.period) {
        return "period_general " + period.value.str() + " != oracle " + expected.period.str();
    }
    if (multiply_out(period.factors) != period.value) return "period factorization does not multiply out";
    const PowerSignature got = solvers.index_of_convergence(g);
    if (!(got == expected)) return "index_of_convergence " + detail::fmt_sig(got) + " != oracle " + detail::fmt_sig(expected);
    return std::nullopt;
}

// index <= n^2; strongly connected graphs have period <= n equal to the
// cycle gcd at every vertex.
inline Failure check_bounds(const Digraph& g) {
    const std::uint64_t n = g.size();
    const PowerSignature sig = oracle_signature(g);
    if (sig.index > n * n) return "index " + std::to_string(sig.index) + " exceeds n^2";
    if (!is_strongly_connected(g)) return std::nullopt;
    if (sig.period > n) return "strongly connected period " + sig.period.str() + " exceeds n";
    for (Vertex v = 0; v < n; ++v) {
        const auto cg = oracle_cycle_gcd(g, v);
        const BigInt expected = cg ? BigInt(*cg) : BigInt(1);
        if (cg && expected != sig.period) {
            return "cycle gcd at vertex " + std::to_string(v) + " is " + std::to_string(*cg) +
                   " but the period is " + sig.period.str();
        }
    }
    return std::nullopt;
}

// For strongly connected g: divides_period(g, k, v) iff k | period, at every
// k in [1, n] and every v.
inline Failure check_divisibility_law(const Digraph& g, const Solvers& solvers = {}) {
    if (!is_strongly_connected(g) || !scc_decompose(g).has_cycle[0]) return std::nullopt;
    const std::uint64_t p = solvers.period_scc(g);
    const auto gcd = oracle_cycle_gcd(g, 0);
    if (!gcd || *gcd != p) return "period_scc " + std::to_string(p) + " disagrees with the cycle gcd";
    for (std::uint64_t k = 1; k <= g.size(); ++k) {
        for (Vertex v = 0; v < g.size(); ++v) {
            const bool got = solvers.divides_period(g, k, v);
            if (got != (p % k == 0)) {
                return "divides_period(k=" + std::to_string(k) + ", v=" + std::to_string(v) + ") = " +
                       (got ? "true" : "false") + " but the period is " + std::to_string(p);
            }
        }
    }
    return std::nullopt;
}

// Returned partitions verify; absent ones are confirmed absent by exhaustive
// labeling search (n <= 6); the period always admits one.
inline Failure check_partitions(const Digraph& g) {
    if (!is_strongly_connected(g) || !scc_decompose(g).has_cycle[0]) return std::nullopt;
    const std::uint64_t p = period_scc(g);
    for (std::uint64_t k = 1; k <= g.size(); ++k) {
        const auto part = consistent_partition(g, k);
        if (part) {
            if (!verify_partition(g, *part)) return "partition for k=" + std::to_string(k) + " does not verify";
            if (part->class_of[0] != 0) return "partition for k=" + std::to_string(k) + " is not anchored at vertex 0";
            if (p % k != 0) return "partition returned for k=" + std::to_string(k) + " not dividing the period";
        } else {
            if (k == p) return "no partition for k equal to the period";
            if (g.size() <= 6 && brute::find_consistent_labeling(g, k)) {
                return "exhaustive search found a " + std::to_string(k) + "-consistent labeling that was missed";
            }
        }
    }
    return std::nullopt;
}

// The product-space test, summed over components, matches "paths of length
// K + iP for every i in [n^2, 2n^2]" computed from explicit powers.
inline Failure check_residue_law(const Digraph& g) {
    const std::uint64_t n = g.size();
    const SccDecomposition scc = scc_decompose(g);
    const auto periods = component_periods(g, scc);
    const PeriodResult global = period_general(g, scc);
    const std::uint64_t P = global.value.convert_to<std::uint64_t>();
    const std::uint64_t lo = n * n, hi = 2 * n * n;

    const BoolMatrix a = adjacency(g);
    const std::uint64_t max_len = n * n + hi * P;
    std::vector<BoolMatrix> powers{BoolMatrix::identity(n)};
    for (std::uint64_t L = 1; L <= max_len; ++L) powers.push_back(bmm(powers.back(), a));

    for (std::uint64_t K = 0; K <= n * n; ++K) {
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                bool brute_all = true;
                for (std::uint64_t i = lo; i <= hi && brute_all; ++i) brute_all = powers[K + i * P].get(s, t);
                bool product = false;
                for (std::size_t c = 0; c < scc.count() && !product; ++c) {
                    if (!periods[c]) continue;
                    product = residue_path_exists(g, scc, ResidueQuery{s, t, K, c, *periods[c], global.value});
                }
                if (brute_all != product) {
                    return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " K=" + std::to_string(K) +
                           ": product-space says " + (product ? "true" : "false") + ", explicit powers say " +
                           (brute_all ? "true" : "false");
                }
            }
        }
    }
    return std::nullopt;
}

// Every positive residue query yields a genuine witness of length <= 2*n*p.
inline Failure check_witnesses(const Digraph& g) {
    const std::uint64_t n = g.size();
    const SccDecomposition scc = scc_decompose(g);
    const auto periods = component_periods(g, scc);
    const PeriodResult global = period_general(g, scc);
    for (std::size_t c = 0; c < scc.count(); ++c) {
        if (!periods[c]) continue;
        const std::uint64_t p = *periods[c];
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                for (std::uint64_t K = 0; K < p; ++K) {
                    const ResidueQuery q{s, t, K, c, p, global.value};
                    const bool exists = residue_path_exists(g, scc, q);
                    const auto w = residue_witness(g, scc, q);
                    const std::string where = "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                                              " K=" + std::to_string(K) + " C=" + std::to_string(c);
                    if (exists != w.has_value()) return where + ": witness disagrees with existence";
                    if (!w) continue;
                    const std::uint64_t len = w->size() - 1;
                    if (w->front() != s || w->back() != t) return where + ": witness has wrong endpoints";
                    if (len % p != K % p) return where + ": witness length has the wrong residue";
                    if (len > 2 * n * p) return where + ": witness longer than 2np";
                    bool touches = false;
                    for (std::size_t i = 0; i < w->size(); ++i) {
                        touches = touches || scc.component_id[(*w)[i]] == c;
                        if (i + 1 < w->size() && !g.has_edge((*w)[i], (*w)[i + 1])) {
                            return where + ": witness uses a missing edge";
                        }
                    }
                    if (!touches) return where + ": witness misses the component";
                }
            }
        }
    }
    return std::nullopt;
}

// The five normal-form conditions plus preserved reachability.
inline Failure check_normal_form(const StReachSample& base, const StReachInstance& inst) {
    const Digraph& h = inst.graph;
    if (!is_acyclic(h)) return "normalized graph has a cycle";
    if (h.in_degree(inst.s) != 0) return "s has incoming edges";
    if (h.out_degree(inst.t) != 0) return "t has outgoing edges";
    for (Vertex u = 0; u < h.size(); ++u) {
        if (u != inst.s && u != inst.s_prime && h.in_degree(u) == 0) return "extra source " + std::to_string(u);
        if (u != inst.t && u != inst.t_prime && h.out_degree(u) == 0) return "extra sink " + std::to_string(u);
    }
    if (inst.s_prime == inst.s || h.in_degree(inst.s_prime) != 0) return "s' is not a second source";
    if (inst.t_prime == inst.t || h.out_degree(inst.t_prime) != 0) return "t' is not a second sink";
    if (reaches(h, inst.s, inst.t) != reaches(base.graph, base.s, base.t)) return "reachability not preserved";
    return std::nullopt;
}

inline Failure check_period_gadget(const StReachSample& base, const Solvers& solvers = {}) {
    const StReachInstance inst = normalize_streach(base.graph, base.s, base.t);
    if (auto f = check_normal_form(base, inst)) return f;
    const GadgetInstance gadget = gen_period_gadget(inst);
    const std::uint64_t expected = reaches(base.graph, base.s, base.t) ? 1 : 2;
    if (gadget.label.expected_period != expected) return "gadget label disagrees with BFS";
    const PeriodResult got = solvers.period_general(gadget.graph);
    if (got.value != expected) return "period " + got.value.str() + " but expected " + std::to_string(expected);
    if (!is_almost_strongly_connected(gadget.graph)) return "gadget is not almost strongly connected";
    return std::nullopt;
}

inline Failure check_ord_gadget(const OrdSample& base, const Solvers& solvers = {}) {
    const GadgetInstance gadget = gen_ord_gadget(base.successor, base.s, base.t);
    // Independent order check: walk the successor list from s and see whether t follows.
    bool t_after_s = false;
    for (Vertex x = base.s;;) {
        auto it = std::find_if(base.successor.begin(), base.successor.end(), [x](const Edge& e) { return e.from == x; });
        if (it == base.successor.end()) break;
        x = it->to;
        if (x == base.t) t_after_s = true;
    }
    const std::uint64_t expected = t_after_s ? 2 : 1;
    if (gadget.label.expected_period != expected) return "gadget label disagrees with the path order";
    if (!is_strongly_connected(gadget.graph)) return "gadget is not strongly connected";
    const std::uint64_t got = solvers.period_scc(gadget.graph);
    if (got != expected) return "period " + std::to_string(got) + " but expected " + std::to_string(expected);
    const auto cycles = brute::simple_cycles(gadget.graph, 16);
    if (cycles.size() != 4) return "gadget has " + std::to_string(cycles.size()) + " simple cycles, not 4";
    const Vertex v = gadget.special.at("v");
    for (const auto& cyc : cycles) {
        if (std::find(cyc.begin(), cyc.end(), v) == cyc.end()) return "a cycle avoids v";
    }
    return std::nullopt;
}

inline Failure check_exponent_gadget(const StReachSample& base, const Solvers& solvers = {}) {
    const StReachInstance inst = normalize_streach(base.graph, base.s, base.t);
    if (auto f = check_normal_form(base, inst)) return f;
    const GadgetInstance gadget = gen_exponent_gadget(inst);
    const std::uint64_t half = gadget.graph.size() / 2;
    const bool reachable = reaches(base.graph, base.s, base.t);
    if (gadget.label.half != half ||
        gadget.label.exponent_side !=
            (reachable ? ExponentSide::at_most_half : ExponentSide::at_least_half_plus_one)) {
        return "gadget label disagrees with BFS";
    }
    if (!is_primitive(gadget.graph)) return "gadget is not primitive";
    const PowerSignature sig = solvers.index_of_convergence(gadget.graph);
    if (sig.period != 1) return "gadget period " + sig.period.str();
    if (reachable && sig.index > half) return "exponent " + std::to_string(sig.index) + " > |V'|/2 = " + std::to_string(half);
    if (!reachable && sig.index < half + 1) {
        return "exponent " + std::to_string(sig.index) + " < |V'|/2 + 1 = " + std::to_string(half + 1);
    }
    return std::nullopt;
}

inline Failure check_chi_homomorphism(const IntMatrix& a, const IntMatrix& b) {
    if (!(chi(int_multiply(a, b)) == bmm(chi(a), chi(b)))) return "chi(AB) != chi(A) chi(B)";
    return std::nullopt;
}

inline IntMatrix random_int_matrix(std::size_t n, std::int64_t max_entry, std::mt19937_64& rng) {
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (auto& row : m) {
        for (auto& x : row) {
            // Zero half the time so patterns are not all-ones.
            x = (rng() & 1U) ? 0 : static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_entry + 1));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------

struct SelfcheckOptions {
    std::size_t max_n = 4;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

struct PropertyOutcome {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::optional<std::string> counterexample;  // first failure, with the graph serialized

    bool passed() const noexcept { return failed == 0; }
};

class PropertyLog {
public:
    void record(const std::string& name, const Failure& f, const std::string& instance) {
        auto& o = slot(name);
        ++o.checked;
        if (f) {
            ++o.failed;
            if (!o.counterexample) o.counterexample = *f + "\n" + instance;
        }
    }

    std::vector<PropertyOutcome> outcomes() const {
        std::vector<PropertyOutcome> out;
        for (const auto& name : order_) out.push_back(by_name_.at(name));
        return out;
    }

private:
    PropertyOutcome& slot(const std::string& name) {
        auto [it, inserted] = by_name_.try_emplace(name);
        if (inserted) {
            it->second.name = name;
            order_.push_back(name);
        }
        return it->second;
    }

    std::map<std::string, PropertyOutcome> by_name_;
    std::vector<std::string> order_;
};

// Exhaustive sweep over every digraph with n <= min(max_n, 5), then
// `samples` seeded instances per sampled property with n <= max_n.
inline std::vector<PropertyOutcome> run_selfcheck(const SelfcheckOptions& opt, const Solvers& solvers = {}) {
    PropertyLog log;
    auto guarded = [](auto&& fn) -> Failure {
        try {
            return fn();
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    };
    auto graph_checks = [&](const Digraph& g, bool exhaustive) {
        const std::string text = to_edgelist(g);
        log.record("oracle-equivalence", guarded([&] { return check_against_oracle(g, solvers); }), text);
        log.record("bounds", guarded([&] { return check_bounds(g); }), text);
        if (is_strongly_connected(g)) {
            log.record("divisibility-law", guarded([&] { return check_divisibility_law(g, solvers); }), text);
            log.record("partition-soundness", guarded([&] { return check_partitions(g); }), text);
        }
        if (g.size() <= (exhaustive ? 3u : 5u)) {
            log.record("residue-vs-powers", guarded([&] { return check_residue_law(g); }), text);
        }
        log.record("witness-bound", guarded([&] { return check_witnesses(g); }), text);
    };

    const std::size_t exhaustive_n = std::min<std::size_t>(opt.max_n, 5);
    for (std::size_t n = 1; n <= exhaustive_n; ++n) {
        brute::for_each_digraph(n, [&](const Digraph& g) { graph_checks(g, true); });
    }

    std::mt19937_64 rng(opt.seed);
    const std::size_t max_n = std::max<std::size_t>(opt.max_n, 1);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        const std::size_t n = 1 + rng() % max_n;
        const double p = detail::unit_interval(rng) * 0.6;
        graph_checks(gen_random(n, p, rng()), false);
        graph_checks(gen_random_strongly_connected(n, rng()), false);

        const std::size_t m = 1 + rng() % 6;
        const IntMatrix a = random_int_matrix(m, 3, rng);
        const IntMatrix b = random_int_matrix(m, 3, rng);
        log.record("chi-homomorphism", check_chi_homomorphism(a, b), "A and B of size " + std::to_string(m));

        const StReachSample st = random_streach(1 + rng() % std::max<std::size_t>(max_n, 2), 0.1 + 0.3 * detail::unit_interval(rng), rng());
        const std::string st_text = to_edgelist(st.graph, {{"s", std::to_string(st.s)}, {"t", std::to_string(st.t)}});
        log.record("period-gadget", guarded([&] { return check_period_gadget(st, solvers); }), st_text);
        log.record("exponent-gadget", guarded([&] { return check_exponent_gadget(st, solvers); }), st_text);

        const OrdSample ord = random_ord(3 + rng() % (max_n + 1), rng());
        std::ostringstream ord_text;
        for (const Edge& e : ord.successor) ord_text << e.from << ' ' << e.to << '\n';
        ord_text << "s=" << ord.s << " t=" << ord.t << '\n';
        log.record("ord-gadget", guarded([&] { return check_ord_gadget(ord, solvers); }), ord_text.str());
    }
    return log.outcomes();
}

}  // namespace gperiod
