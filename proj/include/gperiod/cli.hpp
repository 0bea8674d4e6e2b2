#pragma once

// Command implementations behind the gperiod executable. Each returns the
// process exit code: 0 success, 1 self-check failure, 2 input error,
// 3 guarded refusal.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gperiod/gadgets.hpp"
#include "gperiod/io.hpp"
#include "gperiod/report.hpp"
#include "gperiod/selfcheck.hpp"

namespace gperiod::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2, refused = 3 };

// The oracle keeps dense n x n matrices over ~n^2 exponents.
inline constexpr std::size_t oracle_vertex_limit = 64;

struct AnalyzeOptions {
    std::string path = "-";
    std::string format = "edgelist";
    std::string algorithm = "lifted";
    bool json = false;
    bool force = false;
};

inline bool read_input(const std::string& path, std::string& text, std::ostream& err) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read " << path << '\n';
        return false;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

inline int run_analyze_text(const AnalyzeOptions& opt, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opt.format != "edgelist" && opt.format != "dot") {
        err << "error: unknown format '" << opt.format << "'\n";
        return input_error;
    }
    if (opt.algorithm != "lifted" && opt.algorithm != "oracle") {
        err << "error: unknown algorithm '" << opt.algorithm << "'\n";
        return input_error;
    }
    std::optional<Digraph> g;
    std::vector<std::string> names;
    try {
        if (opt.format == "dot") {
            DotGraph dot = parse_dot(text);
            g = std::move(dot.graph);
            names = std::move(dot.names);
        } else {
            g = parse_edgelist(text);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return input_error;
    }
    const Algorithm algorithm = opt.algorithm == "oracle" ? Algorithm::oracle : Algorithm::lifted;
    if (algorithm == Algorithm::oracle && g->size() > oracle_vertex_limit && !opt.force) {
        err << "refusing to run the oracle on n=" << g->size() << " > " << oracle_vertex_limit
            << " vertices; pass --force to override\n";
        return refused;
    }
    const AnalysisReport report = analyze(*g, algorithm, opt.path, opt.format, std::move(names));
    if (opt.json) {
        out << to_json(report).dump() << '\n';
    } else {
        out << to_text(report);
    }
    return ok;
}

inline int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    std::string text;
    if (!read_input(opt.path, text, err)) return input_error;
    return run_analyze_text(opt, text, out, err);
}

struct GenerateOptions {
    std::string family;
    std::size_t n = 0;
    double p = 0.25;
    std::uint64_t seed = 1;
    std::string order;           // ord-gadget: comma-separated path, first to last
    std::string s = "s";         // ord-gadget: names; st gadgets with --input: vertex ids
    std::string t = "t";
    std::string input;           // st gadgets: base edge-list file
    std::string out;             // file, or directory when count > 1; empty = stdout
    std::size_t count = 1;
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

inline Vertex parse_vertex(const std::string& s, const Digraph& g, const char* what) {
    const auto v = gperiod::detail::parse_uint(s);
    if (!v || *v >= g.size()) throw std::invalid_argument(std::string("--") + what + " must be a vertex id of the input");
    return static_cast<Vertex>(*v);
}

// One generated file for the given seed.
inline std::string generate_one(const GenerateOptions& opt, std::uint64_t seed) {
    using Header = std::vector<std::pair<std::string, std::string>>;
    const std::string& family = opt.family;
    auto need_n = [&](std::size_t minimum) {
        if (opt.n < minimum) throw std::invalid_argument("--n must be at least " + std::to_string(minimum));
    };
    if (family == "cycle") {
        need_n(1);
        return to_edgelist(gen_cycle(opt.n), Header{{"family", "cycle"}, {"provenance", "cycle n=" + std::to_string(opt.n)}});
    }
    if (family == "wielandt") {
        need_n(3);
        return to_edgelist(gen_wielandt(opt.n),
                           Header{{"family", "wielandt"}, {"provenance", "wielandt n=" + std::to_string(opt.n)}});
    }
    if (family == "random") {
        need_n(1);
        std::ostringstream prov;
        prov << "random n=" << opt.n << " p=" << opt.p;
        return to_edgelist(gen_random(opt.n, opt.p, seed),
                           Header{{"family", "random"}, {"provenance", prov.str()}, {"seed", std::to_string(seed)}});
    }
    if (family == "period-gadget" || family == "exponent-gadget") {
        StReachSample base{Digraph(1), 0, 0};
        Header extra;
        if (!opt.input.empty()) {
            std::string text;
            std::ostringstream sink;
            if (!read_input(opt.input, text, sink)) throw std::invalid_argument("cannot read " + opt.input);
            Digraph g = parse_edgelist(text);
            const Vertex s = parse_vertex(opt.s, g, "s");
            const Vertex t = parse_vertex(opt.t, g, "t");
            base = StReachSample{std::move(g), s, t};
            extra.emplace_back("source", opt.input);
        } else {
            need_n(1);
            base = random_streach(opt.n, opt.p, seed);
            extra.emplace_back("seed", std::to_string(seed));
        }
        const StReachInstance inst = normalize_streach(base.graph, base.s, base.t);
        const GadgetInstance gadget = family == "period-gadget" ? gen_period_gadget(inst) : gen_exponent_gadget(inst);
        Header header = gadget.header();
        header.insert(header.end(), extra.begin(), extra.end());
        return to_edgelist(gadget.graph, header);
    }
    if (family == "ord-gadget") {
        std::vector<Edge> successor;
        Vertex s = 0, t = 0;
        std::string prov;
        Header extra;
        if (!opt.order.empty()) {
            const auto names = split_commas(opt.order);
            std::map<std::string, Vertex> id;
            for (const auto& name : names) {
                if (name.empty() || !id.emplace(name, static_cast<Vertex>(id.size())).second) {
                    throw std::invalid_argument("--order must list distinct, non-empty names");
                }
            }
            if (names.size() < 2) throw std::invalid_argument("--order needs at least two vertices");
            for (std::size_t i = 0; i + 1 < names.size(); ++i) successor.push_back({id[names[i]], id[names[i + 1]]});
            if (!id.contains(opt.s) || !id.contains(opt.t)) throw std::invalid_argument("--s and --t must name path vertices");
            s = id[opt.s];
            t = id[opt.t];
            prov = "ord order=" + opt.order + " s=" + opt.s + " t=" + opt.t;
        } else {
            need_n(3);
            OrdSample sample = random_ord(opt.n, seed);
            successor = std::move(sample.successor);
            s = sample.s;
            t = sample.t;
            extra.emplace_back("seed", std::to_string(seed));
        }
        GadgetInstance gadget = gen_ord_gadget(successor, s, t);
        if (!prov.empty()) gadget.provenance = prov;
        Header header = gadget.header();
        header.insert(header.end(), extra.begin(), extra.end());
        return to_edgelist(gadget.graph, header);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace detail

inline int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.count == 0) throw std::invalid_argument("--count must be positive");
        if (opt.count == 1) {
            const std::string text = detail::generate_one(opt, opt.seed);
            if (opt.out.empty()) {
                out << text;
            } else {
                std::ofstream f(opt.out, std::ios::binary);
                if (!(f << text)) throw std::invalid_argument("cannot write " + opt.out);
            }
            return ok;
        }
        if (opt.out.empty()) throw std::invalid_argument("--out DIR is required with --count > 1");
        std::filesystem::create_directories(opt.out);
        for (std::size_t i = 0; i < opt.count; ++i) {
            char name[64];
            std::snprintf(name, sizeof name, "%s-%04zu.txt", opt.family.c_str(), i);
            std::ofstream f(std::filesystem::path(opt.out) / name, std::ios::binary);
            if (!(f << detail::generate_one(opt, opt.seed + i))) throw std::invalid_argument(std::string("cannot write ") + name);
        }
        return ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    }
    return input_error;
}

inline int run_selfcheck(const SelfcheckOptions& opt, std::ostream& out, const Solvers& solvers = {}) {
    out << "selfcheck seed=" << opt.seed << " max-n=" << opt.max_n << " samples=" << opt.samples << '\n';
    bool all = true;
    for (const PropertyOutcome& o : run_selfcheck(opt, solvers)) {
        all = all && o.passed();
        out << (o.passed() ? "PASS " : "FAIL ") << o.name << "  checked=" << o.checked << " failed=" << o.failed << '\n';
        if (o.counterexample) out << "  counterexample: " << *o.counterexample;
    }
    out << (all ? "all properties passed\n" : "some properties FAILED\n");
    return all ? ok : check_failed;
}

}  // namespace gperiod::cli
