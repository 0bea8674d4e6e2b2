#pragma once

// Full analysis of one digraph, rendered as text or single-line JSON.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gperiod/arith.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/index.hpp"
#include "gperiod/oracle.hpp"
#include "gperiod/period.hpp"
#include "gperiod/scc.hpp"

namespace gperiod {

enum class Algorithm { lifted, oracle };

inline std::string to_string(Algorithm a) { return a == Algorithm::lifted ? "lifted" : "oracle"; }

inline constexpr const char* conventions_note =
    "A^0 = I, so index 0 is possible; the period is the lcm over components that contain a cycle (1 if none)";

struct ComponentRow {
    std::vector<Vertex> vertices;
    bool has_cycle = false;
    bool is_sink = false;
    std::optional<std::uint64_t> period;
};

struct AnalysisReport {
    std::string file;
    std::string format;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::vector<std::string> vertex_names;  // DOT input only
    PeriodResult period;
    bool strongly_connected = false;
    bool almost_strongly_connected = false;
    bool primitive = false;
    std::uint64_t index = 0;
    std::optional<std::uint64_t> exponent;  // present iff primitive
    std::vector<ComponentRow> components;
    Algorithm algorithm = Algorithm::lifted;
    std::string conventions = conventions_note;
};

inline AnalysisReport analyze(const Digraph& g, Algorithm algorithm, std::string file = "-",
                              std::string format = "edgelist", std::vector<std::string> names = {}) {
    AnalysisReport r;
    r.file = std::move(file);
    r.format = std::move(format);
    r.n = g.size();
    r.edges = g.edge_count();
    r.vertex_names = std::move(names);
    r.algorithm = algorithm;

    const SccDecomposition scc = scc_decompose(g);
    r.strongly_connected = scc.count() == 1;
    r.almost_strongly_connected = is_almost_strongly_connected(scc);

    std::vector<std::optional<std::uint64_t>> periods(scc.count());
    if (algorithm == Algorithm::lifted) {
        periods = component_periods(g, scc);
        const PowerSignature sig = index_of_convergence(g);
        r.period = period_general(g, scc);
        r.index = sig.index;
    } else {
        for (std::size_t c = 0; c < scc.count(); ++c) {
            if (scc.has_cycle[c]) periods[c] = oracle_cycle_gcd(induced_subgraph(g, scc.components[c]), 0);
        }
        const PowerSignature sig = oracle_signature(g);
        r.period = lcm_list({sig.period.convert_to<std::int64_t>()});
        r.index = sig.index;
    }

    for (std::size_t c = 0; c < scc.count(); ++c) {
        r.components.push_back({scc.components[c], static_cast<bool>(scc.has_cycle[c]),
                                static_cast<bool>(scc.is_sink[c]), periods[c]});
    }
    r.primitive = r.strongly_connected && scc.has_cycle[0] && r.period.value == 1;
    if (r.primitive) r.exponent = r.index;
    return r;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["input"] = {{"file", r.file}, {"format", r.format}, {"n", r.n}, {"edges", r.edges}};
    if (!r.vertex_names.empty()) j["vertex_names"] = r.vertex_names;
    ordered_json factors = ordered_json::array();
    for (const PrimePower& f : r.period.factors) {
        factors.push_back({{"prime", f.prime}, {"multiplicity", f.multiplicity}});
    }
    j["period"] = {{"value", r.period.value.str()}, {"factored", format_factored(r.period)}, {"factors", factors}};
    j["strongly_connected"] = r.strongly_connected;
    j["almost_strongly_connected"] = r.almost_strongly_connected;
    j["primitive"] = r.primitive;
    j["index"] = r.index;
    if (r.exponent) j["exponent"] = *r.exponent;
    ordered_json comps = ordered_json::array();
    for (const ComponentRow& c : r.components) {
        ordered_json row;
        row["vertices"] = c.vertices;
        row["has_cycle"] = c.has_cycle;
        row["is_sink"] = c.is_sink;
        row["period"] = c.period ? ordered_json(*c.period) : ordered_json(nullptr);
        comps.push_back(std::move(row));
    }
    j["components"] = std::move(comps);
    j["algorithm"] = to_string(r.algorithm);
    j["conventions"] = r.conventions;
    return j;
}

inline std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    auto name = [&](Vertex v) {
        return r.vertex_names.empty() ? std::to_string(v) : r.vertex_names.at(v);
    };
    out << "input:        " << r.file << " (" << r.format << ", n=" << r.n << ", edges=" << r.edges << ")\n";
    out << "algorithm:    " << to_string(r.algorithm) << '\n';
    out << "period:       " << format_factored(r.period) << '\n';
    out << "strongly connected:        " << yes_no(r.strongly_connected) << '\n';
    out << "almost strongly connected: " << yes_no(r.almost_strongly_connected) << '\n';
    out << "primitive:    " << yes_no(r.primitive) << '\n';
    out << "index:        " << r.index << '\n';
    if (r.exponent) out << "exponent:     " << *r.exponent << '\n';
    out << "components:   " << r.components.size() << '\n';
    for (std::size_t c = 0; c < r.components.size(); ++c) {
        const ComponentRow& row = r.components[c];
        out << "  [" << c << "] {";
        for (std::size_t i = 0; i < row.vertices.size(); ++i) out << (i ? "," : "") << name(row.vertices[i]);
        out << "} cycle=" << yes_no(row.has_cycle) << " sink=" << yes_no(row.is_sink)
            << " period=" << (row.period ? std::to_string(*row.period) : "-") << '\n';
    }
    out << "conventions:  " << r.conventions << '\n';
    return out.str();
}

}  // namespace gperiod
