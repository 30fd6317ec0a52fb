#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "defectlab/clusters.hpp"
#include "defectlab/colouring.hpp"
#include "defectlab/covers.hpp"
#include "defectlab/deadline.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph6.hpp"
#include "defectlab/reduction.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

enum class Pass { critical, defect, hexagons, pi, clusters, reduce };

inline const char* to_string(Pass p) {
    switch (p) {
        case Pass::critical: return "critical";
        case Pass::defect: return "defect";
        case Pass::hexagons: return "hexagons";
        case Pass::pi: return "pi";
        case Pass::clusters: return "clusters";
        case Pass::reduce: return "reduce";
    }
    return "?";
}

inline Pass parse_pass(const std::string& name) {
    for (Pass p : {Pass::critical, Pass::defect, Pass::hexagons, Pass::pi, Pass::clusters, Pass::reduce})
        if (name == to_string(p)) return p;
    throw PreconditionError("unknown pass '" + name + "'");
}

// Partition classes of nontrivial defect-3 snarks by the kinds of their
// 6-cycles. `other` collects graphs outside the four classes (no double-core
// hexagon, or a non-removable non-core hexagon).
enum class HexagonProfile { double_core, double_core_removable, double_core_single_core, double_core_single_core_removable, other };

inline const char* to_string(HexagonProfile p) {
    switch (p) {
        case HexagonProfile::double_core: return "DC";
        case HexagonProfile::double_core_removable: return "DC+R";
        case HexagonProfile::double_core_single_core: return "DC+SC";
        case HexagonProfile::double_core_single_core_removable: return "DC+SC+R";
        case HexagonProfile::other: return "other";
    }
    return "?";
}

struct HexagonCounts {
    int removable = 0;
    int non_core = 0;
    int single_core = 0;
    int double_core = 0;

    int total() const { return removable + non_core + single_core + double_core; }

    HexagonProfile profile() const {
        if (double_core == 0 || non_core > 0) return HexagonProfile::other;
        if (single_core == 0) return removable == 0 ? HexagonProfile::double_core : HexagonProfile::double_core_removable;
        return removable == 0 ? HexagonProfile::double_core_single_core
                              : HexagonProfile::double_core_single_core_removable;
    }
};

struct ClusterSummary {
    int count = 0;
    int heavy = 0;
    std::vector<int> sizes;  // vertex counts, in cluster order
};

struct GraphRecord {
    std::string id;
    std::string graph6;
    int order = 0;
    int girth = 0;  // 0 for acyclic graphs
    int cyclic_connectivity = 0;
    bool cyclic_connectivity_above_cap = false;
    bool snark = false;
    bool nontrivial = false;
    std::optional<bool> critical;
    std::optional<bool> bicritical;
    std::optional<int> defect;
    std::optional<int> defect_lower_bound;
    std::optional<int> oddness;
    std::optional<HexagonCounts> hexagons;
    std::optional<int> pi;  // 7 when above the cap of 6
    std::optional<ClusterSummary> clusters;
    std::optional<std::string> normal_form;
    std::optional<int> reduction_steps;
    std::string status = "ok";  // ok | inconclusive | error
    std::string message;
};

struct CensusOptions {
    std::set<Pass> passes = {Pass::critical, Pass::defect, Pass::hexagons};
    int jobs = 1;
    double timeout_seconds = 10.0;
    bool nontrivial_only = true;  // passes run on nontrivial snarks only
};

inline constexpr int kConnectivityCap = 6;

// Runs the requested passes on one graph. Errors and exhausted budgets are
// recorded in the status rather than thrown.
inline GraphRecord analyze_graph(const CubicGraph& g, std::string id, std::string graph6,
                                 const CensusOptions& opt = {}) {
    GraphRecord r;
    r.id = std::move(id);
    r.graph6 = std::move(graph6);
    r.order = g.vertex_count();
    auto has = [&](Pass p) { return opt.passes.count(p) > 0; };
    try {
        int gi = girth(g);
        r.girth = gi == kInfiniteGirth ? 0 : gi;
        bool two_connected = is_two_connected(g);
        try {
            auto cc = cyclic_edge_connectivity(g, kConnectivityCap);
            r.cyclic_connectivity = cc.above_cap ? kConnectivityCap + 1 : cc.value;
            r.cyclic_connectivity_above_cap = cc.above_cap;
        } catch (const NoCycleSeparatingCut&) {
            r.cyclic_connectivity = kConnectivityCap + 1;
            r.cyclic_connectivity_above_cap = true;
        }
        r.snark = two_connected && !is_colourable(g);
        r.nontrivial = r.snark && r.girth >= 5 && r.cyclic_connectivity >= 4;
        bool run = r.nontrivial || (!opt.nontrivial_only && two_connected);
        if (!run) return r;
        Deadline deadline = opt.timeout_seconds > 0 ? Deadline::seconds(opt.timeout_seconds) : Deadline();
        if (has(Pass::critical) && r.snark) {
            auto cls = classify_snark(g);
            r.critical = cls.critical;
            r.bicritical = cls.bicritical;
        }
        if (has(Pass::defect)) {
            auto d = defect(g);
            r.defect = d.value;
            r.defect_lower_bound = d.lower_bound;
            r.oddness = oddness(g);
        }
        if (has(Pass::hexagons) && r.snark) {
            HexagonCounts h;
            for (const auto& a : classify_hexagons(g)) switch (a.kind) {
                    case HexagonClass::removable: ++h.removable; break;
                    case HexagonClass::non_core: ++h.non_core; break;
                    case HexagonClass::single_core: ++h.single_core; break;
                    case HexagonClass::double_core: ++h.double_core; break;
                }
            r.hexagons = h;
        }
        if (has(Pass::clusters)) {
            ClusterSummary s;
            for (const auto& c : five_clusters(g)) {
                ++s.count;
                s.heavy += c.heavy;
                s.sizes.push_back(static_cast<int>(c.vertices.size()));
            }
            r.clusters = s;
        }
        if (has(Pass::reduce) && r.snark && defect_is_three(g)) {
            auto nf = normalize(g);
            r.normal_form = to_string(nf.status);
            r.reduction_steps = static_cast<int>(nf.trace.size());
        }
        if (has(Pass::pi) && is_bridgeless(g)) {
            auto pi = perfect_matching_index(g, 6, &deadline);
            r.pi = pi.above_cap ? 7 : pi.value;
        }
    } catch (const Inconclusive& e) {
        r.status = "inconclusive";
        r.message = e.what();
    } catch (const std::exception& e) {
        r.status = "error";
        r.message = e.what();
    }
    return r;
}

inline nlohmann::ordered_json to_json(const GraphRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["graph6"] = r.graph6;
    j["order"] = r.order;
    j["girth"] = r.girth;
    j["cyclic_connectivity"] = r.cyclic_connectivity;
    if (r.cyclic_connectivity_above_cap) j["cyclic_connectivity_above_cap"] = true;
    j["snark"] = r.snark;
    j["nontrivial"] = r.nontrivial;
    if (r.critical) j["critical"] = *r.critical;
    if (r.bicritical) j["bicritical"] = *r.bicritical;
    if (r.defect) j["defect"] = *r.defect;
    if (r.defect_lower_bound) j["defect_lower_bound"] = *r.defect_lower_bound;
    if (r.oddness) j["oddness"] = *r.oddness;
    if (r.hexagons) {
        const auto& h = *r.hexagons;
        j["hexagons"] = {{"removable", h.removable},
                         {"non_core", h.non_core},
                         {"single_core", h.single_core},
                         {"double_core", h.double_core}};
        if (r.defect == 3) j["hexagon_class"] = to_string(h.profile());
    }
    if (r.pi) j["pi"] = *r.pi;
    if (r.clusters) j["clusters"] = {{"count", r.clusters->count}, {"heavy", r.clusters->heavy}, {"sizes", r.clusters->sizes}};
    if (r.normal_form) j["normal_form"] = *r.normal_form;
    if (r.reduction_steps) j["reduction_steps"] = *r.reduction_steps;
    j["status"] = r.status;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

inline std::string to_jsonl(const GraphRecord& r) { return to_json(r).dump(); }

struct InputGraph {
    std::string id;
    std::string graph6;
};

inline std::vector<InputGraph> read_graph_list(std::istream& in, const std::string& source) {
    std::vector<InputGraph> out;
    for (auto& l : read_graph6_lines(in)) out.push_back({source + ":" + std::to_string(l.line_index + 1), l.text});
    return out;
}

inline std::vector<InputGraph> read_graph_files(const std::vector<std::string>& paths) {
    std::vector<InputGraph> out;
    for (const auto& p : paths) {
        std::ifstream f(p);
        if (!f) throw FormatError("cannot open " + p);
        auto part = read_graph_list(f, p);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Per-order counts: nontrivial, critical, df = 3..6, and the four hexagon
// classes of defect-3 graphs.
struct CensusRow {
    int order = 0;
    int graphs = 0;
    int nontrivial = 0;
    int critical = 0;
    std::map<int, int> defect_counts;
    std::map<HexagonProfile, int> hexagon_classes;
    int inconclusive = 0;
    int errors = 0;
};

struct CensusReport {
    std::map<int, CensusRow> rows;
    std::vector<std::string> discoveries;  // graphs contradicting observed patterns

    const CensusRow* row(int order) const {
        auto it = rows.find(order);
        return it == rows.end() ? nullptr : &it->second;
    }
};

inline void add_to_report(CensusReport& rep, const GraphRecord& r) {
    auto& row = rep.rows[r.order];
    row.order = r.order;
    ++row.graphs;
    if (r.status == "inconclusive") ++row.inconclusive;
    if (r.status == "error") ++row.errors;
    if (!r.nontrivial) return;
    ++row.nontrivial;
    if (r.critical.value_or(false)) ++row.critical;
    if (r.defect) ++row.defect_counts[*r.defect];
    if (r.defect == 3 && r.hexagons) {
        auto p = r.hexagons->profile();
        ++row.hexagon_classes[p];
        if (p == HexagonProfile::other) rep.discoveries.push_back(r.id + " " + r.graph6 + ": defect 3 outside the four hexagon classes");
    }
}

// Row invariants: defect columns sum to the nontrivial count, hexagon classes
// partition the defect-3 graphs. Only checked for rows where every pass ran.
inline std::vector<std::string> report_violations(const CensusReport& rep) {
    std::vector<std::string> out;
    for (const auto& [order, row] : rep.rows) {
        if (row.inconclusive || row.errors) continue;
        int df_total = 0;
        for (auto [d, c] : row.defect_counts) df_total += c;
        if (!row.defect_counts.empty() && df_total != row.nontrivial)
            out.push_back("order " + std::to_string(order) + ": defect counts do not sum to the nontrivial count");
        int classes = 0;
        for (auto [k, c] : row.hexagon_classes) classes += c;
        auto it = row.defect_counts.find(3);
        if (!row.hexagon_classes.empty() && it != row.defect_counts.end() && classes != it->second)
            out.push_back("order " + std::to_string(order) + ": hexagon classes do not partition the defect-3 graphs");
    }
    return out;
}

inline std::string table_csv(const CensusReport& rep) {
    std::ostringstream out;
    out << "order,nontrivial,critical,df3,df4,df5,df6,dc,dc_removable,dc_single_core,dc_single_core_removable\n";
    for (const auto& [order, row] : rep.rows) {
        auto df = [&](int d) {
            auto it = row.defect_counts.find(d);
            return it == row.defect_counts.end() ? 0 : it->second;
        };
        auto cls = [&](HexagonProfile p) {
            auto it = row.hexagon_classes.find(p);
            return it == row.hexagon_classes.end() ? 0 : it->second;
        };
        out << order << ',' << row.nontrivial << ',' << row.critical << ',' << df(3) << ',' << df(4) << ','
            << df(5) << ',' << df(6) << ',' << cls(HexagonProfile::double_core) << ','
            << cls(HexagonProfile::double_core_removable) << ',' << cls(HexagonProfile::double_core_single_core)
            << ',' << cls(HexagonProfile::double_core_single_core_removable) << '\n';
    }
    return out.str();
}

// Analyses every input graph on `opt.jobs` workers and hands the records to
// `sink` in input order, whatever the scheduling.
inline CensusReport run_census(const std::vector<InputGraph>& inputs, const CensusOptions& opt,
                               const std::function<void(const GraphRecord&)>& sink = {}) {
    const std::size_t n = inputs.size();
    std::vector<std::optional<GraphRecord>> slots(n);
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            GraphRecord r;
            try {
                r = analyze_graph(parse_graph6(inputs[i].graph6), inputs[i].id, inputs[i].graph6, opt);
            } catch (const std::exception& e) {
                r.id = inputs[i].id;
                r.graph6 = inputs[i].graph6;
                r.status = "error";
                r.message = e.what();
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[i] = std::move(r);
            }
            ready.notify_all();
        }
    };
    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    CensusReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        GraphRecord r;
        {
            std::unique_lock<std::mutex> lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            r = std::move(*slots[i]);
            slots[i].reset();
        }
        add_to_report(rep, r);
        if (sink) sink(r);
    }
    for (auto& t : pool) t.join();
    return rep;
}

struct ScanResult {
    std::string id;
    std::string statement;
    int checked = 0;  // graphs the statement applies to
    int max_order = 0;
    std::vector<std::string> witnesses;  // counterexamples, or examples for existence questions
    bool existence_question = false;
};

struct ScanSpec {
    std::string id;
    std::string statement;
    bool existence_question;
    std::set<Pass> passes;
    // applies(record), witness(record)
    std::function<bool(const GraphRecord&)> applies;
    std::function<bool(const GraphRecord&)> witness;
};

inline const std::vector<ScanSpec>& scan_specs() {
    static const std::vector<ScanSpec> specs = {
        {"critical-defect-3", "every critical snark has defect 3", false, {Pass::critical, Pass::defect},
         [](const GraphRecord& r) { return r.critical.value_or(false) && r.defect.has_value(); },
         [](const GraphRecord& r) { return *r.defect != 3; }},
        {"critical-all-double-core", "in a critical snark every hexagon is double-core", false,
         {Pass::critical, Pass::hexagons},
         [](const GraphRecord& r) { return r.critical.value_or(false) && r.hexagons.has_value(); },
         [](const GraphRecord& r) { return r.hexagons->double_core != r.hexagons->total(); }},
        {"irreducible-defect-3", "every irreducible snark has defect 3", false, {Pass::critical, Pass::defect},
         [](const GraphRecord& r) { return r.bicritical.value_or(false) && r.defect.has_value(); },
         [](const GraphRecord& r) { return *r.defect != 3; }},
        {"irreducible-girth-6", "no irreducible snark has girth greater than 6", false, {Pass::critical},
         [](const GraphRecord& r) { return r.bicritical.value_or(false); },
         [](const GraphRecord& r) { return r.girth > 6; }},
        {"all-core-single-core", "a nontrivial defect-3 snark whose core hexagons are all single-core", true,
         {Pass::defect, Pass::hexagons},
         [](const GraphRecord& r) { return r.nontrivial && r.defect == 3 && r.hexagons.has_value(); },
         [](const GraphRecord& r) { return r.hexagons->double_core == 0 && r.hexagons->single_core > 0; }},
        {"non-removable-non-core", "a defect-3 snark with a non-removable non-core hexagon", true,
         {Pass::defect, Pass::hexagons},
         [](const GraphRecord& r) { return r.defect == 3 && r.hexagons.has_value(); },
         [](const GraphRecord& r) { return r.hexagons->non_core > 0; }},
    };
    return specs;
}

inline const ScanSpec& find_scan(const std::string& id) {
    for (const auto& s : scan_specs())
        if (s.id == id) return s;
    throw PreconditionError("unknown scan '" + id + "'");
}

inline ScanResult scan_records(const ScanSpec& spec, const std::vector<GraphRecord>& records) {
    ScanResult out;
    out.id = spec.id;
    out.statement = spec.statement;
    out.existence_question = spec.existence_question;
    for (const auto& r : records) {
        if (r.status != "ok" || !spec.applies(r)) continue;
        ++out.checked;
        out.max_order = std::max(out.max_order, r.order);
        if (spec.witness(r)) out.witnesses.push_back(r.id + " " + r.graph6);
    }
    return out;
}

inline std::string describe(const ScanResult& s) {
    std::ostringstream out;
    out << s.id << ": " << s.statement << "\n  applicable graphs: " << s.checked;
    if (s.checked) out << " (orders up to " << s.max_order << ")";
    out << '\n';
    if (s.witnesses.empty())
        out << (s.existence_question ? "  no example found" : "  no counterexample; verified on all applicable graphs")
            << '\n';
    for (const auto& w : s.witnesses) out << (s.existence_question ? "  example: " : "  counterexample: ") << w << '\n';
    return out.str();
}

}  // namespace defectlab
