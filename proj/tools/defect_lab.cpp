#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "defectlab/defectlab.hpp"
#include "defectlab/fetch.hpp"

using namespace defectlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// A graph6 string, a .mpole file, or a graph6 list (first graph unless `all`).
std::vector<InputGraph> load_inputs(const std::string& arg, bool all) {
    std::ifstream probe(arg);
    if (!probe) return {{"arg", arg}};
    if (arg.size() > 6 && arg.substr(arg.size() - 6) == ".mpole") {
        auto m = parse_mpole(slurp(arg));
        if (m.graph().has_semiedges()) throw PreconditionError("analysis needs a closed graph, not a multipole");
        return {{arg, to_graph6(m.graph())}};
    }
    auto list = read_graph_list(probe, arg);
    if (!all && list.size() > 1) list.resize(1);
    return list;
}

int default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

std::set<Pass> parse_passes(const std::string& spec) {
    std::set<Pass> out;
    std::stringstream s(spec);
    std::string item;
    while (std::getline(s, item, ','))
        if (!item.empty()) out.insert(parse_pass(item));
    return out;
}

void print_graph(const CubicGraph& g, const std::string& format) {
    if (format == "mpole") std::cout << write_mpole(g);
    else std::cout << to_graph6(g) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colouring defect toolkit for cubic graphs"};
    app.require_subcommand(1);

    auto* census = app.add_subcommand("census", "Analyse graph6 files and tabulate per order");
    std::vector<std::string> census_files;
    std::string passes = "critical,defect,hexagons";
    int jobs = default_jobs();
    double timeout = 10.0;
    std::string jsonl_path, csv_path;
    bool all_graphs = false;
    census->add_option("files", census_files, "graph6 files")->required();
    census->add_option("--passes", passes, "comma list of critical,defect,hexagons,pi,clusters,reduce");
    census->add_option("--jobs", jobs, "worker threads");
    census->add_option("--timeout", timeout, "per-graph budget in seconds for pi (0 = none)");
    census->add_option("--jsonl", jsonl_path, "write one JSON record per graph");
    census->add_option("--csv", csv_path, "write per-order table");
    census->add_flag("--all", all_graphs, "run passes on every 2-connected graph, not only nontrivial snarks");

    auto* analyze = app.add_subcommand("analyze", "Full analysis of one graph");
    std::string analyze_arg;
    analyze->add_option("graph", analyze_arg, "graph6 string, graph6 file or .mpole file")->required();

    auto* reduce = app.add_subcommand("reduce", "Reduce a defect-3 snark to normal form and print the trace");
    std::string reduce_arg;
    bool reduce_check = false;
    reduce->add_option("graph", reduce_arg, "graph6 string, graph6 file or .mpole file")->required();
    reduce->add_flag("--check", reduce_check, "re-verify every step with the exhaustive defect search");

    auto* construct = app.add_subcommand("construct", "Print a constructed graph or multipole");
    std::string what, format = "g6";
    int wiring = -1;
    construct->add_option("what", what, "z | gn | g34")->required()->check(CLI::IsMember({"z", "gn", "g34"}));
    construct->add_option("--wiring", wiring, "output wiring 0..7 for gn (default: first valid)");
    construct->add_option("--format", format, "g6 | mpole")->check(CLI::IsMember({"g6", "mpole"}));

    auto* scan = app.add_subcommand("scan", "Search graph6 files for counterexamples or examples");
    std::string scan_id;
    std::vector<std::string> scan_files;
    std::vector<std::string> scan_ids;
    for (const auto& s : scan_specs()) scan_ids.push_back(s.id);
    scan->add_option("id", scan_id, "scan id")->required()->check(CLI::IsMember(scan_ids));
    scan->add_option("files", scan_files, "graph6 files")->required();
    scan->add_option("--jobs", jobs, "worker threads");

    auto* fetch = app.add_subcommand("fetch", "Download a graph6 list into the cache");
    std::string url, cache_dir;
    bool offline = false;
    fetch->add_option("url", url, "URL or local path")->required();
    fetch->add_option("--cache", cache_dir, "cache directory (default: $DEFECT_LAB_CACHE)");
    fetch->add_flag("--offline", offline, "serve from cache only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*census) {
            CensusOptions opt;
            opt.passes = parse_passes(passes);
            opt.jobs = jobs;
            opt.timeout_seconds = timeout;
            opt.nontrivial_only = !all_graphs;
            auto inputs = read_graph_files(census_files);
            std::ofstream jsonl;
            if (!jsonl_path.empty()) {
                jsonl.open(jsonl_path);
                if (!jsonl) throw FormatError("cannot write " + jsonl_path);
            }
            auto rep = run_census(inputs, opt, [&](const GraphRecord& r) {
                if (jsonl.is_open()) jsonl << to_jsonl(r) << '\n';
            });
            std::string csv = table_csv(rep);
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) throw FormatError("cannot write " + csv_path);
                out << csv;
            }
            std::cout << csv;
            for (const auto& d : rep.discoveries) std::cout << "discovery: " << d << '\n';
            for (const auto& v : report_violations(rep)) std::cout << "violation: " << v << '\n';
            return 0;
        }
        if (*analyze) {
            CensusOptions opt;
            opt.passes = {Pass::critical, Pass::defect, Pass::hexagons, Pass::pi, Pass::clusters, Pass::reduce};
            opt.nontrivial_only = false;
            for (const auto& in : load_inputs(analyze_arg, false)) {
                auto g = parse_graph6(in.graph6);
                std::cout << to_json(analyze_graph(g, in.id, in.graph6, opt)).dump(2) << '\n';
                if (!is_colourable(g) && g.vertex_count() <= 40)
                    for (const auto& h : classify_hexagons(g)) {
                        std::cout << "hexagon";
                        for (Vertex v : h.hexagon.vertices) std::cout << ' ' << v;
                        std::cout << ": " << to_string(h.kind) << '\n';
                    }
            }
            return 0;
        }
        if (*reduce) {
            for (const auto& in : load_inputs(reduce_arg, false)) {
                NormalizeOptions opt;
                opt.brute_force_check = reduce_check;
                auto nf = normalize(parse_graph6(in.graph6), opt);
                std::cout << format_trace(nf);
                std::cout << to_graph6(nf.graph) << '\n';
            }
            return 0;
        }
        if (*construct) {
            if (what == "z") {
                std::cout << write_mpole(build_z_hexapole());
            } else if (what == "g34" || wiring < 0) {
                GnValidation v;
                auto gn = example_34(&v);
                print_graph(gn.graph, format);
            } else {
                auto ws = gn_wirings();
                if (wiring >= static_cast<int>(ws.size())) throw PreconditionError("wiring must be in 0..7");
                auto pole = petersen_isochromatic_pole();
                print_graph(build_gn({pole, pole, pole}, ws[wiring]).graph, format);
            }
            return 0;
        }
        if (*scan) {
            const auto& spec = find_scan(scan_id);
            CensusOptions opt;
            opt.passes = spec.passes;
            opt.jobs = jobs;
            std::vector<GraphRecord> records;
            run_census(read_graph_files(scan_files), opt, [&](const GraphRecord& r) { records.push_back(r); });
            std::cout << describe(scan_records(spec, records));
            return 0;
        }
        if (*fetch) {
            FetchOptions opt;
            if (!cache_dir.empty()) opt.cache_dir = cache_dir;
            opt.offline = offline;
            auto r = fetch_dataset(url, opt);
            std::cout << r.path.string() << ' ' << r.content_sha256 << (r.from_cache ? " cached" : " downloaded") << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
