#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "defectlab/constructions.hpp"
#include "defectlab/graph6.hpp"

namespace fixtures {

using defectlab::CubicGraph;

// Directory holding nontrivial_<order>.g6 files: DEFECT_LAB_CENSUS_DIR when
// set, otherwise the bundled test data.
inline std::filesystem::path census_dir() {
    if (const char* env = std::getenv("DEFECT_LAB_CENSUS_DIR"); env && *env) return env;
    return DEFECTLAB_TEST_DATA "/census";
}

inline std::filesystem::path census_file(int order) {
    return census_dir() / ("nontrivial_" + std::to_string(order) + ".g6");
}

inline bool has_census(int order) { return std::filesystem::exists(census_file(order)); }

inline std::vector<CubicGraph> census(int order) {
    std::vector<CubicGraph> out;
    std::ifstream in(census_file(order));
    for (const auto& l : defectlab::read_graph6_lines(in)) out.push_back(defectlab::parse_graph6(l.text));
    return out;
}

inline std::vector<CubicGraph> census_up_to(int max_order) {
    std::vector<CubicGraph> out;
    for (int n = 10; n <= max_order; n += 2)
        if (has_census(n))
            for (auto& g : census(n)) out.push_back(std::move(g));
    return out;
}

// Every connected cubic graph on 4..12 vertices (112 graphs, bridged ones included).
inline std::vector<CubicGraph> small_cubic() {
    std::vector<CubicGraph> out;
    std::ifstream in(DEFECTLAB_TEST_DATA "/connected_cubic_upto12.g6");
    for (const auto& l : defectlab::read_graph6_lines(in)) out.push_back(defectlab::parse_graph6(l.text));
    return out;
}

inline const char* kPetersenG6 = "IheA@GUAo";
inline const char* kK4G6 = "C~";

inline CubicGraph prism() {
    return CubicGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline CubicGraph cube() {
    return CubicGraph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                      {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Heawood graph: girth 6, bipartite.
inline CubicGraph heawood() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return CubicGraph::from_edges(14, e);
}

// Theta graph: two vertices, three parallel edges.
inline CubicGraph theta() { return CubicGraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }

// Defect-3 snarks of order 20 with a non-essential triangle that meets every
// core hexagon. Normalising the last two starts with a triangle contraction
// that inherits no core hexagon.
inline const std::vector<std::string> kTriangleTraps = {
    "S???C@?GA_HGAGICEA?M?D_?E_C?OC?CC", "S???C@?GCoS?GWEGB_?K_@c?B?A?GA??K", "S???C@?GCoR?K?GW?o?M?@c?GoA?CA?@C"};

}  // namespace fixtures
