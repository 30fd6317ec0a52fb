// Prints the basic invariants of the Petersen graph and one optimal 3-array.

#include <iostream>

#include "defectlab/defectlab.hpp"

using namespace defectlab;

int main() {
    CubicGraph p = petersen_graph();
    std::cout << "graph6            " << to_graph6(p) << '\n';
    std::cout << "girth             " << girth(p) << '\n';
    std::cout << "cyclic conn.      " << cyclic_edge_connectivity(p).value << '\n';
    std::cout << "colourings        " << count_colourings(p) << '\n';

    auto d = defect(p);
    std::cout << "defect            " << d.value << '\n';
    std::cout << "core edges       ";
    for (Edge e : d.witness.core_edges().to_vector()) {
        auto [a, b] = p.ends(e);
        std::cout << ' ' << a << '-' << b;
    }
    std::cout << '\n';

    int double_core = 0;
    for (const auto& h : classify_hexagons(p)) double_core += h.kind == HexagonClass::double_core;
    std::cout << "double-core hex.  " << double_core << '\n';
    std::cout << "kaszonyi(e0)      " << kaszonyi(p, 0) << '\n';
    std::cout << "matching index    " << perfect_matching_index(p).value << '\n';
    std::cout << "oddness           " << oddness(p) << '\n';

    auto cls = classify_snark(p);
    std::cout << "critical          " << (cls.critical ? "yes" : "no") << '\n';
    std::cout << "bicritical        " << (cls.bicritical ? "yes" : "no") << '\n';
}
