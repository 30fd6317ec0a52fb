// Builds the 34-vertex defect-4 snark from three Petersen poles and tests,
// vertex by vertex, whether inflating it to a triangle drops the defect to 3.

#include <iostream>

#include "defectlab/defectlab.hpp"

using namespace defectlab;

int main() {
    GnValidation v;
    GnGraph gn = example_34(&v);
    const CubicGraph& g = gn.graph;
    std::cout << to_graph6(g) << '\n';
    std::cout << "wiring";
    for (auto [a, b] : gn.wiring) std::cout << " (" << a << ',' << b << ')';
    std::cout << "\nsnark " << v.snark << "  nontrivial " << v.nontrivial << "  cyclic conn. " << v.cyclic_connectivity
              << "  defect " << v.defect << "  Z heavy " << v.z_heavy << "  no core in Z " << v.no_core_in_z << "\n\n";

    auto clusters = five_clusters(g);
    std::cout << clusters.size() << " 5-clusters:";
    for (const auto& c : clusters) std::cout << ' ' << c.vertices.size() << (c.heavy ? "H" : "");
    std::cout << "\n\nvertex  heavy  inflated df=3\n";
    auto checks = heavy_inflation_check_all(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        std::cout << "  " << x << (x < 10 ? "     " : "    ") << checks[x].predicted << "      " << checks[x].actual
                  << (checks[x].agrees() ? "" : "   MISMATCH") << '\n';
}
