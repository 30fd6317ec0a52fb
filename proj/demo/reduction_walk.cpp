// Grows a defect-3 snark from the Petersen graph by a 2-sum and a 3-sum,
// reduces it back and prints the trace. The inflated 34-vertex snark stops at
// its essential triangle.

#include <iostream>

#include "defectlab/defectlab.hpp"

using namespace defectlab;

int main() {
    CubicGraph g = two_sum(petersen_graph(), 0, complete_bipartite_3_3(), 0);
    g = three_sum(g, 5, complete_graph_4(), 0, 2);
    std::cout << "start: " << g.vertex_count() << " vertices, " << to_graph6(g) << '\n';

    NormalizeOptions opt;
    opt.brute_force_check = true;
    auto nf = normalize(g, opt);
    std::cout << format_trace(nf);
    std::cout << "normal form " << to_graph6(nf.graph) << '\n';

    auto z = inflate_vertex(example_34().graph, 0);
    std::cout << "\ninflated 34-vertex snark: " << z.vertex_count() << " vertices\n";
    std::cout << format_trace(normalize(z));
}
