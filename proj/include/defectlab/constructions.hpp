#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defectlab/clusters.hpp"
#include "defectlab/colouring.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/matching.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
inline CubicGraph petersen_graph() {
    return CubicGraph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline CubicGraph complete_graph_4() {
    return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline CubicGraph complete_bipartite_3_3() {
    return CubicGraph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Petersen graph labelled around a central vertex: z = 0, its neighbours
// a0, a1, a2 = 1, 2, 3, and the remaining hexagon c0..c5 = 4..9 with a_i
// adjacent to c_i and c_{i+3}.
inline CubicGraph petersen_around_vertex() {
    return CubicGraph::from_edges(10, {{0, 1}, {0, 2}, {0, 3},
                                       {1, 4}, {1, 7}, {2, 5}, {2, 8}, {3, 6}, {3, 9},
                                       {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}});
}

// The (2,2,2)-pole Z: the Petersen graph with the hexagon edges p0 = c0c1,
// p1 = c2c3, p2 = c4c5 severed. Connector S_i = {p_i1, p_i2} where p_i1
// dangles at c_{2i} and p_i2 at c_{2i+1}. Z - z is the 9-cycle
// a0 c0 c5 a2 c2 c1 a1 c4 c3, along which the severed ends appear in the
// order p01, p22, p11, p02, p21, p12.
inline Multipole build_z_hexapole() {
    CubicGraph pg = petersen_around_vertex();
    std::vector<Edge> cut = {pg.edge_between(4, 5), pg.edge_between(6, 7), pg.edge_between(8, 9)};
    return sever(Multipole(pg), cut, {"S0", "S1", "S2"});
}

// The isochromatic (2,2)-pole G - {u, v} for adjacent u, v: connector "in"
// holds the former edges of u, "out" those of v.
inline Multipole isochromatic_pole(const CubicGraph& g, Vertex u, Vertex v) {
    if (!g.adjacent(u, v)) throw PreconditionError("isochromatic pole needs adjacent vertices");
    Multipole m = delete_vertices(g, {u, v});
    auto in = m.connector("v" + std::to_string(u)).semiedges;
    auto out = m.connector("v" + std::to_string(v)).semiedges;
    return Multipole(m.graph(), {{"in", in}, {"out", out}});
}

inline Multipole petersen_isochromatic_pole() { return isochromatic_pole(petersen_graph(), 0, 1); }

// Perfect matching of the six output semiedges (indexed 2j + k for pole j,
// semiedge k) with no pair inside one pole.
using GnWiring = std::array<std::pair<int, int>, 3>;

// The eight admissible wirings in lexicographic order.
inline std::vector<GnWiring> gn_wirings() {
    std::vector<GnWiring> out;
    auto rec = [&](auto&& self, std::vector<int> rest, std::vector<std::pair<int, int>> acc) -> void {
        if (rest.empty()) {
            out.push_back({acc[0], acc[1], acc[2]});
            return;
        }
        int a = rest.front();
        for (std::size_t i = 1; i < rest.size(); ++i) {
            int b = rest[i];
            if (a / 2 == b / 2) continue;
            auto next = rest;
            next.erase(next.begin() + static_cast<long>(i));
            next.erase(next.begin());
            auto acc2 = acc;
            acc2.emplace_back(a, b);
            self(self, next, acc2);
        }
    };
    rec(rec, {0, 1, 2, 3, 4, 5}, {});
    return out;
}

struct GnGraph {
    CubicGraph graph;
    GnWiring wiring{};
    std::vector<Vertex> z_vertices;  // 0..9, z itself is vertex 0
    EdgeSet z_edges;                 // edges with both ends in Z
};

// Joins the input connector of pole j to S_j (first semiedge to p_j1) and the
// output semiedges by `wiring`.
inline GnGraph build_gn(const std::array<Multipole, 3>& poles, const GnWiring& wiring) {
    std::vector<int> seen(6, 0);
    for (auto [a, b] : wiring) {
        if (a < 0 || a > 5 || b < 0 || b > 5 || seen[a]++ || seen[b]++)
            throw PreconditionError("wiring is not a perfect matching of the output semiedges");
        if (a / 2 == b / 2) throw PreconditionError("wiring joins an output connector to itself");
    }
    for (const auto& p : poles) {
        if (p.connector_sizes() != std::vector<int>{2, 2}) throw PreconditionError("poles must be (2,2)-poles");
        auto cls = classify_4pole(p);
        if (cls.kind != FourPoleKind::isochromatic || cls.pairing[0] != std::pair<int, int>{0, 1})
            throw PreconditionError("pole is not isochromatic along its connectors");
    }
    Multipole acc = build_z_hexapole();
    std::array<std::array<Dart, 2>, 3> outputs{};
    for (int j = 0; j < 3; ++j) {
        const auto& s = acc.connector("S" + std::to_string(j)).semiedges;
        const auto& in = poles[j].connector("in").semiedges;
        Provenance prov;
        int offset = acc.graph().dart_count();
        auto out_darts = poles[j].connector("out").semiedges;
        acc = junction(acc, poles[j], {{s[0], in[0]}, {s[1], in[1]}}, &prov);
        for (int k = 0; k < j; ++k)
            for (Dart& d : outputs[k]) d = prov.dart_map[d];
        outputs[j] = {prov.dart_map[out_darts[0] + offset], prov.dart_map[out_darts[1] + offset]};
    }
    std::vector<std::pair<Dart, Dart>> pairs;
    for (auto [a, b] : wiring) pairs.emplace_back(outputs[a / 2][a % 2], outputs[b / 2][b % 2]);
    GnGraph r;
    r.graph = junction(acc, pairs).graph();
    r.wiring = wiring;
    for (Vertex v = 0; v < 10; ++v) r.z_vertices.push_back(v);
    for (Edge e = 0; e < r.graph.edge_count(); ++e)
        if (r.graph.end(e, 0) < 10 && r.graph.end(e, 1) < 10) r.z_edges.insert(e);
    return r;
}

struct GnValidation {
    bool snark = false;
    bool nontrivial = false;
    int cyclic_connectivity = 0;
    bool no_core_in_z = false;  // no 3-array has its core inside Z
    int defect = 0;
    bool z_heavy = false;

    bool passes(int required_defect) const {
        return snark && nontrivial && no_core_in_z && defect == required_defect && z_heavy;
    }
};

inline GnValidation validate_gn(const GnGraph& gn) {
    const CubicGraph& g = gn.graph;
    GnValidation v;
    v.snark = is_two_connected(g) && !is_colourable(g);
    auto cc = cyclic_edge_connectivity(g, 6);
    v.cyclic_connectivity = cc.above_cap ? 7 : cc.value;
    int gi = girth(g);
    v.nontrivial = v.snark && gi >= 5 && gi != kInfiniteGirth && v.cyclic_connectivity >= 4;
    v.no_core_in_z = !array_with_core_within(g, gn.z_edges).has_value();
    if (v.snark) v.defect = defect(g).value;
    for (const auto& c : five_clusters(g))
        if (c.contains(0))
            v.z_heavy = c.heavy && std::all_of(gn.z_vertices.begin(), gn.z_vertices.end(),
                                               [&](Vertex x) { return c.contains(x); });
    return v;
}

// The 34-vertex snark built from three Petersen-based isochromatic poles with
// the lexicographically least wiring that passes every validation.
inline GnGraph example_34(GnValidation* validation = nullptr) {
    auto pole = petersen_isochromatic_pole();
    for (const auto& w : gn_wirings()) {
        GnGraph gn = build_gn({pole, pole, pole}, w);
        auto v = validate_gn(gn);
        if (v.passes(4)) {
            if (validation) *validation = v;
            return gn;
        }
    }
    throw ConsistencyError("no wiring of three Petersen poles passes validation");
}

}  // namespace defectlab
