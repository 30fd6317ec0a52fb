#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "defectlab/colouring.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

struct FiveCluster {
    std::vector<Cycle> cycles;
    std::vector<Vertex> vertices;  // sorted
    EdgeSet edges;
    // Colourings of G~e for a representative edge e (the lowest edge of the cluster).
    std::uint64_t smoothing_count = 0;
    bool heavy = false;

    bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

// Maximal connected unions of 5-cycles: 5-cycles sharing a vertex belong to the
// same cluster. With `check_constancy` every edge of every cluster is smoothed
// and the counts compared.
inline std::vector<FiveCluster> five_clusters(const CubicGraph& g, bool check_constancy = false) {
    auto cycles = cycles_of_length(g, 5, false);
    const int k = static_cast<int>(cycles.size());
    detail::UnionFind uf(k);
    std::vector<int> owner(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i)
        for (Vertex v : cycles[i].vertices) {
            if (owner[v] >= 0) uf.unite(owner[v], i);
            else owner[v] = i;
        }
    std::vector<int> index(k, -1);
    std::vector<FiveCluster> out;
    for (int i = 0; i < k; ++i) {
        int r = uf.find(i);
        if (index[r] < 0) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        auto& c = out[index[r]];
        c.cycles.push_back(cycles[i]);
        for (Vertex v : cycles[i].vertices) c.vertices.push_back(v);
        for (Edge e : cycles[i].edges) c.edges.insert(e);
    }
    for (auto& c : out) {
        std::sort(c.vertices.begin(), c.vertices.end());
        c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
        auto edges = c.edges.to_vector();
        c.smoothing_count = smoothing_colouring_count(g, edges.front());
        c.heavy = c.smoothing_count > 0;
        if (check_constancy)
            for (Edge e : edges)
                if (smoothing_colouring_count(g, e) != c.smoothing_count)
                    throw ConsistencyError("smoothing count is not constant on a 5-cluster");
    }
    return out;
}

inline bool in_heavy_cluster(const std::vector<FiveCluster>& clusters, Vertex v) {
    return std::any_of(clusters.begin(), clusters.end(), [&](const FiveCluster& c) { return c.heavy && c.contains(v); });
}

struct InflationCheck {
    bool predicted = false;  // v lies in a heavy 5-cluster
    bool actual = false;     // inflating v gives defect 3
    bool agrees() const { return predicted == actual; }
};

namespace detail {

inline void require_nontrivial_defect_four(const CubicGraph& k) {
    if (is_colourable(k)) throw PreconditionError("inflation check needs a snark");
    int gi = girth(k);
    if (gi < 5 || gi == kInfiniteGirth || !is_cyclically_k_edge_connected(k, 4))
        throw PreconditionError("inflation check needs a nontrivial snark");
    if (defect_is_three(k)) throw PreconditionError("inflation check needs defect at least 4");
}

inline InflationCheck inflation_check_unchecked(const CubicGraph& k, const std::vector<FiveCluster>& clusters,
                                                Vertex v) {
    InflationCheck r;
    r.predicted = in_heavy_cluster(clusters, v);
    r.actual = defect_is_three(inflate_vertex(k, v)).has_value();
    return r;
}

}  // namespace detail

// Inflating v in a nontrivial snark of defect >= 4 yields defect 3 exactly
// when v lies in a heavy 5-cluster; both sides are computed independently.
inline InflationCheck heavy_inflation_check(const CubicGraph& k, Vertex v) {
    detail::require_nontrivial_defect_four(k);
    return detail::inflation_check_unchecked(k, five_clusters(k), v);
}

// The same check for every vertex, sharing the cluster computation.
inline std::vector<InflationCheck> heavy_inflation_check_all(const CubicGraph& k) {
    detail::require_nontrivial_defect_four(k);
    auto clusters = five_clusters(k);
    std::vector<InflationCheck> out;
    for (Vertex v = 0; v < k.vertex_count(); ++v) out.push_back(detail::inflation_check_unchecked(k, clusters, v));
    return out;
}

}  // namespace defectlab
