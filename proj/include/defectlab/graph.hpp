#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectlab/edge_set.hpp"
#include "defectlab/errors.hpp"

namespace defectlab {

using Vertex = int;
using Edge = int;
// An edge-end. Edge e owns darts 2e and 2e+1.
using Dart = int;

inline constexpr Vertex kFreeEnd = -1;
inline constexpr int kNone = -1;

struct EdgeEnds {
    Vertex a = kFreeEnd;
    Vertex b = kFreeEnd;
};

// Cubic multigraph over darts. Loops, parallel edges, dangling edges (one free
// end) and isolated edges (two free ends) are all representable; every vertex
// owns exactly three darts. Immutable once built.
class CubicGraph {
  public:
    CubicGraph() = default;

    // Darts at each vertex are ordered by the order in which the vertex
    // appears while scanning `edges` front to back.
    CubicGraph(int vertex_count, const std::vector<EdgeEnds>& edges) {
        dart_vertex_.reserve(edges.size() * 2);
        for (const auto& e : edges) {
            dart_vertex_.push_back(e.a);
            dart_vertex_.push_back(e.b);
        }
        std::vector<std::array<Dart, 3>> slots(vertex_count, {kNone, kNone, kNone});
        std::vector<int> fill(vertex_count, 0);
        for (Dart d = 0; d < static_cast<Dart>(dart_vertex_.size()); ++d) {
            Vertex v = dart_vertex_[d];
            if (v == kFreeEnd) continue;
            if (v < 0 || v >= vertex_count) throw FormatError("edge endpoint out of range");
            if (fill[v] == 3)
                throw NonCubicError("vertex " + std::to_string(v) + " has degree > 3");
            slots[v][fill[v]++] = d;
        }
        for (Vertex v = 0; v < vertex_count; ++v)
            if (fill[v] != 3)
                throw NonCubicError("vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(fill[v]));
        vertex_darts_ = std::move(slots);
        count_semiedges();
    }

    // Explicit rotation: `vertex_darts[v]` lists the darts owned by v.
    static CubicGraph from_darts(std::vector<Vertex> dart_vertex,
                                 std::vector<std::array<Dart, 3>> vertex_darts) {
        if (dart_vertex.size() % 2 != 0) throw FormatError("odd dart count");
        CubicGraph g;
        g.dart_vertex_ = std::move(dart_vertex);
        g.vertex_darts_ = std::move(vertex_darts);
        std::vector<int> seen(g.dart_vertex_.size(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Dart d : g.vertex_darts_[v]) {
                if (d < 0 || d >= g.dart_count() || g.dart_vertex_[d] != v || seen[d]++)
                    throw NonCubicError("inconsistent rotation at vertex " + std::to_string(v));
            }
        for (Dart d = 0; d < g.dart_count(); ++d)
            if (g.dart_vertex_[d] != kFreeEnd && !seen[d])
                throw NonCubicError("dart not owned by its vertex");
        g.count_semiedges();
        return g;
    }

    static CubicGraph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
        std::vector<EdgeEnds> ends;
        ends.reserve(edges.size());
        for (auto [u, v] : edges) ends.push_back({u, v});
        return CubicGraph(vertex_count, ends);
    }

    int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
    int edge_count() const { return static_cast<int>(dart_vertex_.size() / 2); }
    int dart_count() const { return static_cast<int>(dart_vertex_.size()); }

    static Edge dart_edge(Dart d) { return d >> 1; }
    static Dart opposite(Dart d) { return d ^ 1; }
    static Dart dart_of(Edge e, int side) { return 2 * e + side; }

    Vertex dart_vertex(Dart d) const { return dart_vertex_[d]; }
    bool is_free(Dart d) const { return dart_vertex_[d] == kFreeEnd; }
    // Vertex at the far end of `d`'s edge.
    Vertex across(Dart d) const { return dart_vertex_[d ^ 1]; }

    Vertex end(Edge e, int side) const { return dart_vertex_[2 * e + side]; }
    EdgeEnds ends(Edge e) const { return {dart_vertex_[2 * e], dart_vertex_[2 * e + 1]}; }
    Vertex other_end(Edge e, Vertex v) const {
        return dart_vertex_[2 * e] == v ? dart_vertex_[2 * e + 1] : dart_vertex_[2 * e];
    }

    const std::array<Dart, 3>& darts(Vertex v) const { return vertex_darts_[v]; }
    std::array<Edge, 3> edges_at(Vertex v) const {
        const auto& d = vertex_darts_[v];
        return {d[0] >> 1, d[1] >> 1, d[2] >> 1};
    }
    std::array<Vertex, 3> neighbours(Vertex v) const {
        const auto& d = vertex_darts_[v];
        return {across(d[0]), across(d[1]), across(d[2])};
    }

    std::vector<Dart> free_darts() const {
        std::vector<Dart> out;
        for (Dart d = 0; d < dart_count(); ++d)
            if (is_free(d)) out.push_back(d);
        return out;
    }
    int semiedge_count() const { return semiedges_; }
    bool has_semiedges() const { return semiedges_ > 0; }

    bool is_loop(Edge e) const {
        return dart_vertex_[2 * e] != kFreeEnd && dart_vertex_[2 * e] == dart_vertex_[2 * e + 1];
    }
    bool has_loops() const {
        for (Edge e = 0; e < edge_count(); ++e)
            if (is_loop(e)) return true;
        return false;
    }
    bool is_simple() const {
        for (Vertex v = 0; v < vertex_count(); ++v) {
            auto n = neighbours(v);
            if (n[0] == v || n[1] == v || n[2] == v) return false;
            if ((n[0] != kFreeEnd && (n[0] == n[1] || n[0] == n[2])) ||
                (n[1] != kFreeEnd && n[1] == n[2]))
                return false;
        }
        return true;
    }

    std::vector<Edge> edges_between(Vertex u, Vertex v) const {
        std::vector<Edge> out;
        for (Dart d : vertex_darts_[u])
            if (across(d) == v && (u != v || (d & 1) == 0)) out.push_back(d >> 1);
        return out;
    }
    Edge edge_between(Vertex u, Vertex v) const {
        for (Dart d : vertex_darts_[u])
            if (across(d) == v) return d >> 1;
        return kNone;
    }
    bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v) != kNone; }

    EdgeSet all_edges() const {
        EdgeSet::check_capacity(edge_count());
        EdgeSet s;
        for (Edge e = 0; e < edge_count(); ++e) s.insert(e);
        return s;
    }

    std::vector<EdgeEnds> edge_list() const {
        std::vector<EdgeEnds> out;
        for (Edge e = 0; e < edge_count(); ++e) out.push_back(ends(e));
        return out;
    }

    friend bool operator==(const CubicGraph&, const CubicGraph&) = default;

  private:
    void count_semiedges() {
        semiedges_ = static_cast<int>(std::count(dart_vertex_.begin(), dart_vertex_.end(), kFreeEnd));
    }

    std::vector<Vertex> dart_vertex_;
    std::vector<std::array<Dart, 3>> vertex_darts_;
    int semiedges_ = 0;
};

struct Connector {
    std::string name;
    std::vector<Dart> semiedges;
    friend bool operator==(const Connector&, const Connector&) = default;
};

// A cubic graph with its free ends distributed into named, pairwise disjoint
// connectors covering every free end.
class Multipole {
  public:
    Multipole() = default;

    // All free ends in one connector named "S" (none when there are no free ends).
    Multipole(CubicGraph g) : graph_(std::move(g)) {  // NOLINT(google-explicit-constructor)
        auto free = graph_.free_darts();
        if (!free.empty()) connectors_.push_back({"S", std::move(free)});
    }

    Multipole(CubicGraph g, std::vector<Connector> connectors)
        : graph_(std::move(g)), connectors_(std::move(connectors)) {
        std::vector<int> seen(graph_.dart_count(), 0);
        int total = 0;
        for (const auto& c : connectors_)
            for (Dart d : c.semiedges) {
                if (d < 0 || d >= graph_.dart_count() || !graph_.is_free(d))
                    throw PreconditionError("connector '" + c.name + "' lists a non-free dart");
                if (seen[d]++) throw PreconditionError("connectors are not disjoint");
                ++total;
            }
        if (total != graph_.semiedge_count())
            throw PreconditionError("connectors do not cover every semiedge");
    }

    const CubicGraph& graph() const { return graph_; }
    const std::vector<Connector>& connectors() const { return connectors_; }
    int semiedge_count() const { return graph_.semiedge_count(); }

    std::vector<Dart> semiedges() const {
        std::vector<Dart> out;
        for (const auto& c : connectors_) out.insert(out.end(), c.semiedges.begin(), c.semiedges.end());
        return out;
    }
    std::vector<int> connector_sizes() const {
        std::vector<int> out;
        for (const auto& c : connectors_) out.push_back(static_cast<int>(c.semiedges.size()));
        return out;
    }
    const Connector& connector(std::string_view name) const {
        for (const auto& c : connectors_)
            if (c.name == name) return c;
        throw PreconditionError("no connector named '" + std::string(name) + "'");
    }

    friend bool operator==(const Multipole&, const Multipole&) = default;

  private:
    CubicGraph graph_;
    std::vector<Connector> connectors_;
};

// Old-to-new id maps produced by structural operations; kNone marks ids that
// did not survive. For binary operations "old" ids index the disjoint union
// (first operand first).
struct Provenance {
    std::vector<Vertex> vertex_map;
    std::vector<Edge> edge_map;
    // Old dart -> new dart, for darts whose edge end survived unchanged.
    std::vector<Dart> dart_map;
};

}  // namespace defectlab
