#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "defectlab/colouring.hpp"
#include "defectlab/edge_set.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

using PerfectMatching = EdgeSet;

namespace detail {

inline bool vector_less(const EdgeSet& a, const EdgeSet& b) {
    auto x = a.to_vector(), y = b.to_vector();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace detail

// Edge sets covering every vertex exactly once. Dangling edges may be used
// (their free end needs no cover); loops and isolated edges never are.
// Sorted by the ascending list of edge ids.
inline std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g) {
    EdgeSet::check_capacity(g.edge_count());
    const int n = g.vertex_count();
    std::vector<PerfectMatching> out;
    std::vector<char> covered(n, 0);
    EdgeSet current;
    auto rec = [&](auto&& self, Vertex from) -> void {
        Vertex v = from;
        while (v < n && covered[v]) ++v;
        if (v == n) {
            out.push_back(current);
            return;
        }
        covered[v] = 1;
        for (Dart d : g.darts(v)) {
            Edge e = CubicGraph::dart_edge(d);
            if (g.is_loop(e)) continue;
            Vertex w = g.across(d);
            if (w != kFreeEnd && covered[w]) continue;
            if (w != kFreeEnd) covered[w] = 1;
            current.insert(e);
            self(self, v + 1);
            current.erase(e);
            if (w != kFreeEnd) covered[w] = 0;
        }
        covered[v] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), detail::vector_less);
    // Parallel edges give distinct matchings; duplicates cannot arise.
    return out;
}

inline bool is_perfect_matching(const CubicGraph& g, const EdgeSet& m) {
    std::vector<int> hits(g.vertex_count(), 0);
    for (Edge e : m.to_vector()) {
        if (e >= g.edge_count() || g.is_loop(e)) return false;
        auto [a, b] = g.ends(e);
        if (a == kFreeEnd && b == kFreeEnd) return false;
        if (a != kFreeEnd) ++hits[a];
        if (b != kFreeEnd) ++hits[b];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

struct ThreeArray {
    std::array<PerfectMatching, 3> members;
    std::vector<int> weight;             // per edge, 0..3
    std::vector<std::uint8_t> colours;   // per edge, bit i set when the edge is in members[i]
    EdgeSet uncovered, simply, doubly, triply;

    int uncovered_count() const { return uncovered.size(); }
    // Colour list of an edge: indices 1..3 of the members containing it.
    std::vector<int> colour_list(Edge e) const {
        std::vector<int> out;
        for (int i = 0; i < 3; ++i)
            if (colours[e] >> i & 1) out.push_back(i + 1);
        return out;
    }
    EdgeSet core_edges() const { return uncovered | doubly | triply; }
};

inline ThreeArray build_array(const CubicGraph& g, const PerfectMatching& m1, const PerfectMatching& m2,
                              const PerfectMatching& m3) {
    ThreeArray a;
    a.members = {m1, m2, m3};
    for (const auto& m : a.members)
        if (!is_perfect_matching(g, m)) throw PreconditionError("array member is not a perfect matching");
    const int edges = g.edge_count();
    a.weight.assign(edges, 0);
    a.colours.assign(edges, 0);
    for (Edge e = 0; e < edges; ++e) {
        for (int i = 0; i < 3; ++i)
            if (a.members[i].contains(e)) {
                ++a.weight[e];
                a.colours[e] |= static_cast<std::uint8_t>(1U << i);
            }
        switch (a.weight[e]) {
            case 0: a.uncovered.insert(e); break;
            case 1: a.simply.insert(e); break;
            case 2: a.doubly.insert(e); break;
            default: a.triply.insert(e); break;
        }
    }
    return a;
}

// Array from a per-edge label (bit i = member i).
inline ThreeArray array_from_labels(const CubicGraph& g, const std::vector<std::uint8_t>& labels) {
    std::array<EdgeSet, 3> m;
    for (Edge e = 0; e < g.edge_count(); ++e)
        for (int i = 0; i < 3; ++i)
            if (labels[e] >> i & 1) m[i].insert(e);
    return build_array(g, m[0], m[1], m[2]);
}

// Values in Z_2^3 encoded as 3-bit integers; bit i is 0 exactly when the edge
// lies in member i + 1.
struct FanoColouring {
    std::vector<std::uint8_t> flow;
    bool nowhere_zero = true;
};

inline FanoColouring characteristic_flow(const ThreeArray& a) {
    FanoColouring f;
    f.flow.resize(a.colours.size());
    for (std::size_t e = 0; e < a.colours.size(); ++e) {
        f.flow[e] = static_cast<std::uint8_t>(~a.colours[e] & 7U);
        if (f.flow[e] == 0) f.nowhere_zero = false;
    }
    return f;
}

// The four lines of the Fano plane that can occur around a vertex, as sorted
// point triples.
inline const std::array<std::array<std::uint8_t, 3>, 4>& f4_lines() {
    static const std::array<std::array<std::uint8_t, 3>, 4> lines = {{
        {0b011, 0b101, 0b110},
        {0b001, 0b110, 0b111},
        {0b010, 0b101, 0b111},
        {0b011, 0b100, 0b111},
    }};
    return lines;
}

// Kirchhoff's law at every vertex, and (for nowhere-zero flows) every vertex
// sees one of the four F_4 lines.
inline bool flow_is_valid(const CubicGraph& g, const FanoColouring& f) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto es = g.edges_at(v);
        std::array<std::uint8_t, 3> vals = {f.flow[es[0]], f.flow[es[1]], f.flow[es[2]]};
        if ((vals[0] ^ vals[1] ^ vals[2]) != 0) return false;
        if (!f.nowhere_zero) continue;
        std::sort(vals.begin(), vals.end());
        const auto& lines = f4_lines();
        if (std::find(lines.begin(), lines.end(), vals) == lines.end()) return false;
    }
    return true;
}

struct CoreComponent {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    bool circuit = false;      // every vertex has core degree 2
    bool alternating = false;  // circuit alternating uncovered and doubly covered edges
};

struct CoreSubgraph {
    EdgeSet edges;
    std::vector<CoreComponent> components;
    bool regular = true;  // no triply covered edge
};

inline CoreSubgraph core_of(const CubicGraph& g, const ThreeArray& a) {
    CoreSubgraph c;
    c.edges = a.core_edges();
    c.regular = a.triply.empty();
    const int n = g.vertex_count();
    std::vector<int> degree(n, 0);
    detail::UnionFind uf(n);
    for (Edge e : c.edges.to_vector()) {
        auto [x, y] = g.ends(e);
        if (x != kFreeEnd) ++degree[x];
        if (y != kFreeEnd) ++degree[y];
        if (x != kFreeEnd && y != kFreeEnd) uf.unite(x, y);
    }
    std::vector<int> index(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!degree[v]) continue;
        int r = uf.find(v);
        if (index[r] < 0) {
            index[r] = static_cast<int>(c.components.size());
            c.components.emplace_back();
        }
        c.components[index[r]].vertices.push_back(v);
    }
    for (Edge e : c.edges.to_vector()) {
        auto [x, y] = g.ends(e);
        Vertex anchor = x != kFreeEnd ? x : y;
        if (anchor == kFreeEnd) continue;
        c.components[index[uf.find(anchor)]].edges.push_back(e);
    }
    for (auto& comp : c.components) {
        comp.circuit = std::all_of(comp.vertices.begin(), comp.vertices.end(),
                                   [&](Vertex v) { return degree[v] == 2; }) &&
                       comp.edges.size() == comp.vertices.size();
        if (!comp.circuit) continue;
        comp.alternating = std::all_of(comp.vertices.begin(), comp.vertices.end(), [&](Vertex v) {
            int zero = 0, two = 0;
            for (Edge e : g.edges_at(v)) {
                if (a.uncovered.contains(e)) ++zero;
                if (a.doubly.contains(e)) ++two;
            }
            return zero == 1 && two == 1;
        });
    }
    return c;
}

// Minimum number of odd circuits over the 2-factors complementary to the
// given perfect matchings.
inline int oddness(const CubicGraph& g, const std::vector<PerfectMatching>& pms) {
    if (g.has_semiedges()) throw PreconditionError("oddness needs a closed graph");
    if (pms.empty()) throw PreconditionError("graph has no perfect matching");
    int best = g.vertex_count() + 1;
    for (const auto& m : pms) {
        detail::UnionFind uf(g.vertex_count());
        for (Edge e = 0; e < g.edge_count(); ++e)
            if (!m.contains(e)) uf.unite(g.end(e, 0), g.end(e, 1));
        std::vector<int> size(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) ++size[uf.find(v)];
        int odd = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (uf.find(v) == v && size[v] % 2) ++odd;
        best = std::min(best, odd);
    }
    return best;
}

inline int oddness(const CubicGraph& g) { return oddness(g, enumerate_perfect_matchings(g)); }

namespace detail {

// Search over per-edge labels (subsets of {1,2,3}) that partition {1,2,3} at
// every vertex; such labellings are exactly the 3-arrays. Edges outside
// `flexible` must carry a single colour. Minimises the number of empty labels
// when `minimise` is set, otherwise stops at the first labelling.
class LabelSearch {
  public:
    LabelSearch(const CubicGraph& g, const EdgeSet& flexible) : g_(g), flexible_(flexible) {
        if (g.has_semiedges()) throw PreconditionError("label search needs a closed graph");
        const int n = g.vertex_count();
        std::vector<char> seen_v(n, 0), seen_e(g.edge_count(), 0);
        // Start from rigid territory so single-colour forcing prunes early.
        std::vector<Vertex> starts;
        for (Vertex v = 0; v < n; ++v)
            for (Edge e : g.edges_at(v))
                if (!flexible.contains(e)) {
                    starts.push_back(v);
                    break;
                }
        for (Vertex v = 0; v < n; ++v) starts.push_back(v);
        for (Vertex s : starts) {
            if (seen_v[s]) continue;
            std::vector<Vertex> queue{s};
            seen_v[s] = 1;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (Dart d : g.darts(queue[i])) {
                    Edge e = CubicGraph::dart_edge(d);
                    if (!seen_e[e]) {
                        seen_e[e] = 1;
                        order_.push_back(e);
                    }
                    Vertex w = g.across(d);
                    if (!seen_v[w]) {
                        seen_v[w] = 1;
                        queue.push_back(w);
                    }
                }
        }
        used_.assign(n, 0);
        assigned_.assign(n, 0);
        label_.assign(g.edge_count(), 0);
    }

    std::optional<std::vector<std::uint8_t>> first() {
        minimise_ = false;
        best_ = 1 << 30;
        found_.reset();
        dfs(0, 0);
        return found_;
    }

    std::optional<std::pair<int, std::vector<std::uint8_t>>> minimum(int upper = 1 << 30) {
        minimise_ = true;
        best_ = upper;
        found_.reset();
        dfs(0, 0);
        if (!found_) return std::nullopt;
        return std::make_pair(best_, *found_);
    }

  private:
    bool allowed(Edge e, std::uint8_t label) const {
        auto [a, b] = g_.ends(e);
        if (g_.is_loop(e)) return false;
        if (!flexible_.contains(e) && label != 1 && label != 2 && label != 4) return false;
        for (Vertex v : {a, b}) {
            if (used_[v] & label) return false;
            // The last edge at a vertex must complete the partition.
            if (assigned_[v] == 2 && (used_[v] | label) != 7) return false;
        }
        return true;
    }

    void dfs(std::size_t pos, int empties) {
        if (!minimise_ && found_) return;
        if (empties >= best_) return;
        if (pos == order_.size()) {
            found_ = label_;
            best_ = minimise_ ? empties : 0;
            return;
        }
        Edge e = order_[pos];
        auto [a, b] = g_.ends(e);
        for (std::uint8_t label : {1, 2, 4, 3, 5, 6, 7, 0}) {
            if (!allowed(e, label)) continue;
            label_[e] = label;
            used_[a] |= label;
            used_[b] |= label;
            ++assigned_[a];
            ++assigned_[b];
            dfs(pos + 1, empties + (label == 0));
            --assigned_[a];
            --assigned_[b];
            used_[a] &= static_cast<std::uint8_t>(~label);
            used_[b] &= static_cast<std::uint8_t>(~label);
            label_[e] = 0;
            if (!minimise_ && found_) return;
        }
    }

    const CubicGraph& g_;
    EdgeSet flexible_;
    std::vector<Edge> order_;
    std::vector<std::uint8_t> used_;
    std::vector<int> assigned_;
    std::vector<std::uint8_t> label_;
    bool minimise_ = false;
    int best_ = 0;
    std::optional<std::vector<std::uint8_t>> found_;
};

}  // namespace detail

// Some 3-array whose core (uncovered, doubly and triply covered edges) lies
// inside `region`, if one exists.
inline std::optional<ThreeArray> array_with_core_within(const CubicGraph& g, const EdgeSet& region) {
    detail::LabelSearch s(g, region);
    auto labels = s.first();
    if (!labels) return std::nullopt;
    return array_from_labels(g, *labels);
}

}  // namespace defectlab
