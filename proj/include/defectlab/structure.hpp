#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"

namespace defectlab {

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct Cycle {
    std::vector<Vertex> vertices;
    // edges[i] joins vertices[i] and vertices[(i + 1) % length].
    std::vector<Edge> edges;
    int length() const { return static_cast<int>(edges.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct EdgeCut {
    std::vector<Edge> edges;
    std::vector<Vertex> side_a;  // holds the lowest vertex
    std::vector<Vertex> side_b;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

struct ComponentInfo {
    std::vector<int> label;         // per vertex, dense 0..count-1 by lowest vertex
    std::vector<int> vertices;      // per component
    std::vector<int> edges;         // per component, closed edges only
    int count = 0;
};

// Components of g after deleting the edges flagged in `removed`.
inline ComponentInfo components_without(const CubicGraph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (Edge e = 0; e < g.edge_count(); ++e) {
        if (!removed.empty() && removed[e]) continue;
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd && b != kFreeEnd) uf.unite(a, b);
    }
    ComponentInfo info;
    info.label.assign(n, -1);
    std::vector<int> root_label(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (root_label[r] < 0) {
            root_label[r] = info.count++;
            info.vertices.push_back(0);
            info.edges.push_back(0);
        }
        info.label[v] = root_label[r];
        ++info.vertices[info.label[v]];
    }
    for (Edge e = 0; e < g.edge_count(); ++e) {
        if (!removed.empty() && removed[e]) continue;
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd && b != kFreeEnd) ++info.edges[info.label[a]];
    }
    return info;
}

inline int cyclic_component_count(const ComponentInfo& info) {
    int c = 0;
    for (int i = 0; i < info.count; ++i)
        if (info.edges[i] >= info.vertices[i]) ++c;
    return c;
}

// Calls f(subset) for each k-subset of {0..m-1} in lexicographic order until f returns true.
template <class F>
bool for_each_subset(int m, int k, F&& f) {
    if (k > m) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (f(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

inline std::vector<int> connected_components(const CubicGraph& g) {
    return detail::components_without(g, {}).label;
}

inline bool is_connected(const CubicGraph& g) {
    return g.vertex_count() == 0 || detail::components_without(g, {}).count == 1;
}

inline std::vector<Edge> bridges(const CubicGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    struct Frame {
        Vertex v;
        Edge via;
        int next;
    };
    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> stack{{s, kNone, 0}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < 3) {
                Dart d = g.darts(f.v)[f.next++];
                Edge e = CubicGraph::dart_edge(d);
                Vertex w = g.across(d);
                if (w == kFreeEnd || e == f.via) continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Vertex p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) out.push_back(done.via);
                }
            }
        }
    }
    // Dangling edges separate their vertex from nothing; they are not reported.
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_bridgeless(const CubicGraph& g) { return bridges(g).empty(); }

// For cubic graphs 2-connectivity coincides with being connected and bridgeless.
inline bool is_two_connected(const CubicGraph& g) {
    return g.vertex_count() >= 2 && !g.has_semiedges() && is_connected(g) && is_bridgeless(g);
}

inline int girth(const CubicGraph& g) {
    const int n = g.vertex_count();
    int best = kInfiniteGirth;
    for (Edge e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return 1;
    std::vector<int> dist(n), parent_edge(n);
    for (Vertex r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent_edge[r] = kNone;
        std::queue<Vertex> q;
        q.push(r);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (2 * dist[x] + 1 >= best) break;
            for (Dart d : g.darts(x)) {
                Vertex y = g.across(d);
                Edge e = CubicGraph::dart_edge(d);
                if (y == kFreeEnd || e == parent_edge[x]) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = e;
                    q.push(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best;
}

inline std::vector<Edge> edge_boundary(const CubicGraph& g, const std::vector<char>& in_set) {
    std::vector<Edge> out;
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        bool ia = a != kFreeEnd && in_set[a];
        bool ib = b != kFreeEnd && in_set[b];
        if (ia != ib) out.push_back(e);
    }
    return out;
}

inline std::vector<Edge> edge_boundary(const CubicGraph& g, const std::vector<Vertex>& vertices) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (Vertex v : vertices) mask[v] = 1;
    return edge_boundary(g, mask);
}

// Circuits of exactly `length` edges (length >= 3), each listed once: it starts
// at its lowest vertex and the second vertex is lower than the last one.
// Sorted by vertex sequence, then edge sequence.
inline std::vector<Cycle> cycles_of_length(const CubicGraph& g, int length, bool induced_only) {
    if (length < 3) throw PreconditionError("cycle length must be at least 3");
    const int n = g.vertex_count();
    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<Edge> path_edges;
    std::vector<char> on_path(n, 0);
    auto is_induced = [&](const Cycle& c) {
        const int L = c.length();
        std::vector<int> pos(n, -1);
        for (int i = 0; i < L; ++i) pos[c.vertices[i]] = i;
        for (int i = 0; i < L; ++i) {
            Vertex v = c.vertices[i];
            for (Dart d : g.darts(v)) {
                Vertex w = g.across(d);
                if (w == kFreeEnd || pos[w] < 0) continue;
                Edge e = CubicGraph::dart_edge(d);
                if (e != c.edges[i] && e != c.edges[(i + L - 1) % L]) return false;
            }
        }
        return true;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        path_edges.clear();
        on_path[s] = 1;
        auto extend = [&](auto&& self) -> void {
            Vertex x = path.back();
            const int depth = static_cast<int>(path.size());
            for (Dart d : g.darts(x)) {
                Vertex y = g.across(d);
                Edge e = CubicGraph::dart_edge(d);
                if (y == kFreeEnd || g.is_loop(e)) continue;
                if (!path_edges.empty() && e == path_edges.back()) continue;
                if (depth == length) {
                    if (y == s && path[1] < x) {
                        Cycle c{path, path_edges};
                        c.edges.push_back(e);
                        if (!induced_only || is_induced(c)) out.push_back(std::move(c));
                    }
                    continue;
                }
                if (y <= s || on_path[y]) continue;
                on_path[y] = 1;
                path.push_back(y);
                path_edges.push_back(e);
                self(self);
                path.pop_back();
                path_edges.pop_back();
                on_path[y] = 0;
            }
        };
        extend(extend);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.edges < b.edges;
    });
    return out;
}

inline std::vector<Cycle> induced_cycles(const CubicGraph& g, int length) {
    if (length < 3 || length > 9) throw PreconditionError("induced_cycles supports lengths 3..9");
    return cycles_of_length(g, length, true);
}

inline bool is_induced_cycle(const CubicGraph& g, const Cycle& c) {
    for (const auto& other : cycles_of_length(g, c.length(), true))
        if (other.edges.size() == c.edges.size()) {
            auto a = other.edges, b = c.edges;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b) return true;
        }
    return false;
}

// Splits g along `edges` when their removal leaves exactly two components
// and every listed edge runs between them.
inline std::optional<EdgeCut> split_by_cut(const CubicGraph& g, const std::vector<Edge>& edges) {
    std::vector<char> removed(g.edge_count(), 0);
    for (Edge e : edges) {
        if (e < 0 || e >= g.edge_count()) return std::nullopt;
        removed[e] = 1;
    }
    auto info = detail::components_without(g, removed);
    if (info.count != 2) return std::nullopt;
    for (Edge e : edges) {
        auto [a, b] = g.ends(e);
        if (a == kFreeEnd || b == kFreeEnd || info.label[a] == info.label[b]) return std::nullopt;
    }
    EdgeCut cut;
    cut.edges = edges;
    std::sort(cut.edges.begin(), cut.edges.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) (info.label[v] == 0 ? cut.side_a : cut.side_b).push_back(v);
    return cut;
}

inline bool is_cycle_separating(const CubicGraph& g, const std::vector<Edge>& edges) {
    std::vector<char> removed(g.edge_count(), 0);
    for (Edge e : edges) removed[e] = 1;
    return detail::cyclic_component_count(detail::components_without(g, removed)) >= 2;
}

namespace detail {

// Whether g has two vertex-disjoint circuits. Two disjoint circuits exist iff
// some induced circuit C leaves a circuit in g - V(C).
inline bool has_two_disjoint_circuits(const CubicGraph& g) {
    auto complement_cyclic = [&](const std::vector<Vertex>& vs) {
        std::vector<char> removed(g.edge_count(), 0);
        std::vector<char> in(g.vertex_count(), 0);
        for (Vertex v : vs) in[v] = 1;
        for (Edge e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.ends(e);
            if ((a != kFreeEnd && in[a]) || (b != kFreeEnd && in[b])) removed[e] = 1;
        }
        auto info = components_without(g, removed);
        for (int i = 0; i < info.count; ++i) {
            // Components made of removed vertices are singletons without edges.
            if (info.edges[i] >= info.vertices[i] && info.edges[i] > 0) return true;
        }
        return false;
    };
    for (Edge e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e) && complement_cyclic({g.end(e, 0)})) return true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Dart d : g.darts(v)) {
            Vertex w = g.across(d);
            if (w != kFreeEnd && w > v && g.edges_between(v, w).size() >= 2 && complement_cyclic({v, w}))
                return true;
        }
    for (int len = 3; len <= g.vertex_count(); ++len)
        for (const auto& c : cycles_of_length(g, len, true))
            if (complement_cyclic(c.vertices)) return true;
    return false;
}

}  // namespace detail

struct CyclicConnectivity {
    int value = 0;           // meaningful unless above_cap
    bool above_cap = false;
    std::vector<Edge> witness;
};

// Smallest cycle-separating edge cut, searched exhaustively up to `cap` edges.
// The boundary of a shortest circuit bounds the answer from above whenever the
// rest of the graph still has a circuit, which keeps the search short.
inline CyclicConnectivity cyclic_edge_connectivity(const CubicGraph& g, int cap = 7) {
    if (g.has_semiedges()) throw PreconditionError("cyclic connectivity needs a closed graph");
    if (!is_connected(g)) throw PreconditionError("cyclic connectivity needs a connected graph");
    if (cap < 0 || cap > 8) throw PreconditionError("cap must be in 0..8");
    const int m = g.edge_count();

    int upper = kInfiniteGirth;
    std::vector<Edge> upper_witness;
    int gi = girth(g);
    if (gi >= 3 && gi != kInfiniteGirth) {
        for (const auto& c : cycles_of_length(g, gi, false)) {
            auto cut = edge_boundary(g, c.vertices);
            if (is_cycle_separating(g, cut)) {
                upper = static_cast<int>(cut.size());
                upper_witness = cut;
                break;
            }
        }
    }

    std::vector<char> removed(m, 0);
    const int limit = std::min(cap, upper - 1);
    for (int k = 1; k <= limit; ++k) {
        std::vector<Edge> found;
        detail::for_each_subset(m, k, [&](const std::vector<int>& idx) {
            for (int e : idx) removed[e] = 1;
            bool sep = detail::cyclic_component_count(detail::components_without(g, removed)) >= 2;
            for (int e : idx) removed[e] = 0;
            if (sep) found.assign(idx.begin(), idx.end());
            return sep;
        });
        if (!found.empty()) return {k, false, found};
    }
    if (upper <= cap) return {upper, false, upper_witness};
    if (upper != kInfiniteGirth) return {0, true, {}};
    if (!detail::has_two_disjoint_circuits(g)) throw NoCycleSeparatingCut();
    return {0, true, {}};
}

// True when g has no cycle-separating cut with fewer than k edges.
inline bool is_cyclically_k_edge_connected(const CubicGraph& g, int k) {
    if (k <= 1) return true;
    try {
        auto cc = cyclic_edge_connectivity(g, k - 1);
        return cc.above_cap;
    } catch (const NoCycleSeparatingCut&) {
        return true;
    }
}

// All cuts of exactly k edges whose removal leaves two components that both
// contain a circuit. Ordered by the size of the smaller side, then by edges.
inline std::vector<EdgeCut> cycle_separating_cuts(const CubicGraph& g, int k) {
    std::vector<EdgeCut> out;
    const int m = g.edge_count();
    detail::for_each_subset(m, k, [&](const std::vector<int>& idx) {
        auto cut = split_by_cut(g, idx);
        if (!cut) return false;
        std::vector<char> removed(m, 0);
        for (int e : idx) removed[e] = 1;
        auto info = detail::components_without(g, removed);
        if (detail::cyclic_component_count(info) == 2) out.push_back(std::move(*cut));
        return false;
    });
    std::stable_sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
        auto sa = std::min(a.side_a.size(), a.side_b.size());
        auto sb = std::min(b.side_a.size(), b.side_b.size());
        return sa < sb;
    });
    return out;
}

inline bool is_nontrivial_candidate(const CubicGraph& g) {
    return girth(g) >= 5 && is_cyclically_k_edge_connected(g, 4);
}

}  // namespace defectlab
