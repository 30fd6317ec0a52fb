#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

namespace detail {

// Mutable working copy used to implement the structural operations. Darts of
// the input keep their ids until build(); `current` translates input darts to
// the dart that now carries the same edge-end.
class Soup {
  public:
    explicit Soup(const CubicGraph& g) { append(g); }
    Soup(const CubicGraph& a, const CubicGraph& b) {
        append(a);
        append(b);
    }

    int input_vertex_count() const { return static_cast<int>(slots_.size()); }

    Dart current(Dart input) const { return where_[input]; }

    void delete_vertex(Vertex v) {
        if (!vertex_alive_[v]) return;
        vertex_alive_[v] = 0;
        for (Dart d : slots_[v]) ends_[d] = kFreeEnd;
    }

    void delete_edge(Edge e) {
        edge_alive_[e] = 0;
        for (int side = 0; side < 2; ++side) {
            Dart d = 2 * e + side;
            Vertex v = ends_[d];
            if (v != kFreeEnd) throw PreconditionError("only edges with two free ends can be dropped");
            retire(d);
        }
    }

    // Identify two free ends (given as input dart ids).
    void join(Dart input_a, Dart input_b) {
        Dart a = where_[input_a], b = where_[input_b];
        if (a < 0 || b < 0) throw PreconditionError("junction uses a consumed semiedge");
        if (a == b) throw PreconditionError("junction pairs a semiedge with itself");
        if (ends_[a] != kFreeEnd || ends_[b] != kFreeEnd) throw PreconditionError("junction needs free ends");
        Edge ea = a >> 1, eb = b >> 1;
        if (ea == eb) {
            // Both ends of an isolated edge: the junction deletes the edge.
            retire(a);
            retire(b);
            edge_alive_[ea] = 0;
            return;
        }
        Dart far = b ^ 1;
        Vertex w = ends_[far];
        retire(a);
        retire(b);
        ends_[a] = w;
        if (w != kFreeEnd)
            for (Dart& s : slots_[w])
                if (s == far) s = a;
        for (Dart input : holders_[far]) where_[input] = a;
        holders_[a] = std::move(holders_[far]);
        holders_[far].clear();
        merged_into_[eb] = ea;
        edge_alive_[eb] = 0;
    }

    // Contract the given vertices (assumed to induce a connected subgraph)
    // into the lowest of them. Internal edges disappear.
    void contract(const std::vector<Vertex>& group) {
        if (group.empty()) return;
        std::vector<char> in(slots_.size(), 0);
        for (Vertex v : group) in[v] = 1;
        Vertex keep = *std::min_element(group.begin(), group.end());
        std::vector<Dart> outgoing;
        for (Vertex v : group) {
            for (Dart d : slots_[v]) {
                Vertex w = ends_[d ^ 1];
                if (w != kFreeEnd && in[w]) {
                    edge_alive_[d >> 1] = 0;
                    retire(d);
                } else {
                    outgoing.push_back(d);
                }
            }
        }
        if (outgoing.size() != 3)
            throw NonCubicError("contracted component has " + std::to_string(outgoing.size()) +
                                " outgoing edges");
        for (Vertex v : group)
            if (v != keep) vertex_alive_[v] = 0;
        for (Dart d : outgoing) ends_[d] = keep;
        slots_[keep] = {outgoing[0], outgoing[1], outgoing[2]};
    }

    // Appends a vertex joined to three free ends.
    Vertex attach_vertex(const std::array<Dart, 3>& inputs) {
        Vertex v = static_cast<Vertex>(slots_.size());
        std::array<Dart, 3> cur{};
        for (int i = 0; i < 3; ++i) {
            cur[i] = where_[inputs[i]];
            if (cur[i] < 0 || ends_[cur[i]] != kFreeEnd) throw PreconditionError("attach needs free ends");
        }
        for (Dart d : cur) ends_[d] = v;
        slots_.push_back(cur);
        vertex_alive_.push_back(1);
        return v;
    }

    Edge add_isolated_edge() {
        Edge e = static_cast<Edge>(edge_alive_.size());
        ends_.push_back(kFreeEnd);
        ends_.push_back(kFreeEnd);
        edge_alive_.push_back(1);
        merged_into_.push_back(kNone);
        for (int side = 0; side < 2; ++side) {
            where_.push_back(2 * e + side);
            holders_.push_back({2 * e + side});
        }
        return e;
    }

    CubicGraph build(Provenance* prov = nullptr) const {
        const int nv = static_cast<int>(slots_.size());
        const int ne = static_cast<int>(edge_alive_.size());
        std::vector<Vertex> vmap(nv, kNone);
        int next = 0;
        for (Vertex v = 0; v < nv; ++v)
            if (vertex_alive_[v]) vmap[v] = next++;
        std::vector<Edge> emap(ne, kNone);
        int edges = 0;
        for (Edge e = 0; e < ne; ++e)
            if (edge_alive_[e]) emap[e] = edges++;
        std::vector<Vertex> dart_vertex(2 * edges);
        for (Edge e = 0; e < ne; ++e) {
            if (!edge_alive_[e]) continue;
            for (int side = 0; side < 2; ++side) {
                Vertex v = ends_[2 * e + side];
                dart_vertex[2 * emap[e] + side] = v == kFreeEnd ? kFreeEnd : vmap[v];
            }
        }
        std::vector<std::array<Dart, 3>> vd(next);
        for (Vertex v = 0; v < nv; ++v) {
            if (!vertex_alive_[v]) continue;
            for (int i = 0; i < 3; ++i) {
                Dart d = slots_[v][i];
                vd[vmap[v]][i] = 2 * emap[d >> 1] + (d & 1);
            }
        }
        if (prov) {
            const int inputs_v = input_vertices_;
            prov->vertex_map.assign(vmap.begin(), vmap.begin() + inputs_v);
            prov->edge_map.assign(input_edges_, kNone);
            for (Edge e = 0; e < input_edges_; ++e) {
                Edge r = e;
                while (r != kNone && !edge_alive_[r]) r = merged_into_[r];
                prov->edge_map[e] = r == kNone ? kNone : emap[r];
            }
            prov->dart_map.assign(2 * input_edges_, kNone);
            for (Dart d = 0; d < 2 * input_edges_; ++d) {
                Dart c = where_[d];
                if (c >= 0 && edge_alive_[c >> 1]) prov->dart_map[d] = 2 * emap[c >> 1] + (c & 1);
            }
        }
        return CubicGraph::from_darts(std::move(dart_vertex), std::move(vd));
    }

    // Re-expresses connectors (in input darts) for the built graph.
    static std::vector<Connector> map_connectors(const std::vector<Connector>& in, const Provenance& prov) {
        std::vector<Connector> out;
        for (const auto& c : in) {
            Connector m{c.name, {}};
            for (Dart d : c.semiedges)
                if (prov.dart_map[d] != kNone) m.semiedges.push_back(prov.dart_map[d]);
            if (!m.semiedges.empty()) out.push_back(std::move(m));
        }
        return out;
    }

  private:
    void append(const CubicGraph& g) {
        const int voff = static_cast<int>(slots_.size());
        const int eoff = static_cast<int>(edge_alive_.size());
        for (Edge e = 0; e < g.edge_count(); ++e) {
            for (int side = 0; side < 2; ++side) {
                Vertex v = g.end(e, side);
                ends_.push_back(v == kFreeEnd ? kFreeEnd : v + voff);
                Dart d = 2 * (e + eoff) + side;
                where_.push_back(d);
                holders_.push_back({d});
            }
            edge_alive_.push_back(1);
            merged_into_.push_back(kNone);
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::array<Dart, 3> s{};
            for (int i = 0; i < 3; ++i) s[i] = g.darts(v)[i] + 2 * eoff;
            slots_.push_back(s);
            vertex_alive_.push_back(1);
        }
        input_vertices_ = static_cast<int>(slots_.size());
        input_edges_ = static_cast<int>(edge_alive_.size());
    }

    void retire(Dart d) {
        for (Dart input : holders_[d]) where_[input] = -1;
        holders_[d].clear();
    }

    std::vector<Vertex> ends_;                    // per dart
    std::vector<std::array<Dart, 3>> slots_;      // per vertex
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    std::vector<Edge> merged_into_;
    std::vector<Dart> where_;                     // input dart -> current dart
    std::vector<std::vector<Dart>> holders_;      // current dart -> input darts
    int input_vertices_ = 0;
    int input_edges_ = 0;
};

}  // namespace detail

// Multipole obtained by removing a vertex set. Edges with one end removed keep
// their other end and become dangling; edges inside the set disappear. Free
// ends already present stay in their connectors; the new free ends are grouped
// per removed vertex into connectors named "v<id>", in rotation order.
inline Multipole delete_vertices(const Multipole& m, const std::vector<Vertex>& removed,
                                 Provenance* prov = nullptr) {
    const CubicGraph& g = m.graph();
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
        in[v] = 1;
    }
    detail::Soup soup(g);
    std::vector<Connector> connectors = m.connectors();
    std::vector<Vertex> order(removed.begin(), removed.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (Vertex v : order) {
        Connector c{"v" + std::to_string(v), {}};
        for (Dart d : g.darts(v)) {
            Vertex w = g.across(d);
            // The edge survives when its far end is kept or already free.
            if (w == kFreeEnd || !in[w]) c.semiedges.push_back(d);
        }
        if (!c.semiedges.empty()) connectors.push_back(std::move(c));
    }
    std::vector<Edge> doomed;
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd && b != kFreeEnd && in[a] && in[b]) doomed.push_back(e);
    }
    for (Vertex v : order) soup.delete_vertex(v);
    for (Edge e : doomed) soup.delete_edge(e);
    Provenance local;
    Provenance& p = prov ? *prov : local;
    CubicGraph out = soup.build(&p);
    return Multipole(std::move(out), detail::Soup::map_connectors(connectors, p));
}

inline Multipole delete_vertices(const CubicGraph& g, const std::vector<Vertex>& removed,
                                 Provenance* prov = nullptr) {
    return delete_vertices(Multipole(g), removed, prov);
}

// Junction inside one multipole: each pair of free ends becomes one edge. Joined
// semiedges leave their connectors; emptied connectors disappear.
inline Multipole junction(const Multipole& m, const std::vector<std::pair<Dart, Dart>>& pairs,
                          Provenance* prov = nullptr) {
    const CubicGraph& g = m.graph();
    std::vector<char> used(g.dart_count(), 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= g.dart_count() || b >= g.dart_count() || !g.is_free(a) || !g.is_free(b))
            throw PreconditionError("junction pairs must be semiedges");
        if (a == b || used[a]++ || used[b]++) throw PreconditionError("junction pairing is not a bijection");
    }
    detail::Soup soup(g);
    for (auto [a, b] : pairs) soup.join(a, b);
    Provenance local;
    Provenance& p = prov ? *prov : local;
    CubicGraph out = soup.build(&p);
    return Multipole(std::move(out), detail::Soup::map_connectors(m.connectors(), p));
}

// Disjoint union; vertices, edges and connectors of `b` follow those of `a`.
inline Multipole disjoint_union(const Multipole& a, const Multipole& b) {
    const CubicGraph& ga = a.graph();
    const CubicGraph& gb = b.graph();
    std::vector<EdgeEnds> edges = ga.edge_list();
    for (auto e : gb.edge_list()) {
        if (e.a != kFreeEnd) e.a += ga.vertex_count();
        if (e.b != kFreeEnd) e.b += ga.vertex_count();
        edges.push_back(e);
    }
    std::vector<Vertex> dv;
    for (auto e : edges) {
        dv.push_back(e.a);
        dv.push_back(e.b);
    }
    std::vector<std::array<Dart, 3>> rot;
    for (Vertex v = 0; v < ga.vertex_count(); ++v) rot.push_back(ga.darts(v));
    for (Vertex v = 0; v < gb.vertex_count(); ++v) {
        auto r = gb.darts(v);
        for (Dart& d : r) d += ga.dart_count();
        rot.push_back(r);
    }
    std::vector<Connector> cs = a.connectors();
    for (auto c : b.connectors()) {
        for (Dart& d : c.semiedges) d += ga.dart_count();
        cs.push_back(std::move(c));
    }
    return Multipole(CubicGraph::from_darts(std::move(dv), std::move(rot)), std::move(cs));
}

// Junction of two multipoles: pairs are (dart of m, dart of n).
inline Multipole junction(const Multipole& m, const Multipole& n,
                          const std::vector<std::pair<Dart, Dart>>& pairs, Provenance* prov = nullptr) {
    Multipole u = disjoint_union(m, n);
    std::vector<std::pair<Dart, Dart>> shifted;
    for (auto [a, b] : pairs) shifted.emplace_back(a, b + m.graph().dart_count());
    return junction(u, shifted, prov);
}

// Cuts each listed edge in the middle. Edge e keeps its first end; a new edge
// carries the second. The two halves form one connector per edge, named
// "p<i>" for the i-th listed edge unless names are given.
inline Multipole sever(const Multipole& m, const std::vector<Edge>& edges,
                       const std::vector<std::string>& names = {}) {
    const CubicGraph& g = m.graph();
    std::vector<EdgeEnds> list = g.edge_list();
    std::vector<Vertex> dv;
    for (auto e : list) {
        dv.push_back(e.a);
        dv.push_back(e.b);
    }
    std::vector<std::array<Dart, 3>> rot;
    for (Vertex v = 0; v < g.vertex_count(); ++v) rot.push_back(g.darts(v));
    std::vector<Connector> cs = m.connectors();
    std::vector<char> seen(g.edge_count(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e = edges[i];
        if (e < 0 || e >= g.edge_count() || seen[e]++) throw PreconditionError("bad edge to sever");
        auto [a, b] = g.ends(e);
        if (a == kFreeEnd || b == kFreeEnd) throw PreconditionError("only full edges can be severed");
        Edge ne = static_cast<Edge>(dv.size() / 2);
        dv.push_back(kFreeEnd);
        dv.push_back(b);
        dv[2 * e + 1] = kFreeEnd;
        for (Dart& d : rot[b])
            if (d == 2 * e + 1) {
                d = 2 * ne + 1;
                break;
            }
        std::string name = i < names.size() ? names[i] : "p" + std::to_string(i);
        cs.push_back({name, {2 * e + 1, 2 * ne}});
    }
    return Multipole(CubicGraph::from_darts(std::move(dv), std::move(rot)), std::move(cs));
}

// G/H: every connected component of the subgraph induced by `vertices` becomes
// a single vertex. Each component must have exactly three outgoing edge-ends.
inline CubicGraph contract(const CubicGraph& g, const std::vector<Vertex>& vertices,
                           Provenance* prov = nullptr) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : vertices) in[v] = 1;
    detail::UnionFind uf(g.vertex_count());
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd && b != kFreeEnd && in[a] && in[b]) uf.unite(a, b);
    }
    std::vector<std::vector<Vertex>> groups(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in[v]) groups[uf.find(v)].push_back(v);
    detail::Soup soup(g);
    for (const auto& grp : groups)
        if (grp.size() > 1) soup.contract(grp);
    return soup.build(prov);
}

// G^v: replaces v by a triangle. v keeps its id and its first edge; two new
// vertices (appended) take over the other two edges.
inline CubicGraph inflate_vertex(const CubicGraph& g, Vertex v, Provenance* prov = nullptr) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    const auto& d = g.darts(v);
    for (Dart x : d)
        if (g.is_loop(CubicGraph::dart_edge(x))) throw PreconditionError("cannot inflate a vertex with a loop");
    const int n = g.vertex_count();
    std::vector<EdgeEnds> edges = g.edge_list();
    std::vector<Vertex> dv;
    for (auto e : edges) {
        dv.push_back(e.a);
        dv.push_back(e.b);
    }
    std::vector<std::array<Dart, 3>> rot;
    for (Vertex u = 0; u < n; ++u) rot.push_back(g.darts(u));
    const Vertex t1 = n, t2 = n + 1;
    dv[d[1]] = t1;
    dv[d[2]] = t2;
    const Edge base = g.edge_count();
    // Triangle edges: v-t1, t1-t2, t2-v.
    dv.insert(dv.end(), {v, t1, t1, t2, t2, v});
    rot[v] = {d[0], 2 * base, 2 * (base + 2) + 1};
    rot.push_back({d[1], 2 * base + 1, 2 * (base + 1)});
    rot.push_back({d[2], 2 * (base + 1) + 1, 2 * (base + 2)});
    if (prov) {
        prov->vertex_map.resize(n);
        std::iota(prov->vertex_map.begin(), prov->vertex_map.end(), 0);
        prov->edge_map.resize(g.edge_count());
        std::iota(prov->edge_map.begin(), prov->edge_map.end(), 0);
        prov->dart_map.resize(g.dart_count());
        std::iota(prov->dart_map.begin(), prov->dart_map.end(), 0);
    }
    return CubicGraph::from_darts(std::move(dv), std::move(rot));
}

// Vertices of the triangle created by inflate_vertex(g, v).
inline std::array<Vertex, 3> inflated_triangle(const CubicGraph& g, Vertex v) {
    return {v, g.vertex_count(), g.vertex_count() + 1};
}

// G (+)_2 H: delete e = ab and f = cd, then join a-c and b-d (a-d and b-c when
// `crossed`). Vertices of h follow those of g.
inline CubicGraph two_sum(const CubicGraph& g, Edge e, const CubicGraph& h, Edge f, bool crossed = false) {
    if (g.has_semiedges() || h.has_semiedges()) throw PreconditionError("2-sum needs closed graphs");
    if (g.is_loop(e) || h.is_loop(f)) throw PreconditionError("2-sum of a loop");
    Multipole ge = sever(Multipole(g), {e});
    Multipole hf = sever(Multipole(h), {f});
    const auto& cg = ge.connectors().back().semiedges;
    const auto& ch = hf.connectors().back().semiedges;
    // Severing e = ab leaves a dangling at a (first dart) and b (second).
    std::vector<std::pair<Dart, Dart>> pairs = {{cg[0], ch[crossed ? 1 : 0]}, {cg[1], ch[crossed ? 0 : 1]}};
    return junction(ge, hf, pairs).graph();
}

// G (+)_3 H: remove u and v and join the former neighbours of u (rotation
// order) to those of v; neighbour i of u meets neighbour perm[i] of v, where
// perm is the `wiring`-th permutation of {0,1,2} in lexicographic order.
inline CubicGraph three_sum(const CubicGraph& g, Vertex u, const CubicGraph& h, Vertex v, int wiring = 0) {
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    if (wiring < 0 || wiring > 5) throw PreconditionError("3-sum wiring must be in 0..5");
    if (g.has_semiedges() || h.has_semiedges()) throw PreconditionError("3-sum needs closed graphs");
    for (Dart d : g.darts(u))
        if (g.is_loop(CubicGraph::dart_edge(d))) throw PreconditionError("3-sum at a vertex with a loop");
    for (Dart d : h.darts(v))
        if (h.is_loop(CubicGraph::dart_edge(d))) throw PreconditionError("3-sum at a vertex with a loop");
    Multipole gu = delete_vertices(g, {u});
    Multipole hv = delete_vertices(h, {v});
    const auto& su = gu.connectors().back().semiedges;
    const auto& sv = hv.connectors().back().semiedges;
    if (su.size() != 3 || sv.size() != 3) throw PreconditionError("3-sum needs three distinct edges at u and v");
    std::vector<std::pair<Dart, Dart>> pairs;
    for (int i = 0; i < 3; ++i) pairs.emplace_back(su[i], sv[kPerms[wiring][i]]);
    return junction(gu, hv, pairs).graph();
}

}  // namespace defectlab
