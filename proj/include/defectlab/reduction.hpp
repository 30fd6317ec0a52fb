#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "defectlab/colouring.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

enum class StepKind { two_cut, three_cut, four_cycle_disjoint, four_cycle_meeting, triangle_contraction };

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::two_cut: return "two_cut";
        case StepKind::three_cut: return "three_cut";
        case StepKind::four_cycle_disjoint: return "four_cycle_disjoint";
        case StepKind::four_cycle_meeting: return "four_cycle_meeting";
        case StepKind::triangle_contraction: return "triangle_contraction";
    }
    return "?";
}

struct ReductionStep {
    StepKind kind = StepKind::two_cut;
    std::vector<Edge> edges;  // the cut or the 4-cycle, as edges of `before`
    CubicGraph before;
    CubicGraph after;
    bool core_inherited = false;
};

// Returned by reduce_three_cut when the distinguished side is an essential triangle.
struct EssentialTriangle {
    std::array<Vertex, 3> triangle{};
};

enum class NormalStatus { nontrivial_defect3, essential_triangle_form };

inline const char* to_string(NormalStatus s) {
    return s == NormalStatus::nontrivial_defect3 ? "nontrivial_defect3" : "essential_triangle_form";
}

struct NormalForm {
    CubicGraph graph;
    NormalStatus status = NormalStatus::nontrivial_defect3;
    std::optional<std::array<Vertex, 3>> essential_triangle;
    std::vector<ReductionStep> trace;
};

struct NormalizeOptions {
    // Re-verify df = 3 after every step with the exhaustive triple scan
    // instead of the hexagon test.
    bool brute_force_check = false;
};

namespace detail {

inline bool defect_three_fast(const CubicGraph& g) { return !is_colourable(g) && defect_is_three(g).has_value(); }

inline void require_defect_three(const CubicGraph& g) {
    if (!is_bridgeless(g)) throw PreconditionError("reduction needs a bridgeless graph");
    if (!defect_three_fast(g)) throw PreconditionError("reduction needs a snark with defect 3");
}

inline void verify_defect_three(const CubicGraph& g, const NormalizeOptions& opt, const char* what) {
    bool ok;
    if (opt.brute_force_check) {
        ok = is_bridgeless(g) && brute_force_defect(g).value == 3 && !is_colourable(g);
    } else {
        ok = defect_three_fast(g);
        if (!ok && is_bridgeless(g) && !is_colourable(g)) ok = defect(g).value == 3;
    }
    if (!ok) throw ConsistencyError(std::string("defect is not 3 after ") + what);
}

inline std::vector<char> vertex_mask(int n, const std::vector<Vertex>& vs) {
    std::vector<char> m(n, 0);
    for (Vertex v : vs) m[v] = 1;
    return m;
}

inline bool cycle_uses_edge(const Cycle& c, Edge e) {
    return std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
}

// Maps a cycle through a vertex map; empty when a vertex vanished or the
// image is not a cycle of the same length.
inline std::optional<Cycle> map_cycle(const CubicGraph& h, const Cycle& c, const std::vector<Vertex>& vmap) {
    Cycle out;
    for (Vertex v : c.vertices) {
        if (v >= static_cast<Vertex>(vmap.size()) || vmap[v] == kNone) return std::nullopt;
        out.vertices.push_back(vmap[v]);
    }
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        Edge e = h.edge_between(out.vertices[i], out.vertices[(i + 1) % out.vertices.size()]);
        if (e == kNone) return std::nullopt;
        out.edges.push_back(e);
    }
    return out;
}

inline std::vector<Vertex> compose(const std::vector<Vertex>& first, const std::vector<Vertex>& second) {
    std::vector<Vertex> out(first.size(), kNone);
    for (std::size_t i = 0; i < first.size(); ++i)
        if (first[i] != kNone) out[i] = second[first[i]];
    return out;
}

inline bool is_core_hexagon_of(const CubicGraph& h, const Cycle& c) {
    if (c.length() != 6 || !is_induced_cycle(h, c)) return false;
    auto k = classify_hexagon(h, c).kind;
    return k == HexagonClass::single_core || k == HexagonClass::double_core;
}

inline bool shares_vertex(const Cycle& a, const Cycle& b) {
    for (Vertex v : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) return true;
    return false;
}

inline std::vector<Edge> common_edges(const Cycle& a, const Cycle& b) {
    std::vector<Edge> out;
    for (Edge e : a.edges)
        if (cycle_uses_edge(b, e)) out.push_back(e);
    return out;
}

}  // namespace detail

// Invariant checks on the hexagonal cores of a df-3 snark:
//  - a core meeting a triangle meets it in one uncovered edge;
//  - a core meets at most one triangle;
//  - a core meeting a quadrilateral meets it in one uncovered edge, the two
//    other core edges leaving the quadrilateral are doubly covered and the
//    remaining two leaving edges are simply covered.
// Throws ConsistencyError on the first violation.
inline void check_core_invariants(const CubicGraph& g, const std::vector<HexagonAnalysis>& cores) {
    auto triangles = cycles_of_length(g, 3, false);
    auto quads = cycles_of_length(g, 4, false);
    for (const auto& h : cores) {
        int met = 0;
        for (const auto& t : triangles) {
            if (!detail::shares_vertex(h.hexagon, t)) continue;
            ++met;
            auto common = detail::common_edges(h.hexagon, t);
            if (common.size() != 1) throw ConsistencyError("core meets a triangle in more than one edge");
            for (const auto& a : h.arrays)
                if (a && !a->uncovered.contains(common[0]))
                    throw ConsistencyError("core edge shared with a triangle is not uncovered");
        }
        if (met > 1) throw ConsistencyError("hexagonal core meets two triangles");
        for (const auto& d : quads) {
            if (!detail::shares_vertex(h.hexagon, d)) continue;
            auto common = detail::common_edges(h.hexagon, d);
            if (common.size() != 1) throw ConsistencyError("core meets a quadrilateral in more than one edge");
            auto leaving = edge_boundary(g, d.vertices);
            if (leaving.size() != 4) continue;
            for (const auto& a : h.arrays) {
                if (!a) continue;
                if (!a->uncovered.contains(common[0]))
                    throw ConsistencyError("core edge shared with a quadrilateral is not uncovered");
                int doubly = 0, simply = 0;
                for (Edge e : leaving) {
                    if (a->doubly.contains(e) && detail::cycle_uses_edge(h.hexagon, e)) ++doubly;
                    if (a->simply.contains(e) && !detail::cycle_uses_edge(h.hexagon, e)) ++simply;
                }
                if (doubly != 2 || simply != 2)
                    throw ConsistencyError("quadrilateral met by a core has the wrong edge weights around it");
            }
        }
    }
}

// Triangles whose contraction raises the defect above 3; at most one exists.
inline std::vector<std::array<Vertex, 3>> essential_triangles(const CubicGraph& g) {
    detail::require_defect_three(g);
    std::vector<std::array<Vertex, 3>> out;
    for (const auto& t : cycles_of_length(g, 3, false)) {
        CubicGraph q = contract(g, t.vertices);
        if (!defect_is_three(q)) out.push_back({t.vertices[0], t.vertices[1], t.vertices[2]});
    }
    if (out.size() > 1) throw ConsistencyError("more than one essential triangle");
    return out;
}

// All 2-edge-cuts, by smaller side, then by edge ids.
inline std::vector<EdgeCut> two_edge_cuts(const CubicGraph& g) {
    std::vector<EdgeCut> out;
    for (Edge e = 0; e < g.edge_count(); ++e)
        for (Edge f = e + 1; f < g.edge_count(); ++f)
            if (auto cut = split_by_cut(g, {e, f})) out.push_back(std::move(*cut));
    std::stable_sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
        return std::min(a.side_a.size(), a.side_b.size()) < std::min(b.side_a.size(), b.side_b.size());
    });
    return out;
}

// Keeps the side holding a hexagonal core and closes its two dangling edges
// into one edge.
inline ReductionStep reduce_two_cut(const CubicGraph& g, const std::vector<Edge>& cut) {
    if (cut.size() != 2) throw PreconditionError("2-cut reduction needs two edges");
    auto split = split_by_cut(g, cut);
    if (!split) throw PreconditionError("edges do not form a cut");
    detail::require_defect_three(g);
    auto cores = core_hexagons(g);
    for (const auto& h : cores)
        for (Edge e : cut)
            if (detail::cycle_uses_edge(h.hexagon, e)) throw ConsistencyError("hexagonal core meets a 2-cut");
    if (cores.empty()) throw ConsistencyError("df-3 snark without a hexagonal core");
    const Cycle& core = cores.front().hexagon;
    auto in_a = detail::vertex_mask(g.vertex_count(), split->side_a);
    const auto& drop = in_a[core.vertices[0]] ? split->side_b : split->side_a;
    Provenance p1, p2;
    Multipole m = delete_vertices(g, drop, &p1);
    auto free = m.semiedges();
    if (free.size() != 2) throw ConsistencyError("2-cut side does not leave two dangling edges");
    CubicGraph out = junction(m, {{free[0], free[1]}}, &p2).graph();
    ReductionStep step{StepKind::two_cut, cut, g, out, false};
    auto mapped = detail::map_cycle(out, core, detail::compose(p1.vertex_map, p2.vertex_map));
    step.core_inherited = mapped && detail::is_core_hexagon_of(out, *mapped);
    if (!step.core_inherited) throw ConsistencyError("hexagonal core not inherited across a 2-cut");
    return step;
}

inline std::variant<ReductionStep, EssentialTriangle> reduce_three_cut(const CubicGraph& g,
                                                                       const std::vector<Edge>& cut) {
    if (cut.size() != 3) throw PreconditionError("3-cut reduction needs three edges");
    auto split = split_by_cut(g, cut);
    if (!split) throw PreconditionError("edges do not form a cut");
    if (!is_cycle_separating(g, cut)) throw PreconditionError("3-cut is not cycle-separating");
    detail::require_defect_three(g);
    const int n = g.vertex_count();
    auto in_a = detail::vertex_mask(n, split->side_a);
    auto cores = core_hexagons(g);
    if (cores.empty()) throw ConsistencyError("df-3 snark without a hexagonal core");

    // Case 1: a core avoiding the cut; contract the other side.
    for (const auto& h : cores) {
        bool avoids = std::none_of(cut.begin(), cut.end(), [&](Edge e) { return detail::cycle_uses_edge(h.hexagon, e); });
        if (!avoids) continue;
        const auto& other = in_a[h.hexagon.vertices[0]] ? split->side_b : split->side_a;
        Provenance p;
        CubicGraph out = contract(g, other, &p);
        ReductionStep step{StepKind::three_cut, cut, g, out, false};
        auto mapped = detail::map_cycle(out, h.hexagon, p.vertex_map);
        step.core_inherited = mapped && detail::is_core_hexagon_of(out, *mapped);
        if (!step.core_inherited) throw ConsistencyError("hexagonal core not inherited across a 3-cut");
        if (!detail::defect_three_fast(out)) throw ConsistencyError("3-cut reduction lost defect 3");
        return step;
    }

    // Case 2: every core crosses the cut. The side Q holding exactly one core
    // edge e1 = v1 v2 is colourable.
    const Cycle& c = cores.front().hexagon;
    std::vector<int> on_cut;
    for (int i = 0; i < 6; ++i)
        if (std::find(cut.begin(), cut.end(), c.edges[i]) != cut.end()) on_cut.push_back(i);
    if (on_cut.size() != 2) throw ConsistencyError("core crosses a 3-cut in other than two edges");
    int i1 = -1;
    for (int k = 0; k < 6; ++k) {
        int prev = (k + 5) % 6, next = (k + 1) % 6;
        bool prev_cut = std::find(on_cut.begin(), on_cut.end(), prev) != on_cut.end();
        bool next_cut = std::find(on_cut.begin(), on_cut.end(), next) != on_cut.end();
        if (prev_cut && next_cut) i1 = k;
    }
    if (i1 < 0) throw ConsistencyError("core edges on a 3-cut are not at distance two");
    const Vertex v1 = c.vertices[i1], v2 = c.vertices[(i1 + 1) % 6];
    const auto& q = in_a[v1] ? split->side_a : split->side_b;
    for (const auto& a : cores.front().arrays)
        if (a && !a->uncovered.contains(c.edges[i1])) throw ConsistencyError("core edge inside Q is not uncovered");

    if (q.size() == 3) {
        CubicGraph out = contract(g, q);
        if (!defect_is_three(out)) return EssentialTriangle{{q[0], q[1], q[2]}};
        return ReductionStep{StepKind::triangle_contraction, cut, g, out, false};
    }
    std::vector<Vertex> k_prime;
    for (Vertex v : q)
        if (v != v1 && v != v2) k_prime.push_back(v);
    // K' must be one side of the shifted cut {f1, f2, r3}.
    auto shifted = edge_boundary(g, k_prime);
    if (shifted.size() != 3 || !split_by_cut(g, shifted)) throw ConsistencyError("shifted 3-cut is not a cut");
    Provenance p;
    CubicGraph out = contract(g, k_prime, &p);
    ReductionStep step{StepKind::three_cut, shifted, g, out, false};
    auto mapped = detail::map_cycle(out, c, p.vertex_map);
    step.core_inherited = mapped && detail::is_core_hexagon_of(out, *mapped);
    if (!step.core_inherited) throw ConsistencyError("hexagonal core not inherited across the shifted 3-cut");
    if (!detail::defect_three_fast(out)) throw ConsistencyError("shifted 3-cut reduction lost defect 3");
    return step;
}

namespace detail {

inline void require_reducible_quad(const CubicGraph& g, const Cycle& d) {
    if (d.length() != 4 || !is_induced_cycle(g, d)) throw PreconditionError("not an induced 4-cycle");
    auto leaving = edge_boundary(g, d.vertices);
    std::vector<Vertex> outside;
    for (Edge e : leaving)
        for (int s = 0; s < 2; ++s) {
            Vertex v = g.end(e, s);
            if (std::find(d.vertices.begin(), d.vertices.end(), v) == d.vertices.end()) outside.push_back(v);
        }
    std::sort(outside.begin(), outside.end());
    if (leaving.size() != 4 || std::adjacent_find(outside.begin(), outside.end()) != outside.end())
        throw PreconditionError("edges leaving the 4-cycle are not independent");
    detail::require_defect_three(g);
}

inline ReductionStep four_cycle_step(const CubicGraph& g, const Cycle& d, const std::vector<HexagonAnalysis>& cores) {
    auto leaving = edge_boundary(g, d.vertices);

    // The edge leaving each quadrilateral vertex.
    auto spoke = [&](Vertex v) {
        for (Edge e : g.edges_at(v))
            if (std::find(leaving.begin(), leaving.end(), e) != leaving.end()) return e;
        throw ConsistencyError("quadrilateral vertex without a leaving edge");
    };

    for (const auto& h : cores) {
        if (detail::shares_vertex(h.hexagon, d)) continue;
        const ThreeArray& a = h.arrays[0] ? *h.arrays[0] : *h.arrays[1];
        std::array<int, 4> colour{};
        std::array<Dart, 4> ends{};
        for (int i = 0; i < 4; ++i) {
            Edge r = spoke(d.vertices[i]);
            if (a.weight[r] != 1) throw ConsistencyError("edge leaving a core-free quadrilateral is not simply covered");
            colour[i] = a.colours[r];
            for (Dart x : g.darts(d.vertices[i]))
                if (CubicGraph::dart_edge(x) == r) ends[i] = x;
        }
        static constexpr std::array<std::array<int, 4>, 3> kPairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& pr : kPairings) {
            if (colour[pr[0]] != colour[pr[1]] || colour[pr[2]] != colour[pr[3]]) continue;
            Provenance p1, p2;
            Multipole m = delete_vertices(g, d.vertices, &p1);
            std::vector<std::pair<Dart, Dart>> pairs = {{p1.dart_map[ends[pr[0]]], p1.dart_map[ends[pr[1]]]},
                                                         {p1.dart_map[ends[pr[2]]], p1.dart_map[ends[pr[3]]]}};
            CubicGraph out = junction(m, pairs, &p2).graph();
            ReductionStep step{StepKind::four_cycle_disjoint, d.edges, g, out, false};
            auto mapped = detail::map_cycle(out, h.hexagon, detail::compose(p1.vertex_map, p2.vertex_map));
            step.core_inherited = mapped && detail::is_core_hexagon_of(out, *mapped);
            if (!step.core_inherited) throw ConsistencyError("hexagonal core not inherited across a 4-cycle");
            return step;
        }
        throw ConsistencyError("edges leaving a quadrilateral do not pair into equal colours");
    }

    // Every core meets d in a single uncovered edge e1 = v1 v2; the other two
    // quadrilateral vertices u1 ~ v1 and u2 ~ v2 are removed and their dangling
    // edges rejoined crosswise.
    const Cycle& c = cores.front().hexagon;
    auto common = detail::common_edges(c, d);
    if (common.size() != 1) throw ConsistencyError("core meets a quadrilateral in more than one edge");
    int pos = static_cast<int>(std::find(d.edges.begin(), d.edges.end(), common[0]) - d.edges.begin());
    const Vertex v1 = d.vertices[pos], v2 = d.vertices[(pos + 1) % 4];
    const Vertex u2 = d.vertices[(pos + 2) % 4], u1 = d.vertices[(pos + 3) % 4];
    auto dart_at = [&](Vertex v, Edge e) {
        for (Dart x : g.darts(v))
            if (CubicGraph::dart_edge(x) == e) return x;
        throw ConsistencyError("edge not at vertex");
    };
    Edge f1 = g.edge_between(v1, u1), f2 = g.edge_between(v2, u2);
    Edge r3 = spoke(u1), r4 = spoke(u2);
    // Dangling ends after deleting u1 and u2 are the darts that sat at them.
    Dart f1_end = dart_at(u1, f1), f2_end = dart_at(u2, f2);
    Dart r3_end = dart_at(u1, r3), r4_end = dart_at(u2, r4);
    Provenance p1, p2;
    Multipole m = delete_vertices(g, {u1, u2}, &p1);
    std::vector<std::pair<Dart, Dart>> pairs = {{p1.dart_map[f1_end], p1.dart_map[r4_end]},
                                                 {p1.dart_map[f2_end], p1.dart_map[r3_end]}};
    CubicGraph out = junction(m, pairs, &p2).graph();
    ReductionStep step{StepKind::four_cycle_meeting, d.edges, g, out, false};
    auto mapped = detail::map_cycle(out, c, detail::compose(p1.vertex_map, p2.vertex_map));
    step.core_inherited = mapped && detail::is_core_hexagon_of(out, *mapped);
    if (!step.core_inherited) throw ConsistencyError("hexagonal core not inherited across a met 4-cycle");
    return step;
}

}  // namespace detail

// Quadrilateral reduction. Requires d induced with four independent leaving
// edges. A core hexagon avoiding d is preferred; otherwise the reduction
// follows a core meeting d.
inline ReductionStep reduce_four_cycle(const CubicGraph& g, const Cycle& d) {
    detail::require_reducible_quad(g, d);
    auto cores = core_hexagons(g);
    if (cores.empty()) throw ConsistencyError("df-3 snark without a hexagonal core");
    check_core_invariants(g, cores);
    return detail::four_cycle_step(g, d, cores);
}

// The same reduction carried out along the given core hexagon.
inline ReductionStep reduce_four_cycle(const CubicGraph& g, const Cycle& d, const Cycle& core) {
    detail::require_reducible_quad(g, d);
    if (core.length() != 6 || !is_induced_cycle(g, core)) throw PreconditionError("core must be an induced 6-cycle");
    auto h = classify_hexagon(g, core);
    if (h.kind != HexagonClass::single_core && h.kind != HexagonClass::double_core)
        throw PreconditionError("hexagon is not the core of an optimal array");
    std::vector<HexagonAnalysis> cores = {h};
    check_core_invariants(g, cores);
    return detail::four_cycle_step(g, d, cores);
}

namespace detail {

inline bool leaving_edges_independent(const CubicGraph& g, const Cycle& d) {
    auto leaving = edge_boundary(g, d.vertices);
    if (leaving.size() != 4) return false;
    std::vector<Vertex> outside;
    for (Edge e : leaving)
        for (int s = 0; s < 2; ++s) {
            Vertex v = g.end(e, s);
            if (std::find(d.vertices.begin(), d.vertices.end(), v) == d.vertices.end()) outside.push_back(v);
        }
    std::sort(outside.begin(), outside.end());
    return std::adjacent_find(outside.begin(), outside.end()) == outside.end();
}

inline bool is_nontrivial(const CubicGraph& g) {
    int gi = girth(g);
    return gi >= 5 && gi != kInfiniteGirth && is_cyclically_k_edge_connected(g, 4);
}

}  // namespace detail

// Reduces a df-3 snark to a nontrivial df-3 snark, or to a graph whose only
// obstruction is an essential triangle. Order of attempts: 2-cuts, then
// cycle-separating 3-cuts, then 4-cycles, smallest side first.
inline NormalForm normalize(const CubicGraph& input, const NormalizeOptions& opt = {}) {
    detail::require_defect_three(input);
    NormalForm nf;
    CubicGraph g = input;
    auto core_checks = [&](const CubicGraph& h) {
        auto cores = core_hexagons(h);
        if (cores.empty()) throw ConsistencyError("df-3 snark without a hexagonal core");
        check_core_invariants(h, cores);
    };
    auto record = [&](ReductionStep step) {
        if (step.after.vertex_count() >= step.before.vertex_count())
            throw ConsistencyError("reduction step did not decrease the order");
        detail::verify_defect_three(step.after, opt, to_string(step.kind));
        g = step.after;
        nf.trace.push_back(std::move(step));
    };
    core_checks(g);
    std::optional<std::array<Vertex, 3>> obstruction;
    while (true) {
        obstruction.reset();
        auto twos = two_edge_cuts(g);
        if (!twos.empty()) {
            record(reduce_two_cut(g, twos.front().edges));
            core_checks(g);
            continue;
        }
        bool reduced = false;
        if (detail::has_two_disjoint_circuits(g)) {
            for (const auto& cut : cycle_separating_cuts(g, 3)) {
                auto r = reduce_three_cut(g, cut.edges);
                if (auto* step = std::get_if<ReductionStep>(&r)) {
                    record(std::move(*step));
                    reduced = true;
                    break;
                }
                obstruction = std::get<EssentialTriangle>(r).triangle;
            }
        }
        if (reduced) {
            core_checks(g);
            continue;
        }
        for (const auto& d : induced_cycles(g, 4)) {
            if (!detail::leaving_edges_independent(g, d)) continue;
            record(reduce_four_cycle(g, d));
            reduced = true;
            break;
        }
        if (reduced) {
            core_checks(g);
            continue;
        }
        break;
    }
    nf.graph = g;
    if (detail::is_nontrivial(g)) {
        nf.status = NormalStatus::nontrivial_defect3;
        return nf;
    }
    if (!obstruction) throw ConsistencyError("reduction stalled on a trivial snark without an essential triangle");
    auto ess = essential_triangles(g);
    auto sorted = *obstruction;
    std::sort(sorted.begin(), sorted.end());
    if (ess.size() != 1) throw ConsistencyError("obstructing triangle is not the unique essential triangle");
    auto found = ess.front();
    std::sort(found.begin(), found.end());
    if (found != sorted) throw ConsistencyError("obstructing triangle is not the unique essential triangle");
    CubicGraph k = contract(g, std::vector<Vertex>(sorted.begin(), sorted.end()));
    if (!detail::is_nontrivial(k)) throw ConsistencyError("contracted essential triangle is not nontrivial");
    if (is_colourable(k) || defect_is_three(k)) throw ConsistencyError("contracted essential triangle has defect 3");
    nf.status = NormalStatus::essential_triangle_form;
    nf.essential_triangle = *obstruction;
    return nf;
}

// One line per step: kind, edges, orders.
inline std::string format_trace(const NormalForm& nf) {
    std::ostringstream out;
    for (std::size_t i = 0; i < nf.trace.size(); ++i) {
        const auto& s = nf.trace[i];
        out << "step " << i + 1 << ' ' << to_string(s.kind) << " edges=";
        for (std::size_t j = 0; j < s.edges.size(); ++j) out << (j ? "," : "") << s.edges[j];
        out << " order " << s.before.vertex_count() << "->" << s.after.vertex_count()
            << " core_inherited=" << (s.core_inherited ? "yes" : "no") << '\n';
    }
    out << "result " << to_string(nf.status) << " order " << nf.graph.vertex_count();
    if (nf.essential_triangle) {
        const auto& t = *nf.essential_triangle;
        out << " triangle=" << t[0] << ',' << t[1] << ',' << t[2];
    }
    out << '\n';
    return out.str();
}

}  // namespace defectlab
