#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "defectlab/colouring.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/matching.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

struct DefectResult {
    int value = 0;
    ThreeArray witness;
    int lower_bound = 0;
};

namespace detail {

inline void require_defect_input(const CubicGraph& g) {
    if (g.has_semiedges()) throw PreconditionError("defect needs a closed cubic graph");
    if (!is_bridgeless(g)) throw PreconditionError("defect needs a bridgeless cubic graph");
}

inline std::vector<PerfectMatching> matchings_or_throw(const CubicGraph& g) {
    auto pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw PreconditionError("graph has no perfect matching");
    return pms;
}

// Scans triples i <= j <= k of the sorted matching list, keeping the first
// triple that strictly improves the best value below `bound`. Stops as soon
// as `floor` is reached. Pair intersections bound the uncovered count from
// below: |E_0| = |E_2| + 2|E_3| >= |M_i & M_j|.
inline std::optional<std::array<int, 3>> scan_triples(const CubicGraph& g, const std::vector<PerfectMatching>& pms,
                                                      int bound, int floor, bool prune, int& best) {
    const int m = g.edge_count();
    const int p = static_cast<int>(pms.size());
    best = bound;
    std::optional<std::array<int, 3>> witness;
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
            if (prune && (pms[i] & pms[j]).size() >= best) continue;
            EdgeSet pair = pms[i] | pms[j];
            for (int k = j; k < p; ++k) {
                if (prune && ((pms[i] & pms[k]).size() >= best || (pms[j] & pms[k]).size() >= best)) continue;
                int uncovered = m - (pair | pms[k]).size();
                if (uncovered < best) {
                    best = uncovered;
                    witness = std::array<int, 3>{i, j, k};
                    if (prune && best <= floor) return witness;
                }
            }
        }
    return witness;
}

inline int ceil_half(long long x) { return static_cast<int>((x + 1) / 2); }

}  // namespace detail

// Exhaustive minimum over all multisets of three perfect matchings, with no
// bounds or pruning. The witness is the lexicographically least optimal triple.
inline DefectResult brute_force_defect(const CubicGraph& g) {
    detail::require_defect_input(g);
    auto pms = detail::matchings_or_throw(g);
    int best = 0;
    auto w = detail::scan_triples(g, pms, g.edge_count() + 1, -1, false, best);
    DefectResult r;
    r.value = best;
    r.witness = build_array(g, pms[(*w)[0]], pms[(*w)[1]], pms[(*w)[2]]);
    return r;
}

enum class HexagonPattern { a = 0, b = 1 };

struct HexagonWitness {
    Cycle hexagon;
    HexagonPattern pattern = HexagonPattern::a;
    ThreeArray array;
};

namespace detail {

// r_i: the edge at vertices[i] that is not on the cycle.
inline std::array<Edge, 6> hexagon_spokes(const CubicGraph& g, const Cycle& c) {
    std::array<Edge, 6> r{};
    for (int i = 0; i < 6; ++i) {
        Edge prev = c.edges[(i + 5) % 6], next = c.edges[i];
        r[i] = kNone;
        for (Edge e : g.edges_at(c.vertices[i]))
            if (e != prev && e != next) r[i] = e;
        if (r[i] == kNone) throw PreconditionError("hexagon vertex without an outgoing edge");
    }
    return r;
}

// Colours of r_0..r_5. Pattern a pairs (r0 r1)(r2 r3)(r4 r5); pattern b pairs
// (r1 r2)(r3 r4)(r5 r0). Any rotation or reflection of the cyclic sequences
// (1,1,2,2,3,3) and (1,2,2,3,3,1) is one of these up to renaming colours.
inline std::array<Colour, 6> pattern_colours(HexagonPattern p) {
    if (p == HexagonPattern::a) return {1, 1, 2, 2, 3, 3};
    return {1, 2, 2, 3, 3, 1};
}

inline std::optional<ThreeArray> hexagon_array(const CubicGraph& g, const Cycle& c, HexagonPattern p) {
    auto r = hexagon_spokes(g, c);
    auto colours = pattern_colours(p);
    std::vector<char> active(g.vertex_count(), 1);
    for (Vertex v : c.vertices) active[v] = 0;
    std::vector<Colour> fixed(g.edge_count(), 0);
    for (int i = 0; i < 6; ++i) fixed[r[i]] = colours[i];
    auto phi = find_colouring(ColouringView{&g, &active, &fixed});
    if (!phi) return std::nullopt;
    std::array<EdgeSet, 3> m;
    for (Edge e = 0; e < g.edge_count(); ++e)
        if (phi->colour[e]) m[phi->colour[e] - 1].insert(e);
    // A cycle edge whose two spokes share colour x takes the two other colours.
    for (int i = 0; i < 6; ++i) {
        Colour x = colours[i], y = colours[(i + 1) % 6];
        if (x != y) continue;
        for (Colour k = 1; k <= 3; ++k)
            if (k != x) m[k - 1].insert(c.edges[i]);
    }
    return build_array(g, m[0], m[1], m[2]);
}

}  // namespace detail

// df = 3 test for a snark: some induced 6-cycle whose spokes, coloured by one
// of the two patterns, extend to a colouring of G - V(C). The witness array
// has that hexagon as its core.
inline std::optional<HexagonWitness> defect_is_three(const CubicGraph& g) {
    if (g.has_semiedges()) throw PreconditionError("defect needs a closed cubic graph");
    for (const auto& c : induced_cycles(g, 6))
        for (HexagonPattern p : {HexagonPattern::a, HexagonPattern::b})
            if (auto a = detail::hexagon_array(g, c, p)) return HexagonWitness{c, p, std::move(*a)};
    return std::nullopt;
}

// Exact defect. Lower bound: 3 for snarks (4 when no hexagon passes the
// pattern test), ceil(girth/2) and ceil(3 * oddness / 2); the search stops
// as soon as the bound is met. The witness is the lexicographically least
// optimal triple in the sorted matching list.
inline DefectResult defect(const CubicGraph& g) {
    detail::require_defect_input(g);
    auto pms = detail::matchings_or_throw(g);
    int lb = 0;
    int bound = g.edge_count() + 1;
    if (!is_colourable(g)) {
        lb = 3;
        int gi = girth(g);
        if (gi != kInfiniteGirth) lb = std::max(lb, detail::ceil_half(gi));
        lb = std::max(lb, detail::ceil_half(3LL * oddness(g, pms)));
        if (defect_is_three(g)) {
            if (lb > 3) throw ConsistencyError("hexagon witness contradicts a defect lower bound");
            bound = 4;
        } else {
            lb = std::max(lb, 4);
        }
    }
    int best = 0;
    auto w = detail::scan_triples(g, pms, bound, lb, true, best);
    if (!w) throw ConsistencyError("no triple of perfect matchings reached the known upper bound");
    if (best < lb) throw ConsistencyError("defect below its lower bound");
    DefectResult r;
    r.value = best;
    r.lower_bound = lb;
    r.witness = build_array(g, pms[(*w)[0]], pms[(*w)[1]], pms[(*w)[2]]);
    return r;
}

enum class HexagonClass { removable, non_core, single_core, double_core };

inline const char* to_string(HexagonClass k) {
    switch (k) {
        case HexagonClass::removable: return "removable";
        case HexagonClass::non_core: return "non-core";
        case HexagonClass::single_core: return "single-core";
        case HexagonClass::double_core: return "double-core";
    }
    return "?";
}

struct HexagonAnalysis {
    Cycle hexagon;
    HexagonClass kind = HexagonClass::non_core;
    std::array<std::optional<ThreeArray>, 2> arrays;  // per pattern a, b
};

inline HexagonAnalysis classify_hexagon(const CubicGraph& g, const Cycle& c) {
    if (c.length() != 6 || !is_induced_cycle(g, c)) throw PreconditionError("hexagon must be an induced 6-cycle");
    HexagonAnalysis out;
    out.hexagon = c;
    if (!is_colourable_without(g, c.vertices)) {
        out.kind = HexagonClass::removable;
        return out;
    }
    out.arrays[0] = detail::hexagon_array(g, c, HexagonPattern::a);
    out.arrays[1] = detail::hexagon_array(g, c, HexagonPattern::b);
    int hits = out.arrays[0].has_value() + out.arrays[1].has_value();
    out.kind = hits == 2 ? HexagonClass::double_core : hits == 1 ? HexagonClass::single_core : HexagonClass::non_core;
    return out;
}

inline std::vector<HexagonAnalysis> classify_hexagons(const CubicGraph& g) {
    std::vector<HexagonAnalysis> out;
    for (const auto& c : induced_cycles(g, 6)) out.push_back(classify_hexagon(g, c));
    return out;
}

// Hexagons that are the core of some optimal array (df = 3 graphs).
inline std::vector<HexagonAnalysis> core_hexagons(const CubicGraph& g) {
    std::vector<HexagonAnalysis> out;
    for (auto& h : classify_hexagons(g))
        if (h.kind == HexagonClass::single_core || h.kind == HexagonClass::double_core) out.push_back(std::move(h));
    return out;
}

struct MatchingCover {
    std::vector<PerfectMatching> matchings;
    std::vector<int> multiplicity;  // per edge

    bool covers_all() const {
        return std::all_of(multiplicity.begin(), multiplicity.end(), [](int m) { return m >= 1; });
    }
    bool is_berge() const { return matchings.size() == 5 && covers_all(); }
    bool is_fulkerson() const {
        return matchings.size() == 6 &&
               std::all_of(multiplicity.begin(), multiplicity.end(), [](int m) { return m == 2; });
    }
};

inline MatchingCover make_cover(const CubicGraph& g, std::vector<PerfectMatching> matchings) {
    MatchingCover c;
    c.multiplicity.assign(g.edge_count(), 0);
    for (const auto& m : matchings)
        for (Edge e : m.to_vector()) ++c.multiplicity[e];
    c.matchings = std::move(matchings);
    return c;
}

// The two arrays of a double-core hexagon together cover every edge twice.
inline MatchingCover fulkerson_from_double_core(const CubicGraph& g, const Cycle& c) {
    auto h = classify_hexagon(g, c);
    if (h.kind != HexagonClass::double_core) throw PreconditionError("hexagon is not double-core");
    std::vector<PerfectMatching> ms;
    for (const auto& a : h.arrays)
        for (const auto& m : a->members) ms.push_back(m);
    auto cover = make_cover(g, std::move(ms));
    if (!cover.is_fulkerson()) throw ConsistencyError("double-core arrays do not form a Fulkerson cover");
    return cover;
}

}  // namespace defectlab
