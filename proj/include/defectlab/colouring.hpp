#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

// Colours 1, 2, 3 are the nonzero elements of Z2 x Z2, so the third colour at a
// vertex is the XOR of the other two and Kirchhoff's law reads a ^ b ^ c == 0.
using Colour = std::uint8_t;

struct EdgeColouring {
    std::vector<Colour> colour;  // per edge; 0 for edges outside the coloured part
};

// Fixed colours on free ends, keyed by dart.
using BoundaryCondition = std::map<Dart, Colour>;

// A cubic graph restricted to active vertices, with some edge colours fixed.
// Edges whose two ends are both inactive vertices are ignored; all other edges
// must be coloured.
struct ColouringView {
    const CubicGraph* graph = nullptr;
    const std::vector<char>* active = nullptr;  // per vertex; null = all active
    const std::vector<Colour>* fixed = nullptr; // per edge; 0 = free; null = none
};

namespace detail {

class ColourSearch {
  public:
    explicit ColourSearch(const ColouringView& view) : g_(*view.graph) {
        const int n = g_.vertex_count();
        const int m = g_.edge_count();
        active_.assign(n, 1);
        if (view.active) active_ = *view.active;
        colour_.assign(m, 0);
        present_.assign(m, 0);
        for (Edge e = 0; e < m; ++e) {
            auto [a, b] = g_.ends(e);
            bool gone = a != kFreeEnd && b != kFreeEnd && !active_[a] && !active_[b];
            present_[e] = !gone;
        }
        if (view.fixed)
            for (Edge e = 0; e < m; ++e)
                if (present_[e] && (*view.fixed)[e]) {
                    Colour c = (*view.fixed)[e];
                    if (c < 1 || c > 3) throw PreconditionError("colours are 1, 2, 3");
                    fixed_.emplace_back(e, c);
                }
        for (Vertex v = 0; v < n; ++v) {
            if (!active_[v]) continue;
            for (Dart d : g_.darts(v))
                if (g_.is_loop(CubicGraph::dart_edge(d))) impossible_ = true;
        }
        // Static order: breadth-first over active vertices, so every new edge
        // touches already-coloured territory and forcing kicks in early.
        std::vector<char> seen_v(n, 0), seen_e(m, 0);
        for (Vertex s = 0; s < n; ++s) {
            if (!active_[s] || seen_v[s]) continue;
            std::vector<Vertex> queue{s};
            seen_v[s] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                Vertex x = queue[qi];
                for (Dart d : g_.darts(x)) {
                    Edge e = CubicGraph::dart_edge(d);
                    if (!seen_e[e]) {
                        seen_e[e] = 1;
                        order_.push_back(e);
                    }
                    Vertex y = g_.across(d);
                    if (y != kFreeEnd && active_[y] && !seen_v[y]) {
                        seen_v[y] = 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        // Present edges with no active end are isolated: free choice each.
        for (Edge e = 0; e < m; ++e)
            if (present_[e] && !seen_e[e]) loose_.push_back(e);
    }

    // Enumerates colourings; `visit` returns false to stop. Returns the number visited.
    std::uint64_t enumerate(const std::function<bool(const std::vector<Colour>&)>& visit) {
        if (impossible_) return 0;
        visits_ = 0;
        stop_ = false;
        visit_ = &visit;
        trail_.clear();
        for (auto [e, c] : fixed_)
            if (!assign(e, c)) return 0;
        dfs(0);
        return visits_;
    }

    // Number of colourings, using colour-permutation symmetry when nothing is fixed.
    std::uint64_t count() {
        if (impossible_) return 0;
        std::uint64_t loose_factor = 1;
        for (Edge e : loose_) loose_factor *= is_fixed(e) ? 1 : 3;
        auto anchor = symmetry_anchor();
        counting_only_ = true;
        std::uint64_t total = 0;
        std::function<bool(const std::vector<Colour>&)> tally = [&](const std::vector<Colour>&) {
            ++total;
            return true;
        };
        if (anchor) {
            visits_ = 0;
            stop_ = false;
            visit_ = &tally;
            trail_.clear();
            const auto& d = g_.darts(*anchor);
            if (assign(CubicGraph::dart_edge(d[0]), 1) && assign(CubicGraph::dart_edge(d[1]), 2)) dfs(0);
            counting_only_ = false;
            return total * 6 * loose_factor;
        }
        enumerate(tally);
        counting_only_ = false;
        return total * loose_factor;
    }

    std::optional<std::vector<Colour>> first() {
        if (impossible_) return std::nullopt;
        std::optional<std::vector<Colour>> out;
        std::function<bool(const std::vector<Colour>&)> grab = [&](const std::vector<Colour>& c) {
            out = c;
            return false;
        };
        auto anchor = symmetry_anchor();
        if (anchor) {
            visits_ = 0;
            stop_ = false;
            visit_ = &grab;
            trail_.clear();
            const auto& d = g_.darts(*anchor);
            if (assign(CubicGraph::dart_edge(d[0]), 1) && assign(CubicGraph::dart_edge(d[1]), 2)) dfs(0);
        } else {
            enumerate(grab);
        }
        return out;
    }

  private:
    bool is_fixed(Edge e) const {
        for (auto [f, c] : fixed_)
            if (f == e) return true;
        return false;
    }

    // An active vertex with three distinct edges, usable to break the S3 symmetry.
    std::optional<Vertex> symmetry_anchor() const {
        if (!fixed_.empty()) return std::nullopt;
        for (Edge e : order_) {
            for (int side = 0; side < 2; ++side) {
                Vertex v = g_.end(e, side);
                if (v == kFreeEnd || !active_[v]) continue;
                auto es = g_.edges_at(v);
                if (es[0] != es[1] && es[1] != es[2] && es[0] != es[2]) return v;
            }
            break;
        }
        return std::nullopt;
    }

    bool assign(Edge e, Colour c) {
        std::vector<std::pair<Edge, Colour>> pending{{e, c}};
        while (!pending.empty()) {
            auto [x, col] = pending.back();
            pending.pop_back();
            if (colour_[x]) {
                if (colour_[x] != col) return false;
                continue;
            }
            colour_[x] = col;
            trail_.push_back(x);
            for (int side = 0; side < 2; ++side) {
                Vertex v = g_.end(x, side);
                if (v == kFreeEnd || !active_[v]) continue;
                auto es = g_.edges_at(v);
                Colour c0 = colour_[es[0]], c1 = colour_[es[1]], c2 = colour_[es[2]];
                if ((c0 && c0 == c1) || (c0 && c0 == c2) || (c1 && c1 == c2)) return false;
                int set = (c0 != 0) + (c1 != 0) + (c2 != 0);
                if (set == 2) {
                    Colour forced = static_cast<Colour>(c0 ^ c1 ^ c2);
                    Edge target = !c0 ? es[0] : (!c1 ? es[1] : es[2]);
                    pending.emplace_back(target, forced);
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            colour_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    void dfs(std::size_t pos) {
        while (pos < order_.size() && colour_[order_[pos]]) ++pos;
        if (pos == order_.size()) {
            leaf();
            return;
        }
        Edge e = order_[pos];
        for (Colour c = 1; c <= 3 && !stop_; ++c) {
            std::size_t mark = trail_.size();
            if (assign(e, c)) dfs(pos + 1);
            undo(mark);
        }
    }

    void leaf() {
        ++visits_;
        if (counting_only_) {
            (*visit_)(colour_);
            return;
        }
        // Loose (isolated) edges are expanded explicitly when enumerating.
        expand_loose(0);
    }

    void expand_loose(std::size_t i) {
        if (stop_) return;
        if (i == loose_.size()) {
            if (!(*visit_)(colour_)) stop_ = true;
            return;
        }
        Edge e = loose_[i];
        if (colour_[e]) {
            expand_loose(i + 1);
            return;
        }
        for (Colour c = 1; c <= 3 && !stop_; ++c) {
            colour_[e] = c;
            expand_loose(i + 1);
        }
        colour_[e] = 0;
    }

    const CubicGraph& g_;
    std::vector<char> active_;
    std::vector<char> present_;
    std::vector<Colour> colour_;
    std::vector<std::pair<Edge, Colour>> fixed_;
    std::vector<Edge> order_;
    std::vector<Edge> loose_;
    std::vector<Edge> trail_;
    const std::function<bool(const std::vector<Colour>&)>* visit_ = nullptr;
    std::uint64_t visits_ = 0;
    bool stop_ = false;
    bool impossible_ = false;
    bool counting_only_ = false;
};

inline std::vector<Colour> fixed_from_boundary(const CubicGraph& g, const BoundaryCondition& bc, bool& clash) {
    std::vector<Colour> fixed(g.edge_count(), 0);
    clash = false;
    for (auto [d, c] : bc) {
        if (d < 0 || d >= g.dart_count() || !g.is_free(d))
            throw PreconditionError("boundary condition on a dart that is not a free end");
        if (c < 1 || c > 3) throw PreconditionError("colours are 1, 2, 3");
        Edge e = CubicGraph::dart_edge(d);
        if (fixed[e] && fixed[e] != c) clash = true;
        fixed[e] = c;
    }
    return fixed;
}

// Parity Lemma: with all k free ends fixed, the XOR of their colours must vanish.
inline bool parity_feasible(const CubicGraph& g, const BoundaryCondition& bc) {
    if (static_cast<int>(bc.size()) != g.semiedge_count()) return true;
    Colour sum = 0;
    for (auto [d, c] : bc) sum ^= c;
    return sum == 0;
}

}  // namespace detail

inline std::uint64_t count_colourings(const ColouringView& view) {
    detail::ColourSearch s(view);
    return s.count();
}

inline std::optional<EdgeColouring> find_colouring(const ColouringView& view) {
    detail::ColourSearch s(view);
    auto c = s.first();
    if (!c) return std::nullopt;
    return EdgeColouring{*c};
}

inline bool is_colourable(const ColouringView& view) { return find_colouring(view).has_value(); }

inline void for_each_colouring(const ColouringView& view,
                               const std::function<bool(const std::vector<Colour>&)>& visit) {
    detail::ColourSearch s(view);
    s.enumerate(visit);
}

inline std::uint64_t count_colourings(const Multipole& m, const BoundaryCondition& bc = {}) {
    const CubicGraph& g = m.graph();
    if (!detail::parity_feasible(g, bc)) return 0;
    bool clash = false;
    auto fixed = detail::fixed_from_boundary(g, bc, clash);
    if (clash) return 0;
    return count_colourings(ColouringView{&g, nullptr, &fixed});
}

inline std::optional<EdgeColouring> find_colouring(const Multipole& m, const BoundaryCondition& bc = {}) {
    const CubicGraph& g = m.graph();
    if (!detail::parity_feasible(g, bc)) return std::nullopt;
    bool clash = false;
    auto fixed = detail::fixed_from_boundary(g, bc, clash);
    if (clash) return std::nullopt;
    return find_colouring(ColouringView{&g, nullptr, &fixed});
}

inline bool is_colourable(const Multipole& m, const BoundaryCondition& bc = {}) {
    return find_colouring(m, bc).has_value();
}

inline std::uint64_t count_colourings(const CubicGraph& g) { return count_colourings(ColouringView{&g}); }
inline bool is_colourable(const CubicGraph& g) { return is_colourable(ColouringView{&g}); }
inline std::optional<EdgeColouring> find_colouring(const CubicGraph& g) {
    return find_colouring(ColouringView{&g});
}

// Whether g - S is colourable, evaluated without building g - S.
inline bool is_colourable_without(const CubicGraph& g, const std::vector<Vertex>& removed) {
    std::vector<char> active(g.vertex_count(), 1);
    for (Vertex v : removed) active[v] = 0;
    return is_colourable(ColouringView{&g, &active});
}

inline bool is_valid_colouring(const CubicGraph& g, const std::vector<Colour>& colour) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto es = g.edges_at(v);
        Colour a = colour[es[0]], b = colour[es[1]], c = colour[es[2]];
        if (!a || !b || !c || a == b || b == c || a == c) return false;
    }
    return true;
}

// G~e: delete e = uv and suppress u and v. Equivalently, remove u and v and join
// the two dangling edges left at each of them. Existing connectors are kept.
inline Multipole smooth_edge(const Multipole& m, Edge e) {
    const CubicGraph& g = m.graph();
    auto [u, v] = g.ends(e);
    if (u == kFreeEnd || v == kFreeEnd) throw PreconditionError("cannot smooth an edge with a free end");
    if (u == v) throw PreconditionError("cannot smooth a loop");
    if (g.edges_between(u, v).size() != 1) throw PreconditionError("smoothing needs e without parallel edges");
    Multipole cut = delete_vertices(m, {u, v});
    std::vector<std::pair<Dart, Dart>> pairs;
    for (const auto& name : {"v" + std::to_string(u), "v" + std::to_string(v)}) {
        const auto& c = cut.connector(name);
        if (c.semiedges.size() != 2) throw PreconditionError("smoothing needs e without parallel edges");
        pairs.emplace_back(c.semiedges[0], c.semiedges[1]);
    }
    return junction(cut, pairs);
}

inline CubicGraph smooth_edge(const CubicGraph& g, Edge e) {
    if (g.has_semiedges()) throw PreconditionError("smoothing needs a closed graph");
    return smooth_edge(Multipole(g), e).graph();
}

inline std::uint64_t smoothing_colouring_count(const CubicGraph& g, Edge e) {
    return count_colourings(smooth_edge(g, e));
}

// Kaszonyi value: colourings of G~e divided by 18. The division is exact for
// snarks; a remainder is reported as a consistency failure.
inline std::uint64_t kaszonyi(const CubicGraph& g, Edge e) {
    std::uint64_t count = smoothing_colouring_count(g, e);
    if (count % 18 != 0)
        throw ConsistencyError("colourings of G~e (" + std::to_string(count) + ") not divisible by 18");
    return count / 18;
}

// H is removable in the snark g when g - V(H) is uncolourable.
inline bool is_removable(const CubicGraph& g, const std::vector<Vertex>& vertices) {
    if (is_colourable(g)) throw PreconditionError("removability is defined for snarks only");
    return !is_colourable_without(g, vertices);
}

struct SnarkClass {
    bool colourable = false;
    bool snark = false;
    bool critical = false;
    bool bicritical = false;
    bool irreducible = false;  // same as bicritical
};

inline SnarkClass classify_snark(const CubicGraph& g) {
    if (!is_two_connected(g)) throw PreconditionError("snark classification needs a 2-connected cubic graph");
    SnarkClass out;
    if (is_colourable(g)) {
        out.colourable = true;
        return out;
    }
    out.snark = true;
    const int n = g.vertex_count();
    std::vector<char> active(n, 1);
    auto pair_removable = [&](Vertex a, Vertex b) {
        active[a] = active[b] = 0;
        bool colourable = is_colourable(ColouringView{&g, &active});
        active[a] = active[b] = 1;
        return !colourable;
    };
    out.critical = true;
    for (Edge e = 0; e < g.edge_count() && out.critical; ++e) {
        auto [a, b] = g.ends(e);
        if (a != b && pair_removable(a, b)) out.critical = false;
    }
    out.bicritical = out.critical;
    for (Vertex a = 0; a < n && out.bicritical; ++a)
        for (Vertex b = a + 1; b < n && out.bicritical; ++b)
            if (!g.adjacent(a, b) && pair_removable(a, b)) out.bicritical = false;
    out.irreducible = out.bicritical;
    return out;
}

enum class FourPoleKind { uncolourable, isochromatic, heterochromatic };

struct FourPoleClass {
    FourPoleKind kind = FourPoleKind::uncolourable;
    // For isochromatic poles: positions (in Multipole::semiedges() order) of the
    // two forced-equal pairs; the first pairing that works is reported.
    std::array<std::pair<int, int>, 2> pairing{};
    std::vector<std::array<Colour, 4>> boundary_patterns;  // distinct, sorted
};

inline FourPoleClass classify_4pole(const Multipole& m) {
    const CubicGraph& g = m.graph();
    auto semis = m.semiedges();
    if (semis.size() != 4) throw PreconditionError("classify_4pole needs exactly four semiedges");
    std::vector<std::array<Colour, 4>> patterns;
    for_each_colouring(ColouringView{&g}, [&](const std::vector<Colour>& c) {
        std::array<Colour, 4> p{};
        for (int i = 0; i < 4; ++i) p[i] = c[CubicGraph::dart_edge(semis[i])];
        patterns.push_back(p);
        return true;
    });
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    FourPoleClass out;
    out.boundary_patterns = patterns;
    if (patterns.empty()) return out;
    static constexpr std::array<std::array<std::pair<int, int>, 2>, 3> kPairings = {
        {{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};
    for (const auto& pairing : kPairings) {
        bool ok = true;
        for (const auto& p : patterns)
            if (p[pairing[0].first] != p[pairing[0].second] || p[pairing[1].first] != p[pairing[1].second]) {
                ok = false;
                break;
            }
        if (ok) {
            out.kind = FourPoleKind::isochromatic;
            out.pairing = pairing;
            return out;
        }
    }
    out.kind = FourPoleKind::heterochromatic;
    return out;
}

}  // namespace defectlab
