#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "defectlab/colouring.hpp"
#include "defectlab/deadline.hpp"
#include "defectlab/defect.hpp"
#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"
#include "defectlab/matching.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"

namespace defectlab {

struct MatchingIndex {
    int value = 0;  // meaningful unless above_cap
    bool above_cap = false;
    MatchingCover cover;  // a minimum cover when value is known
};

namespace detail {

class SetCoverSearch {
  public:
    SetCoverSearch(const CubicGraph& g, const std::vector<PerfectMatching>& pms, Deadline* deadline)
        : pms_(pms), deadline_(deadline) {
        const int m = g.edge_count();
        holders_.assign(m, {});
        for (int i = 0; i < static_cast<int>(pms.size()); ++i) {
            for (Edge e : pms[i].to_vector()) holders_[e].push_back(i);
            max_size_ = std::max(max_size_, pms[i].size());
        }
        for (Edge e = 0; e < m; ++e) order_.push_back(e);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Edge a, Edge b) { return holders_[a].size() < holders_[b].size(); });
        all_ = g.all_edges();
    }

    bool every_edge_coverable() const {
        return std::none_of(holders_.begin(), holders_.end(), [](const auto& h) { return h.empty(); });
    }

    std::optional<std::vector<int>> cover_with(int k) {
        chosen_.clear();
        k_ = k;
        if (rec(EdgeSet{})) return chosen_;
        return std::nullopt;
    }

  private:
    bool rec(const EdgeSet& covered) {
        if (deadline_) deadline_->check();
        const int missing = all_.size() - covered.size();
        if (missing == 0) return true;
        const int left = k_ - static_cast<int>(chosen_.size());
        if (left == 0 || missing > left * max_size_) return false;
        Edge pick = kNone;
        for (Edge e : order_)
            if (!covered.contains(e)) {
                pick = e;
                break;
            }
        for (int i : holders_[pick]) {
            chosen_.push_back(i);
            if (rec(covered | pms_[i])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<PerfectMatching>& pms_;
    Deadline* deadline_;
    std::vector<std::vector<int>> holders_;
    std::vector<Edge> order_;
    EdgeSet all_;
    int max_size_ = 0;
    int k_ = 0;
    std::vector<int> chosen_;
};

inline MatchingIndex matching_index_search(const CubicGraph& g, const std::vector<PerfectMatching>& pms, int first,
                                           int cap, Deadline* deadline) {
    SetCoverSearch search(g, pms, deadline);
    MatchingIndex r;
    if (!search.every_edge_coverable()) {
        r.above_cap = true;
        return r;
    }
    for (int k = first; k <= cap; ++k)
        if (auto pick = search.cover_with(k)) {
            std::vector<PerfectMatching> ms;
            for (int i : *pick) ms.push_back(pms[i]);
            r.value = k;
            r.cover = make_cover(g, std::move(ms));
            return r;
        }
    r.above_cap = true;
    return r;
}

}  // namespace detail

// Smallest number of perfect matchings covering every edge; above_cap past `cap`.
inline MatchingIndex perfect_matching_index(const CubicGraph& g, int cap = 6, Deadline* deadline = nullptr) {
    if (g.has_semiedges()) throw PreconditionError("use the multipole overload for graphs with semiedges");
    if (!is_bridgeless(g)) throw PreconditionError("perfect matching index needs a bridgeless graph");
    auto pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw PreconditionError("graph has no perfect matching");
    if (auto phi = find_colouring(g)) {
        std::vector<PerfectMatching> ms(3);
        for (Edge e = 0; e < g.edge_count(); ++e) ms[phi->colour[e] - 1].insert(e);
        MatchingIndex r;
        r.value = 3;
        r.cover = make_cover(g, std::move(ms));
        if (cap < 3) return MatchingIndex{0, true, {}};
        return r;
    }
    return detail::matching_index_search(g, pms, 4, cap, deadline);
}

// The same for a multipole: its perfect matchings cover every vertex once and
// may use any number of dangling edges; all edges, dangling ones included,
// must be covered.
inline MatchingIndex perfect_matching_index(const Multipole& m, int cap = 6, Deadline* deadline = nullptr) {
    const CubicGraph& g = m.graph();
    auto pms = enumerate_perfect_matchings(g);
    if (pms.empty()) throw PreconditionError("multipole has no perfect matching");
    return detail::matching_index_search(g, pms, 1, cap, deadline);
}

// Five perfect matchings covering every edge (repeats allowed), when pi <= 5.
inline std::optional<MatchingCover> berge_cover(const CubicGraph& g, Deadline* deadline = nullptr) {
    auto pi = perfect_matching_index(g, 5, deadline);
    if (pi.above_cap) return std::nullopt;
    auto ms = pi.cover.matchings;
    while (ms.size() < 5) ms.push_back(ms.front());
    return make_cover(g, std::move(ms));
}

struct QuasiBipartiteWitness {
    std::vector<Vertex> u_set;
    CubicGraph contracted;
};

struct QuasiBipartiteOptions {
    int max_vertices = 40;
    double budget_seconds = 2.0;  // <= 0 for no limit
};

namespace detail {

// Exhaustive in/out assignment in BFS order. A maximal connected block of
// "out" vertices may never send more than three edges to U, and once all its
// neighbours are decided it must send exactly three.
class QuasiBipartiteSearch {
  public:
    // `attach`: when set, that vertex must be outside U with all neighbours in U.
    QuasiBipartiteSearch(const CubicGraph& g, Deadline& deadline, Vertex attach = kNone)
        : g_(g), deadline_(deadline) {
        const int n = g.vertex_count();
        state_.assign(n, kUndecided);
        forced_.assign(n, kUndecided);
        if (attach != kNone) {
            forced_[attach] = kOut;
            for (Dart d : g.darts(attach)) forced_[g.across(d)] = kInU;
        }
        std::vector<char> seen(n, 0);
        for (Vertex s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = 1;
            std::vector<Vertex> queue = {s};
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (Dart d : g.darts(queue[i])) {
                    Vertex w = g.across(d);
                    if (w != kFreeEnd && !seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    std::optional<std::vector<Vertex>> run() {
        if (rec(0)) {
            std::vector<Vertex> u;
            for (Vertex v = 0; v < g_.vertex_count(); ++v)
                if (state_[v] == kInU) u.push_back(v);
            return u;
        }
        return std::nullopt;
    }

  private:
    static constexpr char kUndecided = 0, kInU = 1, kOut = 2;

    bool rec(std::size_t pos) {
        deadline_.check();
        if (pos == order_.size()) return true;
        Vertex v = order_[pos];
        bool can_join_u = true;
        for (Dart d : g_.darts(v)) {
            Vertex w = g_.across(d);
            if (w == v || (w != kFreeEnd && state_[w] == kInU)) can_join_u = false;
        }
        for (char choice : {kInU, kOut}) {
            if (choice == kInU && !can_join_u) continue;
            if (forced_[v] != kUndecided && forced_[v] != choice) continue;
            state_[v] = choice;
            if (consistent(v) && rec(pos + 1)) return true;
        }
        state_[v] = kUndecided;
        return false;
    }

    // Checks the out-blocks touching v.
    bool consistent(Vertex v) {
        std::vector<Vertex> starts;
        if (state_[v] == kOut) starts.push_back(v);
        else
            for (Dart d : g_.darts(v)) {
                Vertex w = g_.across(d);
                if (w != kFreeEnd && state_[w] == kOut) starts.push_back(w);
            }
        for (Vertex s : starts)
            if (!block_ok(s)) return false;
        return true;
    }

    bool block_ok(Vertex s) {
        std::vector<char> seen(g_.vertex_count(), 0);
        std::vector<Vertex> stack = {s};
        seen[s] = 1;
        std::vector<Vertex> to_u;
        bool open = false;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Dart d : g_.darts(x)) {
                Vertex w = g_.across(d);
                if (w == kFreeEnd) return false;
                if (state_[w] == kInU) to_u.push_back(w);
                else if (state_[w] == kUndecided) open = true;
                else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(to_u.begin(), to_u.end());
        if (std::adjacent_find(to_u.begin(), to_u.end()) != to_u.end()) return false;
        return open ? to_u.size() <= 3 : to_u.size() == 3;
    }

    const CubicGraph& g_;
    Deadline& deadline_;
    std::vector<char> state_;
    std::vector<char> forced_;
    std::vector<Vertex> order_;
};

}  // namespace detail

inline bool is_quasi_bipartite_witness(const CubicGraph& g, const std::vector<Vertex>& u) {
    std::vector<char> in_u(g.vertex_count(), 0);
    for (Vertex x : u) in_u[x] = 1;
    if (u.empty()) return false;
    for (Vertex x : u)
        for (Dart d : g.darts(x)) {
            Vertex w = g.across(d);
            if (w == kFreeEnd || in_u[w]) return false;
        }
    detail::UnionFind uf(g.vertex_count());
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        if (!in_u[a] && !in_u[b]) uf.unite(a, b);
    }
    std::vector<std::vector<Vertex>> boundary(g.vertex_count());
    for (Vertex x : u)
        for (Dart d : g.darts(x)) boundary[uf.find(g.across(d))].push_back(x);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (in_u[x] || uf.find(x) != x) continue;
        auto& b = boundary[x];
        std::sort(b.begin(), b.end());
        if (b.size() != 3 || std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
    }
    return true;
}

namespace detail {

inline void require_qb_input(const CubicGraph& g, const QuasiBipartiteOptions& opt) {
    if (g.has_semiedges()) throw PreconditionError("quasi-bipartiteness needs a closed graph");
    if (!is_bridgeless(g)) throw PreconditionError("quasi-bipartiteness needs a bridgeless graph");
    if (g.vertex_count() > opt.max_vertices) throw Inconclusive("graph exceeds the quasi-bipartite search cap");
}

inline std::optional<QuasiBipartiteWitness> qb_search(const CubicGraph& g, const QuasiBipartiteOptions& opt,
                                                      Vertex attach) {
    require_qb_input(g, opt);
    Deadline deadline = opt.budget_seconds > 0 ? Deadline::seconds(opt.budget_seconds) : Deadline();
    QuasiBipartiteSearch search(g, deadline, attach);
    auto u = search.run();
    if (!u) return std::nullopt;
    std::vector<char> in_u(g.vertex_count(), 0);
    for (Vertex x : *u) in_u[x] = 1;
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (!in_u[x]) rest.push_back(x);
    return QuasiBipartiteWitness{*u, contract(g, rest)};
}

}  // namespace detail

// Independent set U such that contracting every component of G - U gives a
// simple cubic bipartite graph with U as one side. Throws Inconclusive past the
// vertex cap or the time budget.
inline std::optional<QuasiBipartiteWitness> is_quasi_bipartite(const CubicGraph& g,
                                                              const QuasiBipartiteOptions& opt = {}) {
    return detail::qb_search(g, opt, kNone);
}

// A witness of H in which v stays a single vertex outside U, so that the three
// edges of a 3-sum at v land on three distinct vertices of U.
inline std::optional<QuasiBipartiteWitness> quasi_bipartite_attachment(const CubicGraph& h, Vertex v,
                                                                      const QuasiBipartiteOptions& opt = {}) {
    if (v < 0 || v >= h.vertex_count()) throw PreconditionError("vertex out of range");
    return detail::qb_search(h, opt, v);
}

// A 3-sum G (+)_3 H at v with H quasi-bipartite is correct when H has a
// witness whose U contains every neighbour of v; the sum then inflates u
// without disturbing the bipartite structure around it. The wiring does not
// enter the predicate.
inline bool is_correct_3sum(const CubicGraph& g, Vertex u, const CubicGraph& h, Vertex v, int wiring = 0,
                            const QuasiBipartiteOptions& opt = {}) {
    if (u < 0 || u >= g.vertex_count()) throw PreconditionError("vertex out of range");
    if (wiring < 0 || wiring > 5) throw PreconditionError("3-sum wiring must be in 0..5");
    if (!is_quasi_bipartite(h, opt)) throw PreconditionError("second summand is not quasi-bipartite");
    return quasi_bipartite_attachment(h, v, opt).has_value();
}

// Whether the 3-sum itself is quasi-bipartite (the literal reading of
// "correct"); reported alongside for comparison.
inline bool sum_is_quasi_bipartite(const CubicGraph& g, Vertex u, const CubicGraph& h, Vertex v, int wiring = 0,
                                   const QuasiBipartiteOptions& opt = {}) {
    return is_quasi_bipartite(three_sum(g, u, h, v, wiring), opt).has_value();
}

// Checks, on one instance, that pi(G (+)_3 H) >= 5 exactly when H is
// quasi-bipartite and the 3-sum is correct, for G with pi(G) >= 5,
// pi(G - u) = 4 (G - u as a 3-pole) and H colourable.
struct SumIndexReport {
    int pi_g = 0;              // 7 stands for "above 6"
    int pi_g_minus_u = 0;
    bool h_colourable = false;
    int pi_sum = 0;
    bool lhs = false;          // pi(sum) >= 5
    bool h_quasi_bipartite = false;
    bool correct = false;
    bool rhs = false;          // H quasi-bipartite and the sum correct
    bool sum_quasi_bipartite = false;
    bool agrees() const { return lhs == rhs; }
};

inline SumIndexReport verify_sum_index(const CubicGraph& g, Vertex u, const CubicGraph& h, Vertex v, int wiring = 0,
                                       double budget_seconds = 10.0) {
    Deadline deadline = budget_seconds > 0 ? Deadline::seconds(budget_seconds) : Deadline();
    QuasiBipartiteOptions qopt;
    qopt.budget_seconds = budget_seconds;
    if (!is_two_connected(g) || !is_two_connected(h)) throw PreconditionError("summands must be 2-connected");
    SumIndexReport r;
    auto pg = perfect_matching_index(g, 6, &deadline);
    r.pi_g = pg.above_cap ? 7 : pg.value;
    if (r.pi_g < 5) throw PreconditionError("first summand needs perfect matching index at least 5");
    auto pgu = perfect_matching_index(delete_vertices(g, {u}), 6, &deadline);
    r.pi_g_minus_u = pgu.above_cap ? 7 : pgu.value;
    if (r.pi_g_minus_u != 4) throw PreconditionError("first summand minus u needs perfect matching index 4");
    r.h_colourable = is_colourable(h);
    if (!r.h_colourable) throw PreconditionError("second summand must be 3-edge-colourable");
    CubicGraph sum = three_sum(g, u, h, v, wiring);
    auto ps = perfect_matching_index(sum, 6, &deadline);
    r.pi_sum = ps.above_cap ? 7 : ps.value;
    r.lhs = r.pi_sum >= 5;
    r.h_quasi_bipartite = is_quasi_bipartite(h, qopt).has_value();
    r.correct = r.h_quasi_bipartite && quasi_bipartite_attachment(h, v, qopt).has_value();
    r.rhs = r.h_quasi_bipartite && r.correct;
    r.sum_quasi_bipartite = is_quasi_bipartite(sum, qopt).has_value();
    return r;
}

}  // namespace defectlab
