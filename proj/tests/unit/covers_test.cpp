#include <gtest/gtest.h>

#include <bit>

#include "defectlab/constructions.hpp"
#include "defectlab/covers.hpp"
#include "defectlab/graph6.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace defectlab;

namespace {

// Smallest k such that some k perfect matchings cover every edge, by subset
// enumeration; 0 when no cover exists.
int brute_force_index(const CubicGraph& g) {
    auto pms = oracle::perfect_matchings(g);
    const int n = static_cast<int>(pms.size());
    if (n == 0 || n > 20) return 0;
    std::vector<std::uint64_t> masks;
    for (const auto& pm : pms) {
        std::uint64_t m = 0;
        for (Edge e : pm) m |= std::uint64_t{1} << e;
        masks.push_back(m);
    }
    const std::uint64_t all = g.edge_count() == 64 ? ~0ULL : (std::uint64_t{1} << g.edge_count()) - 1;
    int best = 0;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        int k = std::popcount(s);
        if (best && k >= best) continue;
        std::uint64_t u = 0;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1) u |= masks[i];
        if (u == all) best = k;
    }
    return best;
}

// Quasi-bipartiteness by trying every independent set U.
bool brute_force_quasi_bipartite(const CubicGraph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        bool independent = true;
        for (Edge e = 0; e < g.edge_count() && independent; ++e) {
            auto [a, b] = g.ends(e);
            if ((s >> a & 1) && (s >> b & 1)) independent = false;
        }
        if (!independent) continue;
        std::vector<int> comp(n, -1);
        int count = 0;
        for (Vertex v = 0; v < n; ++v) {
            if ((s >> v & 1) || comp[v] >= 0) continue;
            std::vector<Vertex> stack = {v};
            comp[v] = count;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbours(x))
                    if (!(s >> w & 1) && comp[w] < 0) {
                        comp[w] = count;
                        stack.push_back(w);
                    }
            }
            ++count;
        }
        std::vector<std::vector<Vertex>> touching(count);
        for (Vertex v = 0; v < n; ++v)
            if (s >> v & 1)
                for (Vertex w : g.neighbours(v)) touching[comp[w]].push_back(v);
        bool ok = count > 0;
        for (auto& t : touching) {
            std::sort(t.begin(), t.end());
            if (t.size() != 3 || std::unique(t.begin(), t.end()) != t.end()) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

void expect_perfect_matching(const CubicGraph& g, const PerfectMatching& m) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (Edge e : m.to_vector()) {
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd) ++deg[a];
        if (b != kFreeEnd) ++deg[b];
    }
    for (int d : deg) EXPECT_EQ(d, 1);
}

// Two K4s with one edge subdivided, the subdivision vertices joined by a bridge.
CubicGraph bridged() {
    return CubicGraph::from_edges(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}, {5, 7}, {5, 8},
                                       {6, 7}, {6, 8}, {7, 8}, {5, 9}, {9, 6}, {4, 9}});
}

}  // namespace

TEST(MatchingIndex, KnownValues) {
    EXPECT_EQ(perfect_matching_index(petersen_graph()).value, 5);
    EXPECT_EQ(perfect_matching_index(complete_graph_4()).value, 3);
    EXPECT_EQ(perfect_matching_index(complete_bipartite_3_3()).value, 3);
    EXPECT_EQ(perfect_matching_index(fixtures::theta()).value, 3);
}

TEST(MatchingIndex, PetersenMinusVertexIsFour) {
    auto pole = delete_vertices(petersen_graph(), {0});
    EXPECT_EQ(pole.semiedge_count(), 3);
    auto pi = perfect_matching_index(pole);
    EXPECT_EQ(pi.value, 4);
    EXPECT_TRUE(pi.cover.covers_all());
}

TEST(MatchingIndex, AgreesWithSubsetEnumeration) {
    std::vector<CubicGraph> graphs = {fixtures::cube(), fixtures::prism(), fixtures::heawood(), petersen_graph()};
    for (auto& g : fixtures::census(18)) graphs.push_back(g);
    for (auto& g : fixtures::census(20)) graphs.push_back(g);
    for (const auto& g : graphs) {
        int expected = brute_force_index(g);
        if (expected == 0) continue;
        auto pi = perfect_matching_index(g);
        ASSERT_FALSE(pi.above_cap);
        EXPECT_EQ(pi.value, expected);
        EXPECT_EQ(static_cast<int>(pi.cover.matchings.size()), pi.value);
        EXPECT_TRUE(pi.cover.covers_all());
        for (const auto& m : pi.cover.matchings) expect_perfect_matching(g, m);
        EXPECT_EQ(pi.value == 3, is_colourable(g));
    }
}

TEST(MatchingIndex, CapIsReported) {
    auto pi = perfect_matching_index(petersen_graph(), 4);
    EXPECT_TRUE(pi.above_cap);
}

TEST(MatchingIndex, BridgedGraphHasNoCover) {
    auto g = bridged();
    EXPECT_ANY_THROW(perfect_matching_index(g));
}

TEST(BergeCover, PetersenAndCensus) {
    auto check = [](const CubicGraph& g) {
        auto cover = berge_cover(g);
        ASSERT_TRUE(cover.has_value());
        EXPECT_TRUE(cover->is_berge());
        std::vector<int> mult(g.edge_count(), 0);
        for (const auto& m : cover->matchings) {
            expect_perfect_matching(g, m);
            for (Edge e : m.to_vector()) ++mult[e];
        }
        EXPECT_EQ(mult, cover->multiplicity);
    };
    check(petersen_graph());
    check(fixtures::cube());
    for (const auto& g : fixtures::census(18)) check(g);
}

TEST(QuasiBipartite, Examples) {
    EXPECT_TRUE(is_quasi_bipartite(complete_bipartite_3_3()).has_value());
    EXPECT_TRUE(is_quasi_bipartite(fixtures::cube()).has_value());
    EXPECT_TRUE(is_quasi_bipartite(fixtures::heawood()).has_value());
    EXPECT_FALSE(is_quasi_bipartite(complete_graph_4()).has_value());
    EXPECT_FALSE(is_quasi_bipartite(petersen_graph()).has_value());
    EXPECT_FALSE(is_quasi_bipartite(fixtures::prism()).has_value());
}

TEST(QuasiBipartite, InflatedBipartiteGraphs) {
    auto g = inflate_vertex(complete_bipartite_3_3(), 0);
    auto w = is_quasi_bipartite(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(oracle::isomorphic(w->contracted, complete_bipartite_3_3()));
}

TEST(QuasiBipartite, WitnessesAreValidAndMatchEnumeration) {
    std::vector<CubicGraph> graphs = {complete_graph_4(), complete_bipartite_3_3(), fixtures::prism(), fixtures::cube(),
                                      petersen_graph(), inflate_vertex(fixtures::cube(), 0),
                                      inflate_vertex(complete_graph_4(), 0)};
    for (const auto& g : fixtures::small_cubic()) graphs.push_back(g);
    for (const auto& g : graphs) {
        if (!is_bridgeless(g)) continue;
        auto w = is_quasi_bipartite(g);
        EXPECT_EQ(w.has_value(), brute_force_quasi_bipartite(g)) << to_graph6(g);
        if (!w) continue;
        EXPECT_TRUE(is_quasi_bipartite_witness(g, w->u_set));
        const auto& h = w->contracted;
        EXPECT_TRUE(h.is_simple());
        EXPECT_EQ(h.vertex_count(), 2 * static_cast<int>(w->u_set.size()));
        EXPECT_TRUE(is_colourable(h));
    }
}

TEST(QuasiBipartite, RejectsBridgesAndOversizedInput) {
    auto g = bridged();
    EXPECT_THROW(is_quasi_bipartite(g), PreconditionError);
    QuasiBipartiteOptions opt;
    opt.max_vertices = 8;
    EXPECT_THROW(is_quasi_bipartite(petersen_graph(), opt), Inconclusive);
}

TEST(CorrectThreeSum, AttachmentKeepsVertexOutsideU) {
    auto h = complete_bipartite_3_3();
    for (Vertex v = 0; v < 6; ++v) {
        auto w = quasi_bipartite_attachment(h, v);
        ASSERT_TRUE(w.has_value());
        auto& u = w->u_set;
        EXPECT_EQ(std::count(u.begin(), u.end(), v), 0);
        for (Vertex x : h.neighbours(v)) EXPECT_EQ(std::count(u.begin(), u.end(), x), 1);
    }
    EXPECT_TRUE(is_correct_3sum(petersen_graph(), 0, h, 0));
    EXPECT_THROW(is_correct_3sum(petersen_graph(), 0, complete_graph_4(), 0), PreconditionError);
    EXPECT_THROW(is_correct_3sum(petersen_graph(), 0, h, 0, 6), PreconditionError);
}

TEST(CorrectThreeSum, IndexBiconditionalOnSmallSums) {
    auto p = petersen_graph();
    std::vector<CubicGraph> hs = {complete_graph_4(), complete_bipartite_3_3(), fixtures::prism(), fixtures::cube(),
                                  inflate_vertex(complete_bipartite_3_3(), 0)};
    int checked = 0;
    for (const auto& h : hs)
        for (Vertex v = 0; v < h.vertex_count(); v += 2)
            for (int wiring : {0, 3}) {
                auto r = verify_sum_index(p, 0, h, v, wiring, 0);
                EXPECT_EQ(r.pi_g, 5);
                EXPECT_EQ(r.pi_g_minus_u, 4);
                EXPECT_TRUE(r.agrees()) << "h=" << to_graph6(h) << " v=" << v << " wiring=" << wiring;
                EXPECT_EQ(r.lhs, r.pi_sum >= 5);
                ++checked;
            }
    EXPECT_GT(checked, 10);
}

TEST(CorrectThreeSum, PreconditionsOnSummands) {
    EXPECT_THROW(verify_sum_index(complete_bipartite_3_3(), 0, complete_graph_4(), 0), PreconditionError);
    EXPECT_THROW(verify_sum_index(petersen_graph(), 0, petersen_graph(), 0), PreconditionError);
}
