#include <gtest/gtest.h>

#include <random>

#include "defectlab/constructions.hpp"
#include "defectlab/graph6.hpp"
#include "defectlab/native_format.hpp"
#include "defectlab/operations.hpp"
#include "defectlab/structure.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace defectlab;

namespace {

CubicGraph petersen() { return parse_graph6(fixtures::kPetersenG6); }

}  // namespace

TEST(Graph6, PetersenDecodes) {
    auto g = petersen();
    EXPECT_EQ(g.vertex_count(), 10);
    EXPECT_EQ(g.edge_count(), 15);
    EXPECT_TRUE(g.is_simple());
    EXPECT_TRUE(oracle::isomorphic(g, petersen_graph()));
}

TEST(Graph6, K4Decodes) {
    auto g = parse_graph6(fixtures::kK4G6);
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 6);
}

TEST(Graph6, PathIsRejected) {
    // P_3: 0-1-2
    EXPECT_THROW(parse_graph6("Bg"), NonCubicError);
}

TEST(Graph6, MalformedInputIsRejected) {
    EXPECT_THROW(parse_graph6(""), FormatError);
    EXPECT_THROW(parse_graph6("I\x01"), FormatError);
    EXPECT_THROW(parse_graph6("Ihe"), FormatError);
}

TEST(Graph6, RoundTripIsBitExact) {
    for (const char* s : {fixtures::kPetersenG6, fixtures::kK4G6, "ICOf@pSb?"}) EXPECT_EQ(to_graph6(parse_graph6(s)), s);
    for (auto& g : fixtures::census_up_to(22)) EXPECT_EQ(parse_graph6(to_graph6(g)).edge_list().size(), g.edge_list().size());
}

TEST(Graph6, ListSkipsBlankAndCommentLines) {
    std::istringstream in("IheA@GUAo\n\n# comment\nC~\n");
    auto lines = read_graph6_lines(in);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[1].line_index, 3u);
    EXPECT_EQ(lines[1].text, "C~");
}

TEST(CubicGraphInvariants, DartBookkeeping) {
    auto m = delete_vertices(petersen(), {0, 5});
    const auto& g = m.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.darts(v).size(), 3u);
    for (Dart d = 0; d < g.dart_count(); ++d) EXPECT_EQ(CubicGraph::opposite(CubicGraph::opposite(d)), d);
    EXPECT_EQ(g.dart_count(), 2 * g.edge_count());
    EXPECT_EQ(g.semiedge_count(), 4);
}

TEST(CubicGraphInvariants, RejectsNonCubic) {
    EXPECT_THROW(CubicGraph::from_edges(3, {{0, 1}, {1, 2}}), NonCubicError);
}

TEST(Girth, SmallGraphs) {
    EXPECT_EQ(girth(petersen()), 5);
    EXPECT_EQ(girth(parse_graph6(fixtures::kK4G6)), 3);
    EXPECT_EQ(girth(complete_bipartite_3_3()), 4);
    EXPECT_EQ(girth(fixtures::heawood()), 6);
    EXPECT_EQ(girth(fixtures::theta()), 2);
}

TEST(Girth, AgreesWithCircuitOracle) {
    for (auto& g : fixtures::census_up_to(20)) EXPECT_EQ(girth(g), oracle::girth(g));
    EXPECT_EQ(girth(fixtures::cube()), oracle::girth(fixtures::cube()));
}

TEST(CyclicConnectivity, Values) {
    EXPECT_EQ(cyclic_edge_connectivity(petersen(), 6).value, 5);
    EXPECT_EQ(cyclic_edge_connectivity(fixtures::prism(), 6).value, 3);
    EXPECT_EQ(cyclic_edge_connectivity(fixtures::cube(), 6).value, 4);
    auto inflated = inflate_vertex(petersen(), 0);
    EXPECT_LE(cyclic_edge_connectivity(inflated, 6).value, 3);
}

TEST(CyclicConnectivity, ExampleOfOrder34IsFour) {
    auto gn = example_34();
    EXPECT_EQ(cyclic_edge_connectivity(gn.graph, 6).value, 4);
}

TEST(CyclicConnectivity, AgreesWithSubsetOracle) {
    for (auto& g : fixtures::census_up_to(18)) {
        auto cc = cyclic_edge_connectivity(g, 5);
        EXPECT_EQ(cc.above_cap ? 6 : cc.value, oracle::cyclic_connectivity(g, 5));
    }
    auto two = two_sum(petersen(), 0, petersen(), 0);
    EXPECT_EQ(cyclic_edge_connectivity(two, 5).value, 2);
    EXPECT_EQ(oracle::cyclic_connectivity(two, 5), 2);
}

TEST(CyclicConnectivity, K4HasNoCycleSeparatingCut) {
    EXPECT_TRUE(is_cyclically_k_edge_connected(parse_graph6(fixtures::kK4G6), 6));
}

TEST(InducedCycles, PetersenCounts) {
    auto g = petersen();
    EXPECT_EQ(induced_cycles(g, 5).size(), 12u);
    EXPECT_TRUE(induced_cycles(g, 3).empty());
    EXPECT_EQ(induced_cycles(g, 6).size(), 10u);
    EXPECT_EQ(oracle::circuits(g, 5).size(), 12u);
    EXPECT_EQ(oracle::circuits(g, 6).size(), 10u);
}

TEST(InducedCycles, AgreeWithCircuitOracle) {
    for (auto& g : fixtures::census_up_to(20))
        for (int len : {5, 6, 7}) {
            auto all = cycles_of_length(g, len, false);
            EXPECT_EQ(all.size(), oracle::circuits(g, len).size());
            for (const auto& c : all) {
                ASSERT_EQ(c.length(), len);
                for (int i = 0; i < len; ++i) {
                    auto [a, b] = g.ends(c.edges[i]);
                    Vertex x = c.vertices[i], y = c.vertices[(i + 1) % len];
                    EXPECT_TRUE((a == x && b == y) || (a == y && b == x));
                }
            }
        }
}

TEST(InducedCycles, ShortestCircuitsAreInduced) {
    for (auto& g : fixtures::census_up_to(22)) {
        int gi = girth(g);
        EXPECT_EQ(induced_cycles(g, gi).size(), cycles_of_length(g, gi, false).size());
        for (int len = 3; len < gi; ++len) EXPECT_TRUE(induced_cycles(g, len).empty());
    }
}

TEST(Contract, InflateThenContractRestores) {
    auto g = petersen();
    for (Vertex v : {0, 3, 7}) {
        auto h = inflate_vertex(g, v);
        auto t = inflated_triangle(g, v);
        auto back = contract(h, {t[0], t[1], t[2]});
        EXPECT_EQ(back.vertex_count(), h.vertex_count() - 2);
        EXPECT_EQ(back.edge_count(), h.edge_count() - 3);
        EXPECT_TRUE(oracle::isomorphic(back, g));
    }
}

TEST(Contract, SingleVertexIsNoOp) {
    auto g = petersen();
    EXPECT_TRUE(oracle::isomorphic(contract(g, {4}), g));
}

TEST(DeleteVertices, Examples) {
    auto m = delete_vertices(petersen(), {0, 1});
    EXPECT_EQ(m.graph().vertex_count(), 8);
    EXPECT_EQ(m.semiedge_count(), 4);
    auto same = delete_vertices(petersen(), {});
    EXPECT_EQ(same.semiedge_count(), 0);
    EXPECT_TRUE(oracle::isomorphic(same.graph(), petersen()));
    auto tri = delete_vertices(parse_graph6(fixtures::kK4G6), {0});
    EXPECT_EQ(tri.graph().vertex_count(), 3);
    EXPECT_EQ(tri.semiedge_count(), 3);
    EXPECT_EQ(induced_cycles(tri.graph(), 3).size(), 1u);
}

TEST(Junction, TwoOnePolesGiveBridgedGraph) {
    auto k4 = parse_graph6(fixtures::kK4G6);
    auto split = [&] {
        auto t = delete_vertices(k4, {0});
        auto s = t.connectors().front().semiedges;
        return junction(t, {{s[0], s[1]}});
    };
    auto a = split();
    auto b = split();
    EXPECT_EQ(a.semiedge_count(), 1);
    auto g = junction(a, b, {{a.semiedges()[0], b.semiedges()[0]}}).graph();
    EXPECT_EQ(g.vertex_count(), 6);
    EXPECT_FALSE(is_bridgeless(g));
}

TEST(Junction, IsolatedEdgeClosedOnItselfDisappears) {
    auto m = parse_mpole("mpole 0 2\ni A B\n");
    auto s = m.semiedges();
    auto out = junction(m, {{s[0], s[1]}});
    EXPECT_EQ(out.graph().edge_count(), 0);
}

TEST(Junction, SeverThenJoinRestores) {
    auto g = petersen();
    auto m = sever(Multipole(g), {0, 7});
    EXPECT_EQ(m.semiedge_count(), 4);
    std::vector<std::pair<Dart, Dart>> pairs;
    for (const auto& c : m.connectors()) pairs.emplace_back(c.semiedges[0], c.semiedges[1]);
    EXPECT_TRUE(oracle::isomorphic(junction(m, pairs).graph(), g));
}

TEST(NativeFormat, RoundTrips) {
    auto z = build_z_hexapole();
    auto text = write_mpole(z);
    auto back = parse_mpole(text);
    EXPECT_EQ(back.connector_sizes(), z.connector_sizes());
    EXPECT_EQ(back.graph().vertex_count(), z.graph().vertex_count());
    EXPECT_EQ(back.graph().edge_count(), z.graph().edge_count());
    EXPECT_EQ(write_mpole(parse_mpole(text)), text);
    auto iso = parse_mpole("mpole 0 2\ni A B\n");
    EXPECT_EQ(write_mpole(iso), "mpole 0 2\ni A B\n");
    auto theta = fixtures::theta();
    EXPECT_TRUE(oracle::isomorphic(parse_mpole(write_mpole(theta)).graph(), theta));
}

TEST(NativeFormat, RejectsBadInput) {
    EXPECT_THROW(parse_mpole("mpole 2 0\ne 0 1\n"), NonCubicError);
    EXPECT_THROW(parse_mpole("e 0 1\n"), FormatError);
    EXPECT_THROW(parse_mpole("mpole 2 0\nx 0 1\n"), FormatError);
}

TEST(Sums, TwoSumAndThreeSumShapes) {
    auto p = petersen();
    auto k4 = parse_graph6(fixtures::kK4G6);
    auto s2 = two_sum(p, 0, k4, 0);
    EXPECT_EQ(s2.vertex_count(), 14);
    EXPECT_EQ(cyclic_edge_connectivity(s2, 6).value, 2);
    auto s3 = three_sum(p, 0, p, 0);
    EXPECT_EQ(s3.vertex_count(), 18);
    EXPECT_EQ(cyclic_edge_connectivity(s3, 6).value, 3);
    EXPECT_TRUE(oracle::isomorphic(three_sum(p, 2, k4, 1), inflate_vertex(p, 2)));
}

TEST(Sums, ThreeSumDecomposesAlongItsCut) {
    auto p = petersen();
    auto s3 = three_sum(p, 0, fixtures::cube(), 0);
    auto cuts = cycle_separating_cuts(s3, 3);
    ASSERT_FALSE(cuts.empty());
    const auto& cut = cuts.front();
    auto small = cut.side_a.size() < cut.side_b.size() ? cut.side_a : cut.side_b;
    auto big = cut.side_a.size() < cut.side_b.size() ? cut.side_b : cut.side_a;
    EXPECT_TRUE(oracle::isomorphic(contract(s3, small), p));
    EXPECT_TRUE(oracle::isomorphic(contract(s3, big), fixtures::cube()));
}

TEST(EdgeBoundary, HandshakeParity) {
    std::mt19937 rng(7);
    for (auto& g : fixtures::census_up_to(22)) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Vertex> y;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (rng() % 2) y.push_back(v);
            EXPECT_EQ(edge_boundary(g, y).size() % 2, y.size() % 2);
        }
    }
}
