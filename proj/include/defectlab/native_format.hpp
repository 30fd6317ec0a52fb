#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"

namespace defectlab {

// Line-oriented multipole text:
//
//   mpole <n_vertices> <n_semiedges>
//   e <u> <v>              full edge (u == v is a loop)
//   s <u> <connector>      dangling edge at u, its free end in <connector>
//   i <connA> <connB>      isolated edge, one free end in each connector
//
// Blank lines and lines starting with '#' are ignored. Edge ids follow line
// order; connectors are ordered by first mention.
inline Multipole parse_mpole(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    int n = 0, declared = 0, lineno = 0;
    std::vector<EdgeEnds> edges;
    std::vector<std::string> order;
    std::map<std::string, std::vector<Dart>> members;
    auto add_free = [&](const std::string& name, Dart d) {
        if (!members.count(name)) order.push_back(name);
        members[name].push_back(d);
    };
    auto fail = [&](const std::string& why) {
        throw FormatError("mpole line " + std::to_string(lineno) + ": " + why);
    };
    auto vertex = [&](std::istringstream& ls) {
        long long v;
        if (!(ls >> v)) fail("expected vertex id");
        if (v < 0 || v >= n) fail("vertex id out of range");
        return static_cast<int>(v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (!have_header) {
            if (tag != "mpole" || !(ls >> n >> declared) || n < 0 || declared < 0) fail("bad header");
            have_header = true;
        } else if (tag == "e") {
            int u = vertex(ls);
            int v = vertex(ls);
            edges.push_back({u, v});
        } else if (tag == "s") {
            int u = vertex(ls);
            std::string name;
            if (!(ls >> name)) fail("missing connector name");
            edges.push_back({u, kFreeEnd});
            add_free(name, CubicGraph::dart_of(static_cast<Edge>(edges.size()) - 1, 1));
        } else if (tag == "i") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("isolated edge needs two connector names");
            edges.push_back({kFreeEnd, kFreeEnd});
            Edge e = static_cast<Edge>(edges.size()) - 1;
            add_free(a, CubicGraph::dart_of(e, 0));
            add_free(b, CubicGraph::dart_of(e, 1));
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#') fail("trailing tokens");
    }
    if (!have_header) throw FormatError("mpole: missing header");
    CubicGraph g(n, edges);
    if (g.semiedge_count() != declared)
        throw FormatError("mpole: header declares " + std::to_string(declared) + " semiedges, found " +
                          std::to_string(g.semiedge_count()));
    std::vector<Connector> connectors;
    for (const auto& name : order) connectors.push_back({name, members[name]});
    return Multipole(std::move(g), std::move(connectors));
}

// Full edges first (in edge order), then dangling and isolated edges in
// connector order, so parsing the output reproduces it exactly.
inline std::string write_mpole(const Multipole& m) {
    const CubicGraph& g = m.graph();
    std::ostringstream out;
    out << "mpole " << g.vertex_count() << ' ' << g.semiedge_count() << '\n';
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.ends(e);
        if (a != kFreeEnd && b != kFreeEnd) out << "e " << a << ' ' << b << '\n';
    }
    std::vector<std::string> owner(g.dart_count());
    for (const auto& c : m.connectors())
        for (Dart d : c.semiedges) owner[d] = c.name;
    std::vector<char> done(g.edge_count(), 0);
    for (const auto& c : m.connectors())
        for (Dart d : c.semiedges) {
            Edge e = CubicGraph::dart_edge(d);
            if (done[e]) continue;
            done[e] = 1;
            Vertex other = g.across(d);
            if (other == kFreeEnd)
                out << "i " << owner[d] << ' ' << owner[CubicGraph::opposite(d)] << '\n';
            else
                out << "s " << other << ' ' << c.name << '\n';
        }
    return out.str();
}

inline std::string write_mpole(const CubicGraph& g) { return write_mpole(Multipole(g)); }

}  // namespace defectlab
