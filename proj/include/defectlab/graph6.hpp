#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectlab/errors.hpp"
#include "defectlab/graph.hpp"

namespace defectlab {

namespace detail {

inline bool is_g6_byte(unsigned char c) { return c >= 63 && c <= 126; }

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace detail

// Simple graph from one graph6 line. Vertices keep the encoding's numbering;
// darts at each vertex are ordered by ascending neighbour.
inline CubicGraph parse_graph6(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.rfind(">>graph6<<", 0) == 0) s.remove_prefix(10);
    if (s.empty()) throw FormatError("empty graph6 string");
    for (unsigned char c : s)
        if (!detail::is_g6_byte(c)) throw FormatError("graph6: byte out of range");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= s.size()) throw FormatError("graph6: truncated header");
            v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
        }
        return v;
    };
    if (static_cast<unsigned char>(s[0]) != 126) {
        n = take(1);
    } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126) {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }
    if (n > 100000) throw FormatError("graph6: graph too large");

    const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (s.size() - pos != bytes) throw FormatError("graph6: payload length does not match order");

    std::vector<std::pair<int, int>> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    for (; k < bytes * 6; ++k) {
        int byte = s[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
    }
    std::sort(edges.begin(), edges.end());
    return CubicGraph::from_edges(static_cast<int>(n), edges);
}

// graph6 encoding; only simple graphs without free ends are representable.
inline std::string to_graph6(const CubicGraph& g) {
    if (g.has_semiedges() || !g.is_simple()) throw PreconditionError("graph6 needs a simple closed graph");
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back(126);
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
    }
    int acc = 0, filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

struct Graph6Line {
    std::size_t line_index;  // 0-based, counting every line of the input
    std::string text;
};

// Non-empty, non-comment lines of a graph6 list.
inline std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    std::vector<Graph6Line> out;
    std::string line;
    for (std::size_t i = 0; std::getline(in, line); ++i) {
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.push_back({i, std::string(t)});
    }
    return out;
}

}  // namespace defectlab
