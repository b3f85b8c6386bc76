#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"

namespace sympaint {

// graph6 wire format: every byte is printable ASCII in [63,126] and carries
// 6 bits (value = byte - 63). The header encodes n in 1, 4 or 8 bytes
// (shortest form only); the body packs the upper triangle of the adjacency
// matrix column by column, MSB first, zero padded.
inline Graph parse_graph6(const std::string& text) {
    std::size_t end = text.size();
    while (end > 0 && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
    if (end == 0) throw ParseError("empty graph6 text", 0);

    auto sextet = [&](std::size_t i) -> long long {
        if (i >= end) throw ParseError("truncated graph6 text", i);
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
        return c - 63;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (end > 1 && text[1] == '~') {
            for (int i = 0; i < 6; ++i) n = n << 6 | sextet(2 + i);
            if (n < 258048) throw ParseError("non-canonical vertex count header", 0);
            pos = 8;
        } else {
            for (int i = 0; i < 3; ++i) n = n << 6 | sextet(1 + i);
            if (n < 63) throw ParseError("non-canonical vertex count header", 0);
            pos = 4;
        }
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxFamilyVertices) throw ParseError("vertex count too large", 0);

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(end - pos) < nbytes)
        throw ParseError("truncated graph6 bit field", end);
    if (static_cast<long long>(end - pos) > nbytes)
        throw ParseError("trailing data after graph6 bit field",
                         pos + static_cast<std::size_t>(nbytes));

    std::vector<std::pair<int, int>> edges;
    long long k = 0;
    for (long long j = 1; j < n; ++j)
        for (long long i = 0; i < j; ++i, ++k)
            if (sextet(pos + k / 6) >> (5 - k % 6) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (long long p = nbits; p < nbytes * 6; ++p)
        if (sextet(pos + p / 6) >> (5 - p % 6) & 1)
            throw ParseError("nonzero padding bit", pos + static_cast<std::size_t>(p / 6));

    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + (n >> shift & 63)));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + (n >> shift & 63)));
    }
    long long nbits = n * (n - 1) / 2;
    std::string body(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) body[k / 6] |= char(1 << (5 - k % 6));
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

// Plain edge list: first line "n m", then m lines "u v". Blank lines at the
// end are tolerated.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t offset = 0, line_start = 0;
    auto next_line = [&]() -> bool {
        line_start = offset;
        if (!std::getline(in, line)) return false;
        offset += line.size() + 1;
        return true;
    };
    auto parse_two = [&](long long& a, long long& b, const char* what) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError(std::string("expected \"") + what + "\"", line_start);
    };

    if (!next_line()) throw ParseError("empty edge list", 0);
    long long n, m;
    parse_two(n, m, "n m");
    if (n < 0 || n > kMaxFamilyVertices) throw ParseError("vertex count out of range", line_start);
    if (m < 0 || m > 1ll * n * (n - 1) / 2) throw ParseError("edge count out of range", line_start);

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("fewer edge lines than declared", offset);
        long long u, v;
        parse_two(u, v, "u v");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range", line_start);
        if (u == v) throw ParseError("self-loop in edge list", line_start);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (next_line()) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("trailing data after edge list", line_start);
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace sympaint
