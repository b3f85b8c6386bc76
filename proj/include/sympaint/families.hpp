#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sympaint {

inline constexpr int kMaxFamilyVertices = 1'000'000;

// Vertex numbering of the book graph B_{m,n}: spine vertices first
// (v_0 = 0, v_{m-1} = 1), then the inner path vertices page by page:
// v_{1,1}, ..., v_{m-2,1}, v_{1,2}, ...  A page swap is then a block
// permutation of the path range.
struct BookLayout {
    int m = 0;
    long long n = 0;

    int spine_front() const { return 0; }
    int spine_back() const { return 1; }

    // v_{pos,page} with pos in 1..m-2, page in 1..n.
    long long path_vertex(int pos, long long page) const {
        return 2 + (page - 1) * (m - 2) + (pos - 1);
    }

    long long vertex_count() const { return 2 + n * (m - 2); }
};

struct Book {
    Graph graph;
    BookLayout layout;
};

// Book graph B_{m,n}: n internally disjoint paths of length m-1 (m-2 inner
// vertices each) joining two adjacent spine vertices, i.e. n m-cycles glued
// along one common edge.
inline Book make_book(int m, long long n) {
    if (m < 3) throw DomainError("book graph needs cycle length m >= 3");
    if (n < 1) throw DomainError("book graph needs page count n >= 1");
    BookLayout lay{m, n};
    if (lay.vertex_count() > kMaxFamilyVertices)
        throw DomainError("book graph too large");
    int total = static_cast<int>(lay.vertex_count());
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(total);
    labels[0] = "v0";
    labels[1] = "v" + std::to_string(m - 1);
    edges.emplace_back(0, 1);
    for (long long page = 1; page <= n; ++page) {
        edges.emplace_back(0, static_cast<int>(lay.path_vertex(1, page)));
        for (int pos = 1; pos < m - 2; ++pos)
            edges.emplace_back(static_cast<int>(lay.path_vertex(pos, page)),
                               static_cast<int>(lay.path_vertex(pos + 1, page)));
        edges.emplace_back(static_cast<int>(lay.path_vertex(m - 2, page)), 1);
        for (int pos = 1; pos <= m - 2; ++pos)
            labels[lay.path_vertex(pos, page)] =
                "v" + std::to_string(pos) + "," + std::to_string(page);
    }
    return {Graph(total, edges, std::move(labels)), lay};
}

inline Graph make_cycle(int m) {
    if (m < 3) throw DomainError("cycle needs at least 3 vertices");
    if (m > kMaxFamilyVertices) throw DomainError("cycle too large");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
    return Graph(m, edges);
}

inline Graph make_complete(int n) {
    if (n < 1) throw DomainError("complete graph needs at least 1 vertex");
    if (n > 2000) throw DomainError("complete graph too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Parts are {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw DomainError("bipartite parts must be nonempty");
    if (a + b > 2000) throw DomainError("complete bipartite graph too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

// Q_k with vertex i labeled by the k-bit binary string of i (MSB first).
inline Graph make_hypercube(int k) {
    if (k < 1) throw DomainError("hypercube needs dimension >= 1");
    if (k > 20) throw DomainError("hypercube dimension too large");
    int n = 1 << k;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) {
        std::string s(k, '0');
        for (int b = 0; b < k; ++b)
            if (v >> (k - 1 - b) & 1) s[b] = '1';
        labels[v] = std::move(s);
        for (int b = 0; b < k; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(n, edges, std::move(labels));
}

// Smallest asymmetric graph family member: 6 vertices, trivial automorphism
// group (a triangle with a pendant path of two edges plus one extra leaf).
inline Graph make_asymmetric6() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {4, 5}});
}

// Cartesian product: (a,b) adjacent to (a',b') iff a=a' and bb' is an edge
// of h, or b=b' and aa' is an edge of g. Vertex (a,b) gets index
// a*|V(h)|+b, so fibers over g-vertices are contiguous index blocks.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw DomainError("cartesian product with an empty factor");
    long long total = 1ll * g.vertex_count() * h.vertex_count();
    if (total > kMaxFamilyVertices) throw DomainError("product too large");
    int hn = h.vertex_count();
    auto idx = [hn](int a, int b) { return a * hn + b; };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(total);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < hn; ++b) {
            std::string la = g.has_labels() ? g.label(a) : std::to_string(a);
            std::string lb = h.has_labels() ? h.label(b) : std::to_string(b);
            labels[idx(a, b)] = "(" + la + "," + lb + ")";
            for (int b2 : h.neighbors(b))
                if (b < b2) edges.emplace_back(idx(a, b), idx(a, b2));
            for (int a2 : g.neighbors(a))
                if (a < a2) edges.emplace_back(idx(a, b), idx(a2, b));
        }
    return Graph(static_cast<int>(total), edges, std::move(labels));
}

// A family spec parsed from "name" or "name:arg" or "name:arg,arg".
struct FamilyGraph {
    Graph graph;
    std::optional<BookLayout> book;
    std::string name;  // canonical echo, e.g. "book:4,3"
};

namespace detail {

inline std::vector<long long> parse_family_args(const std::string& spec,
                                                std::size_t colon) {
    std::vector<long long> args;
    std::size_t pos = colon + 1;
    if (pos >= spec.size()) throw ParseError("missing family arguments", colon);
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("family argument is not a nonnegative integer", pos);
        if (tok.size() > 12) throw ParseError("family argument too large", pos);
        args.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return args;
}

}  // namespace detail

// Grammar: cycle:m | complete:n | complete_bipartite:a,b | hypercube:k |
// book:m,n | asymmetric6.
inline FamilyGraph make_family(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<long long> args;
    if (colon != std::string::npos) args = detail::parse_family_args(spec, colon);

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw ParseError("family '" + name + "' takes " + std::to_string(k) +
                                 " argument(s)",
                             colon == std::string::npos ? spec.size() : colon);
    };
    auto as_int = [](long long v) {
        if (v > kMaxFamilyVertices) throw DomainError("family size out of range");
        return static_cast<int>(v);
    };

    if (name == "cycle") {
        want(1);
        return {make_cycle(as_int(args[0])), std::nullopt, spec};
    }
    if (name == "complete") {
        want(1);
        return {make_complete(as_int(args[0])), std::nullopt, spec};
    }
    if (name == "complete_bipartite") {
        want(2);
        return {make_complete_bipartite(as_int(args[0]), as_int(args[1])),
                std::nullopt, spec};
    }
    if (name == "hypercube") {
        want(1);
        return {make_hypercube(as_int(args[0])), std::nullopt, spec};
    }
    if (name == "book") {
        want(2);
        Book b = make_book(as_int(args[0]), args[1]);
        return {std::move(b.graph), b.layout, spec};
    }
    if (name == "asymmetric6") {
        want(0);
        return {make_asymmetric6(), std::nullopt, spec};
    }
    throw ParseError("unknown family '" + name + "'", 0);
}

}  // namespace sympaint
