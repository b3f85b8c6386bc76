#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "perm_group.hpp"

namespace sympaint {

// Ordered partition of {0..n-1}; cells hold sorted vertex lists and cell
// order is significant.
struct OrderedPartition {
    std::vector<std::vector<int>> cells;

    static OrderedPartition unit(int n) {
        OrderedPartition p;
        if (n > 0) {
            p.cells.emplace_back(n);
            for (int v = 0; v < n; ++v) p.cells[0][v] = v;
        }
        return p;
    }

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }

    std::vector<int> cell_sizes() const {
        std::vector<int> out;
        out.reserve(cells.size());
        for (const auto& c : cells) out.push_back(static_cast<int>(c.size()));
        return out;
    }
};

namespace detail {

// Performs one split if any cell is not yet equitable: scanning splitter
// cells then target cells in index order, it breaks the first non-uniform
// target by neighbor count into subcells ordered by ascending count.
// Both the scan order and the subcell order depend only on cell indices and
// counts, so the refinement commutes with relabeling.
inline bool split_once(const Graph& g, std::vector<std::vector<int>>& cells,
                       std::vector<int>& count) {
    for (std::size_t wi = 0; wi < cells.size(); ++wi) {
        for (int w : cells[wi])
            for (int x : g.neighbors(w)) ++count[x];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const auto& cell = cells[ci];
            if (cell.size() <= 1) continue;
            bool uniform = true;
            for (int v : cell)
                if (count[v] != count[cell[0]]) {
                    uniform = false;
                    break;
                }
            if (uniform) continue;

            std::vector<std::pair<int, int>> keyed;  // (count, vertex)
            keyed.reserve(cell.size());
            for (int v : cell) keyed.emplace_back(count[v], v);
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::vector<int>> sub;
            for (const auto& [k, v] : keyed) {
                if (sub.empty() || count[sub.back().back()] != k) sub.emplace_back();
                sub.back().push_back(v);
            }
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + sub.size() - 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i == ci)
                    for (auto& s : sub) next.push_back(std::move(s));
                else
                    next.push_back(std::move(cells[i]));
            }
            cells = std::move(next);
            std::fill(count.begin(), count.end(), 0);
            return true;
        }
        std::fill(count.begin(), count.end(), 0);
    }
    return false;
}

inline void refine_in_place(const Graph& g, std::vector<std::vector<int>>& cells) {
    std::vector<int> count(g.vertex_count(), 0);
    while (split_once(g, cells, count)) {
    }
}

}  // namespace detail

// Coarsest equitable refinement of p: every cell ends up with a uniform
// neighbor count into every other cell. Cells keep a deterministic order.
inline OrderedPartition refine(const Graph& g, OrderedPartition p) {
    std::vector<char> seen(g.vertex_count(), 0);
    int covered = 0;
    for (auto& cell : p.cells) {
        for (int v : cell) {
            if (v < 0 || v >= g.vertex_count() || seen[v])
                throw DomainError("cells do not partition the vertex set");
            seen[v] = 1;
            ++covered;
        }
        std::sort(cell.begin(), cell.end());
    }
    if (covered != g.vertex_count())
        throw DomainError("cells do not partition the vertex set");
    detail::refine_in_place(g, p.cells);
    return p;
}

namespace detail {

// Individualize-refine search for the (color preserving) automorphism
// group. The leftmost root-to-leaf path fixes a reference vertex order;
// other discrete leaves are compared against it and the resulting candidate
// map is checked explicitly, so emitted generators are automorphisms by
// construction. Non-reference subtrees stop after their first success
// (deeper elements are products of generators found elsewhere); siblings at
// reference nodes are pruned to one representative per orbit of the
// already-found automorphisms that fix the branch prefix.
struct AutSearch {
    const Graph& g;
    const std::vector<int>* colors;
    std::vector<int> first_leaf;
    std::vector<std::vector<int>> first_inv;
    std::vector<int> prefix;
    std::vector<Permutation> gens;

    explicit AutSearch(const Graph& graph, const std::vector<int>* cols)
        : g(graph), colors(cols) {}

    bool preserves(const Permutation& s) const {
        int n = g.vertex_count();
        if (colors)
            for (int v = 0; v < n; ++v)
                if ((*colors)[s(v)] != (*colors)[v]) return false;
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (u < v && !g.adjacent(s(u), s(v))) return false;
        return true;
    }

    static int target_cell(const std::vector<std::vector<int>>& cells) {
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (best < 0 || cells[i].size() < best_size)) {
                best = static_cast<int>(i);
                best_size = cells[i].size();
            }
        return best;
    }

    static std::vector<std::vector<int>> individualize(
        const std::vector<std::vector<int>>& cells, int ci, int v) {
        std::vector<std::vector<int>> out;
        out.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (static_cast<int>(i) == ci) {
                out.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[i].size() - 1);
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                out.push_back(std::move(rest));
            } else {
                out.push_back(cells[i]);
            }
        }
        return out;
    }

    // Orbit classes of the found automorphisms that fix every prefix vertex.
    UnionFind prefix_orbits() const {
        UnionFind uf(g.vertex_count());
        for (const auto& a : gens) {
            bool fixes = true;
            for (int v : prefix)
                if (a(v) != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.vertex_count(); ++v) uf.unite(v, a(v));
        }
        return uf;
    }

    // Returns true when an automorphism was recorded in this subtree, which
    // makes every non-reference ancestor unwind immediately.
    bool explore(std::vector<std::vector<int>> cells, std::size_t level, bool reference) {
        refine_in_place(g, cells);
        OrderedPartition p{std::move(cells)};
        auto inv = p.cell_sizes();
        if (reference) {
            first_inv.push_back(inv);
        } else if (level >= first_inv.size() || inv != first_inv[level]) {
            return false;
        }

        if (p.discrete()) {
            std::vector<int> flat;
            flat.reserve(p.cells.size());
            for (const auto& c : p.cells) flat.push_back(c[0]);
            if (reference) {
                first_leaf = std::move(flat);
                return false;
            }
            std::vector<int> images(g.vertex_count());
            for (std::size_t i = 0; i < flat.size(); ++i) images[first_leaf[i]] = flat[i];
            Permutation cand(std::move(images));
            if (preserves(cand)) {
                gens.push_back(std::move(cand));
                return true;
            }
            return false;
        }

        int ci = target_cell(p.cells);
        std::vector<int> cell = p.cells[ci];
        if (reference) {
            prefix.push_back(cell[0]);
            explore(individualize(p.cells, ci, cell[0]), level + 1, true);
            prefix.pop_back();
            std::vector<int> done{cell[0]};
            std::size_t gens_at_build = gens.size();
            UnionFind uf = prefix_orbits();
            for (std::size_t k = 1; k < cell.size(); ++k) {
                int v = cell[k];
                if (gens.size() != gens_at_build) {
                    uf = prefix_orbits();
                    gens_at_build = gens.size();
                }
                bool dup = false;
                for (int u : done)
                    if (uf.same(u, v)) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                explore(individualize(p.cells, ci, v), level + 1, false);
                done.push_back(v);
            }
            return false;
        }
        for (int v : cell)
            if (explore(individualize(p.cells, ci, v), level + 1, false)) return true;
        return false;
    }
};

inline PermutationGroup automorphism_search(const Graph& g, const std::vector<int>* colors) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> root;
    if (colors) {
        int cmax = 0;
        for (int c : *colors) cmax = std::max(cmax, c);
        std::vector<std::vector<int>> by_color(cmax + 1);
        for (int v = 0; v < n; ++v) by_color[(*colors)[v]].push_back(v);
        for (auto& cell : by_color)
            if (!cell.empty()) root.push_back(std::move(cell));
    } else if (n > 0) {
        root.push_back(std::vector<int>(n));
        for (int v = 0; v < n; ++v) root[0][v] = v;
    }
    AutSearch search(g, colors);
    search.explore(std::move(root), 0, true);
    return PermutationGroup(n, std::move(search.gens));
}

}  // namespace detail

inline PermutationGroup automorphism_group(const Graph& g) {
    return detail::automorphism_search(g, nullptr);
}

// Automorphisms preserving each color class setwise.
inline PermutationGroup automorphism_group(const Graph& g, const Coloring& c) {
    c.check_total(g);
    return detail::automorphism_search(g, &c.assignment);
}

inline bool is_asymmetric(const Graph& g) { return automorphism_group(g).is_trivial(); }

}  // namespace sympaint
