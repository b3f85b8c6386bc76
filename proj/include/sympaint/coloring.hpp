#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sympaint {

// Total assignment of colors 0..colors-1 to vertices. Not every color has
// to appear; the parameter definitions say where surjectivity matters.
struct Coloring {
    std::vector<int> assignment;
    int colors = 0;

    Coloring() = default;
    Coloring(std::vector<int> a, int d) : assignment(std::move(a)), colors(d) {
        if (colors < 0) throw DomainError("negative color count");
        for (int c : assignment)
            if (c < 0 || c >= colors) throw DomainError("color index out of range");
    }

    int size() const { return static_cast<int>(assignment.size()); }
    int operator[](int v) const { return assignment[v]; }

    int colors_used() const {
        std::vector<char> seen(colors, 0);
        int used = 0;
        for (int c : assignment) used += !std::exchange(seen[c], char(1));
        return used;
    }

    void check_total(const Graph& g) const {
        if (size() != g.vertex_count())
            throw DomainError("coloring is not total on the vertex set");
    }
};

}  // namespace sympaint
