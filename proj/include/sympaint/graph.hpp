#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sympaint {

// Finite simple graph on vertex set {0..n-1}. Adjacency is kept both as
// sorted neighbor lists and as per-vertex bit rows; instances are immutable
// after construction.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list,
          std::vector<std::string> labels = {})
        : n_(vertex_count), labels_(std::move(labels)) {
        if (n_ < 0) throw DomainError("negative vertex count");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            throw DomainError("label list size differs from vertex count");
        words_ = (n_ + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        adj_.assign(n_, {});
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw DomainError("edge endpoint out of range");
            if (u == v) throw DomainError("self-loops are not allowed");
            if (test_bit(u, v)) continue;  // duplicate edges collapse
            set_bit(u, v);
            set_bit(v, u);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++edge_count_;
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return test_bit(u, v); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

    // Index of the vertex carrying `name`, or -1.
    int find_label(const std::string& name) const {
        for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
            if (labels_[v] == name) return v;
        return -1;
    }

    // Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    }
    bool test_bit(int u, int v) const {
        return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
    }

    int n_ = 0;
    int edge_count_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

}  // namespace sympaint
