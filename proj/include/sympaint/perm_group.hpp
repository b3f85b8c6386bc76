#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "perm.hpp"

namespace sympaint {

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }
    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace detail

// Permutation group given by generators. Construction runs deterministic
// Schreier-Sims, so every instance carries a base and strong generating set;
// order, membership and stabilizers are chain queries and never enumerate
// elements. An optional base prefix forces the chain to start with the given
// points, which is what the stabilizer routines build on.
class PermutationGroup {
public:
    static constexpr std::uint64_t kDefaultElementCap = 1'000'000;

    explicit PermutationGroup(int degree, std::vector<Permutation> generators = {},
                              const std::vector<int>& base_prefix = {})
        : degree_(degree) {
        if (degree_ < 0) throw DomainError("negative degree");
        for (const auto& g : generators)
            if (g.degree() != degree_) throw DomainError("generator degree mismatch");
        std::vector<char> seen(degree_, 0);
        for (int b : base_prefix) {
            if (b < 0 || b >= degree_) throw DomainError("base point out of range");
            if (!seen[b]) {
                seen[b] = 1;
                append_level(b);
            }
        }
        input_gens_ = std::move(generators);
        for (const auto& g : input_gens_) place_generator(g);
        schreier_sims();
    }

    static PermutationGroup trivial(int degree) { return PermutationGroup(degree); }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return input_gens_; }

    std::vector<Permutation> strong_generators() const {
        std::vector<Permutation> out;
        for (const auto& lv : levels_)
            out.insert(out.end(), lv.gens.begin(), lv.gens.end());
        return out;
    }

    std::vector<int> base() const {
        std::vector<int> out;
        out.reserve(levels_.size());
        for (const auto& lv : levels_) out.push_back(lv.base_point);
        return out;
    }

    Bigint order() const {
        Bigint o = 1;
        for (const auto& lv : levels_) o *= static_cast<long long>(lv.orbit.size());
        return o;
    }

    bool is_trivial() const {
        for (const auto& lv : levels_)
            if (lv.orbit.size() > 1) return false;
        return true;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_) return false;
        return strip(p, 0).first.is_identity();
    }

    // Orbits of the natural action, each sorted, ordered by smallest element.
    // Fixed points appear as singleton orbits.
    std::vector<std::vector<int>> orbits() const {
        detail::UnionFind uf(degree_);
        for (const auto& g : input_gens_)
            for (int v = 0; v < degree_; ++v) uf.unite(v, g(v));
        std::vector<std::vector<int>> by_root(degree_);
        for (int v = 0; v < degree_; ++v) by_root[uf.find(v)].push_back(v);
        std::vector<std::vector<int>> out;
        for (auto& part : by_root)
            if (!part.empty()) out.push_back(std::move(part));
        return out;
    }

    // Subgroup fixing every point of s individually.
    PermutationGroup pointwise_stabilizer(std::vector<int> s) const {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int v : s)
            if (v < 0 || v >= degree_) throw DomainError("stabilizer point out of range");
        PermutationGroup chain(degree_, input_gens_, s);
        std::vector<Permutation> gens;
        for (std::size_t l = s.size(); l < chain.levels_.size(); ++l)
            gens.insert(gens.end(), chain.levels_[l].gens.begin(),
                        chain.levels_[l].gens.end());
        return PermutationGroup(degree_, std::move(gens));
    }

    // Subgroup mapping the set s onto itself.
    PermutationGroup setwise_stabilizer(std::vector<int> s) const {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        std::vector<char> in_s(degree_, 0);
        for (int v : s) {
            if (v < 0 || v >= degree_) throw DomainError("stabilizer point out of range");
            in_s[v] = 1;
        }
        return constrained_subgroup(
            [in_s](int v, int img) { return in_s[v] == in_s[img]; }, s);
    }

    // Subgroup of all elements g with ok(v, g(v)) for every point v. The
    // predicate must cut out a subgroup (e.g. preserve a partition of the
    // points); base_prefix should list the constrained points so pruning
    // bites early.
    PermutationGroup constrained_subgroup(const std::function<bool(int, int)>& ok,
                                          const std::vector<int>& base_prefix) const {
        PermutationGroup chain(degree_, input_gens_, base_prefix);
        std::vector<Permutation> found;
        std::optional<PermutationGroup> span;
        detail::UnionFind uf(degree_);
        std::vector<int> done_root;

        std::function<void(std::size_t, const Permutation&)> dfs =
            [&](std::size_t level, const Permutation& p) {
                if (level == chain.levels_.size()) {
                    if (p.is_identity()) return;
                    for (int v = 0; v < degree_; ++v)
                        if (!ok(v, p(v))) return;
                    if (span && span->contains(p)) return;
                    for (int v = 0; v < degree_; ++v) uf.unite(v, p(v));
                    found.push_back(p);
                    span.emplace(degree_, found);
                    return;
                }
                const Level& L = chain.levels_[level];
                for (std::size_t i = 0; i < L.orbit.size(); ++i) {
                    int img = p(L.orbit[i]);
                    if (!ok(L.base_point, img)) continue;
                    if (level == 0) {
                        bool dup = false;
                        for (int q : done_root)
                            if (uf.same(q, img)) {
                                dup = true;
                                break;
                            }
                        if (dup) continue;
                    }
                    dfs(level + 1, compose(p, L.transversal[i]));
                    if (level == 0) done_root.push_back(img);
                }
            };
        dfs(0, Permutation::identity(degree_));
        return PermutationGroup(degree_, std::move(found));
    }

    // All elements in deterministic order (products of transversal
    // representatives, outermost level varying slowest). Refuses when the
    // order exceeds cap; chain queries stay available in that case.
    std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const {
        if (order() > cap)
            throw BudgetError("group order " + order().str() +
                              " exceeds enumeration cap " + std::to_string(cap));
        std::vector<Permutation> out;
        std::function<void(std::size_t, const Permutation&)> rec =
            [&](std::size_t level, const Permutation& p) {
                if (level == levels_.size()) {
                    out.push_back(p);
                    return;
                }
                for (const auto& t : levels_[level].transversal)
                    rec(level + 1, compose(p, t));
            };
        rec(0, Permutation::identity(degree_));
        return out;
    }

private:
    struct Level {
        int base_point;
        std::vector<Permutation> gens;         // strong generators placed here
        std::vector<int> orbit;                // discovery order, orbit[0] = base
        std::vector<int> pos;                  // orbit index per point, -1 outside
        std::vector<Permutation> transversal;  // transversal[i](base) = orbit[i]
    };

    void append_level(int b) {
        Level lv;
        lv.base_point = b;
        lv.orbit = {b};
        lv.pos.assign(degree_, -1);
        lv.pos[b] = 0;
        lv.transversal = {Permutation::identity(degree_)};
        levels_.push_back(std::move(lv));
    }

    // Places g at the first level whose base point it moves; g must fix the
    // base points of all earlier levels.
    void place_generator(const Permutation& g) {
        if (g.is_identity()) return;
        std::size_t l = 0;
        while (l < levels_.size() && g(levels_[l].base_point) == levels_[l].base_point)
            ++l;
        if (l == levels_.size()) {
            int b = 0;
            while (g(b) == b) ++b;
            append_level(b);
        }
        levels_[l].gens.push_back(g);
    }

    std::vector<const Permutation*> acting_gens(std::size_t level) const {
        std::vector<const Permutation*> out;
        for (std::size_t l = level; l < levels_.size(); ++l)
            for (const auto& g : levels_[l].gens) out.push_back(&g);
        return out;
    }

    void recompute_orbit(std::size_t level) {
        auto gens = acting_gens(level);
        Level& L = levels_[level];
        L.orbit.assign(1, L.base_point);
        L.pos.assign(degree_, -1);
        L.pos[L.base_point] = 0;
        L.transversal.assign(1, Permutation::identity(degree_));
        for (std::size_t i = 0; i < L.orbit.size(); ++i)
            for (const Permutation* x : gens) {
                int img = (*x)(L.orbit[i]);
                if (L.pos[img] < 0) {
                    L.pos[img] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(img);
                    L.transversal.push_back(compose(*x, L.transversal[i]));
                }
            }
    }

    // Factors p through the chain starting at from_level. Returns the
    // residue and the level where sifting stopped (levels_.size() when it
    // ran through; the residue is the identity exactly for members).
    std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from_level) const {
        for (std::size_t l = from_level; l < levels_.size(); ++l) {
            int idx = levels_[l].pos[p(levels_[l].base_point)];
            if (idx < 0) return {std::move(p), l};
            p = compose(invert(levels_[l].transversal[idx]), p);
        }
        return {std::move(p), levels_.size()};
    }

    // Verifies levels bottom-up; every Schreier generator must sift to the
    // identity. A surviving residue is placed where its sift stopped and
    // verification restarts from that level.
    void schreier_sims() {
        for (std::size_t l = levels_.size(); l-- > 0;) recompute_orbit(l);
        int i = static_cast<int>(levels_.size()) - 1;
        while (i >= 0) {
            recompute_orbit(i);
            bool restart = false;
            auto gens = acting_gens(i);
            for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restart; ++oi)
                for (std::size_t gi = 0; gi < gens.size() && !restart; ++gi) {
                    const Permutation x = *gens[gi];
                    int idx = levels_[i].pos[x(levels_[i].orbit[oi])];
                    Permutation schreier =
                        compose(invert(levels_[i].transversal[idx]),
                                compose(x, levels_[i].transversal[oi]));
                    if (schreier.is_identity()) continue;
                    auto [res, stop] = strip(std::move(schreier), i + 1);
                    if (res.is_identity()) continue;
                    if (stop == levels_.size()) {
                        int b = 0;
                        while (res(b) == b) ++b;
                        append_level(b);
                    }
                    levels_[stop].gens.push_back(std::move(res));
                    i = static_cast<int>(stop);
                    restart = true;
                }
            if (!restart) --i;
        }
    }

    int degree_ = 0;
    std::vector<Permutation> input_gens_;
    std::vector<Level> levels_;
};

}  // namespace sympaint
