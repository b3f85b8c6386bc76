#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aut_search.hpp"
#include "bigint.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "perm_group.hpp"

namespace sympaint {

struct SearchOptions {
    // Projected number of enumerated candidates an operation may spend
    // before refusing with BudgetError.
    std::uint64_t budget = 100'000'000;
};

namespace detail {

inline Bigint stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<Bigint> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
    return n == 0 ? Bigint(k == 0 ? 1 : 0) : row[k];
}

// Count of colorings canonical up to color renaming: partitions of an
// n-element set into at most (or exactly) max_colors blocks.
inline Bigint canonical_coloring_count(int n, int max_colors, bool exact) {
    if (exact) return stirling2(n, max_colors);
    if (n == 0) return 1;
    Bigint total = 0;
    for (int k = 0; k <= std::min(n, max_colors); ++k) total += stirling2(n, k);
    return total;
}

class BudgetMeter {
public:
    explicit BudgetMeter(std::uint64_t budget) : budget_(budget) {}
    void charge(const Bigint& candidates, const std::string& stage) {
        spent_ += candidates;
        if (spent_ > budget_)
            throw BudgetError("search for " + stage + " projects " + spent_.str() +
                              " candidates, over budget " + budget_.str());
    }

private:
    Bigint spent_ = 0;
    Bigint budget_;
};

// Sorted k-subsets of {0..n-1} in lexicographic order; f returning true
// stops the scan.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return false;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        if (f(static_cast<const std::vector<int>&>(s))) return true;
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

// Color vectors in lexicographic order where each color's first use happens
// in increasing order (restricted growth strings), i.e. one representative
// per renaming class. require_all demands that all max_colors values occur.
template <class F>
bool for_each_canonical_coloring(int length, int max_colors, bool require_all, F&& f) {
    if (max_colors < 0 || (require_all && max_colors > length)) return false;
    std::vector<int> a(length, 0);
    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == length) {
            if (require_all && used != max_colors) return false;
            return f(static_cast<const std::vector<int>&>(a));
        }
        if (require_all && max_colors - used > length - i) return false;
        int hi = std::min(used, max_colors - 1);
        for (int v = 0; v <= hi; ++v) {
            a[i] = v;
            if (rec(i + 1, used + (v == used ? 1 : 0))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace detail

// A coloring is distinguishing when only the identity automorphism
// preserves every color class.
inline bool is_distinguishing(const Graph& g, const Coloring& c) {
    c.check_total(g);
    return automorphism_group(g, c).is_trivial();
}

// A set is determining when only the identity automorphism fixes it
// pointwise.
inline bool is_determining_set(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex out of range");
    return automorphism_group(g).pointwise_stabilizer(s).is_trivial();
}

struct DistResult {
    int value = 0;
    Coloring witness;
};

struct DetResult {
    int value = 0;
    std::vector<int> witness;
};

struct MaxClassResult {
    int value = 0;
    Coloring witness;
};

namespace detail {

// Least d admitting a distinguishing coloring, with the lexicographically
// least canonical witness. Candidates whose image under some known
// automorphism is lexicographically smaller are skipped; the least witness
// is minimal over its whole orbit, so it survives the pruning.
inline DistResult dist_search(const Graph& g, const PermutationGroup& aut,
                              const SearchOptions& opts) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("distinguishing number of the empty graph");
    if (aut.is_trivial())
        return {1, Coloring(std::vector<int>(n, 0), 1)};
    std::vector<Permutation> inv_gens;
    for (const auto& p : aut.generators()) inv_gens.push_back(invert(p));

    BudgetMeter meter(opts.budget);
    for (int d = 2; d <= n; ++d) {
        meter.charge(canonical_coloring_count(n, d, true), "dist");
        DistResult out;
        bool found = for_each_canonical_coloring(n, d, true, [&](const std::vector<int>& a) {
            for (const auto& gi : inv_gens) {
                int cmp = 0;
                for (int v = 0; v < n && cmp == 0; ++v) cmp = a[gi(v)] - a[v];
                if (cmp < 0) return false;  // smaller orbit member exists
            }
            Coloring c(a, d);
            if (!automorphism_group(g, c).is_trivial()) return false;
            out = {d, std::move(c)};
            return true;
        });
        if (found) return out;
    }
    throw std::logic_error("no distinguishing coloring found up to n colors");
}

// Least size of a determining set, with the lexicographically least
// witness. Candidate vertices equivalent under the stabilizer of the chosen
// prefix are collapsed to their smallest representative.
inline DetResult det_search(const Graph& g, const PermutationGroup& aut,
                            const SearchOptions& opts) {
    int n = g.vertex_count();
    if (aut.is_trivial()) return {0, {}};

    BudgetMeter meter(opts.budget);
    std::vector<int> cur;
    std::function<bool(const PermutationGroup&, int, int)> extend =
        [&](const PermutationGroup& stab, int last, int want) -> bool {
        if (static_cast<int>(cur.size()) == want) return stab.is_trivial();
        std::vector<int> orbit_id(n, -1);
        auto orbs = stab.orbits();
        for (std::size_t i = 0; i < orbs.size(); ++i)
            for (int v : orbs[i]) orbit_id[v] = static_cast<int>(i);
        std::vector<char> tried(orbs.size(), 0);
        int slots = want - static_cast<int>(cur.size());
        for (int v = last + 1; v + slots <= n; ++v) {
            if (tried[orbit_id[v]]) continue;
            tried[orbit_id[v]] = 1;
            cur.push_back(v);
            if (extend(stab.pointwise_stabilizer({v}), v, want)) return true;
            cur.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= n; ++k) {
        meter.charge(binomial(n, k), "det");
        cur.clear();
        if (extend(aut, -1, k)) return {k, cur};
    }
    throw std::logic_error("no determining set found up to the full vertex set");
}

// Largest color class over distinguishing d-colorings. Scans class sizes
// downward; for each candidate class the complement must be a determining
// set, and the complement is colored canonically with the other d-1 colors.
inline MaxClassResult max_class_search(const Graph& g, const PermutationGroup& aut,
                                       int d, const SearchOptions& opts) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("paint cost of the empty graph");
    if (d < 1) throw DomainError("paint cost needs at least one color");

    BudgetMeter meter(opts.budget);
    for (int big = n; big >= 1; --big) {
        int rest = n - big;
        meter.charge(binomial(n, big) * canonical_coloring_count(rest, d - 1, false),
                     "paint cost with " + std::to_string(d) + " colors");
        MaxClassResult out;
        bool found = for_each_subset(n, big, [&](const std::vector<int>& cls) {
            std::vector<char> in_cls(n, 0);
            for (int v : cls) in_cls[v] = 1;
            std::vector<int> others;
            others.reserve(rest);
            for (int v = 0; v < n; ++v)
                if (!in_cls[v]) others.push_back(v);
            if (!aut.pointwise_stabilizer(others).is_trivial()) return false;
            return for_each_canonical_coloring(
                rest, d - 1, false, [&](const std::vector<int>& pat) {
                    std::vector<int> full(n, 0);
                    for (int i = 0; i < rest; ++i) full[others[i]] = 1 + pat[i];
                    Coloring c(std::move(full), d);
                    if (!automorphism_group(g, c).is_trivial()) return false;
                    out = {big, std::move(c)};
                    return true;
                });
        });
        if (found) return out;
    }
    throw DomainError("graph admits no distinguishing coloring with " +
                      std::to_string(d) + " colors");
}

// Least size of the pinned class over distinguishing colorings that use all
// d colors. Scans the pinned size upward; every enumerated coloring keeps
// the other d-1 classes nonempty, so color classes are never empty.
inline int cost_search(const Graph& g, const PermutationGroup& aut, int d,
                       const SearchOptions& opts) {
    int n = g.vertex_count();
    if (n == 0) throw DomainError("cost number of the empty graph");
    if (d < 1) throw DomainError("cost number needs at least one color");
    if (d > n)
        throw DomainError("cost number needs d <= vertex count (colorings must use every color)");

    BudgetMeter meter(opts.budget);
    for (int t = 1; t * d <= n; ++t) {
        int rest = n - t;
        meter.charge(binomial(n, t) * canonical_coloring_count(rest, d - 1, true),
                     "cost number with " + std::to_string(d) + " colors");
        bool found = for_each_subset(n, t, [&](const std::vector<int>& cls) {
            std::vector<char> in_cls(n, 0);
            for (int v : cls) in_cls[v] = 1;
            std::vector<int> others;
            others.reserve(rest);
            for (int v = 0; v < n; ++v)
                if (!in_cls[v]) others.push_back(v);
            return for_each_canonical_coloring(
                rest, d - 1, true, [&](const std::vector<int>& pat) {
                    std::vector<int> full(n, 0);
                    for (int i = 0; i < rest; ++i) full[others[i]] = 1 + pat[i];
                    // any known automorphism preserving the classes rejects
                    // the candidate without a colored search
                    for (const auto& gen : aut.generators()) {
                        if (gen.is_identity()) continue;
                        bool preserves = true;
                        for (int v = 0; v < n && preserves; ++v)
                            preserves = full[gen(v)] == full[v];
                        if (preserves) return false;
                    }
                    return automorphism_group(g, Coloring(std::move(full), d)).is_trivial();
                });
        });
        if (found) return t;
    }
    throw DomainError("graph admits no distinguishing coloring using all " +
                      std::to_string(d) + " colors");
}

}  // namespace detail

inline DistResult distinguishing_number(const Graph& g, const SearchOptions& opts = {}) {
    return detail::dist_search(g, automorphism_group(g), opts);
}

inline DetResult determining_number(const Graph& g, const SearchOptions& opts = {}) {
    return detail::det_search(g, automorphism_group(g), opts);
}

// Largest color class attainable by a distinguishing d-coloring.
inline MaxClassResult max_color_class(const Graph& g, int d,
                                      const SearchOptions& opts = {}) {
    return detail::max_class_search(g, automorphism_group(g), d, opts);
}

// Paint cost with d colors: vertices left outside the largest class of the
// best distinguishing d-coloring.
inline int paint_cost(const Graph& g, int d, const SearchOptions& opts = {}) {
    return g.vertex_count() - max_color_class(g, d, opts).value;
}

// Cost number with d colors: least possible size of the smallest class over
// distinguishing colorings that use every one of the d colors.
inline int cost_number(const Graph& g, int d, const SearchOptions& opts = {}) {
    return detail::cost_search(g, automorphism_group(g), d, opts);
}

inline int upper_paint_cost(const Graph& g, const SearchOptions& opts = {}) {
    auto aut = automorphism_group(g);
    int d = detail::dist_search(g, aut, opts).value;
    return g.vertex_count() - detail::max_class_search(g, aut, d, opts).value;
}

inline int lower_paint_cost(const Graph& g, const SearchOptions& opts = {}) {
    auto aut = automorphism_group(g);
    int d = detail::det_search(g, aut, opts).value + 1;
    return g.vertex_count() - detail::max_class_search(g, aut, d, opts).value;
}

// Least d whose paint cost already equals the determining number.
inline int frugal_distinguishing_number(const Graph& g, const SearchOptions& opts = {}) {
    auto aut = automorphism_group(g);
    int det = detail::det_search(g, aut, opts).value;
    int d = detail::dist_search(g, aut, opts).value;
    while (true) {
        int pc = g.vertex_count() - detail::max_class_search(g, aut, d, opts).value;
        if (pc == det) return d;
        if (d > det)
            throw std::logic_error("paint cost missed the determining number at d = det + 1");
        ++d;
    }
}

namespace detail {

// Automorphisms that fix s setwise and preserve the given classes on s,
// i.e. the obstruction group for set distinguishing.
inline PermutationGroup class_preserving_setstab(const Graph& g,
                                                 const PermutationGroup& aut,
                                                 const std::vector<int>& s,
                                                 const std::vector<int>& pattern) {
    int n = g.vertex_count();
    std::vector<int> color_of(n, -1);
    for (std::size_t i = 0; i < s.size(); ++i) color_of[s[i]] = pattern[i];
    return aut.constrained_subgroup(
        [&color_of](int v, int img) {
            if (color_of[v] < 0) return color_of[img] < 0;
            return color_of[v] == color_of[img];
        },
        s);
}

}  // namespace detail

// A coloring of s (pattern[i] colors s[i]) is set-distinguishing when every
// automorphism that maps s onto itself respecting the classes fixes s
// pointwise. Returns a violating automorphism, or nothing when the coloring
// is set-distinguishing.
inline std::optional<Permutation> set_distinguishing_violation(
    const Graph& g, const std::vector<int>& s, const std::vector<int>& pattern) {
    if (s.empty()) throw DomainError("set distinguishing needs a nonempty set");
    if (s.size() != pattern.size())
        throw DomainError("pattern size differs from set size");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex out of range");
        if (seen[v]) throw DomainError("duplicate vertex in set");
        seen[v] = 1;
    }
    auto k = detail::class_preserving_setstab(g, automorphism_group(g), s, pattern);
    for (const auto& gen : k.generators())
        for (int v : s)
            if (gen(v) != v) return gen;
    return std::nullopt;
}

inline bool is_set_distinguishing(const Graph& g, const std::vector<int>& s,
                                  const std::vector<int>& pattern) {
    return !set_distinguishing_violation(g, s, pattern).has_value();
}

// Least number of colors in a set-distinguishing coloring of s.
inline int set_distinguishing_number(const Graph& g, const std::vector<int>& s,
                                     const SearchOptions& opts = {}) {
    if (s.empty()) throw DomainError("set distinguishing needs a nonempty set");
    auto aut = automorphism_group(g);
    int len = static_cast<int>(s.size());
    detail::BudgetMeter meter(opts.budget);
    for (int k = 1; k <= len; ++k) {
        meter.charge(detail::canonical_coloring_count(len, k, true),
                     "set distinguishing number");
        bool found = detail::for_each_canonical_coloring(
            len, k, true, [&](const std::vector<int>& pat) {
                auto grp = detail::class_preserving_setstab(g, aut, s, pat);
                for (const auto& gen : grp.generators())
                    for (int v : s)
                        if (gen(v) != v) return false;
                return true;
            });
        if (found) return k;
    }
    throw DomainError("set admits no set-distinguishing coloring (is it determining?)");
}

struct ParamReport {
    int dist = -1;
    int det = -1;
    int fdist = -1;
    int upper_paint = -1;
    int lower_paint = -1;
    std::map<int, int> paint_cost;  // keyed by color count d
    Coloring dist_witness;
    std::map<int, Coloring> paint_witnesses;
    std::vector<int> determining_witness;
    bool complete = true;
    std::vector<std::string> skipped;
};

// One-call summary: dist, det, paint costs for d = dist .. det+1, the
// derived upper/lower paint costs and the frugal distinguishing number.
// Stages over budget are recorded in `skipped` instead of failing the whole
// report; every emitted witness is re-verified first.
inline ParamReport full_report(const Graph& g, const SearchOptions& opts = {}) {
    ParamReport r;
    auto aut = automorphism_group(g);
    auto skip = [&r](const std::string& field) {
        r.skipped.push_back(field);
        r.complete = false;
    };

    try {
        auto d = detail::dist_search(g, aut, opts);
        r.dist = d.value;
        r.dist_witness = std::move(d.witness);
    } catch (const BudgetError&) {
        skip("dist");
    }
    try {
        auto d = detail::det_search(g, aut, opts);
        r.det = d.value;
        r.determining_witness = std::move(d.witness);
    } catch (const BudgetError&) {
        skip("det");
    }

    if (r.dist >= 0 && r.det >= 0) {
        bool paint_ok = true;
        for (int d = r.dist; d <= r.det + 1; ++d) {
            try {
                auto m = detail::max_class_search(g, aut, d, opts);
                r.paint_cost[d] = g.vertex_count() - m.value;
                r.paint_witnesses[d] = std::move(m.witness);
                if (r.fdist < 0 && r.paint_cost[d] == r.det) r.fdist = d;
            } catch (const BudgetError&) {
                skip("paint_cost");
                paint_ok = false;
                break;
            }
        }
        if (paint_ok) {
            r.upper_paint = r.paint_cost.at(r.dist);
            r.lower_paint = r.paint_cost.at(r.det + 1);
        } else {
            skip("upper_paint");
            skip("lower_paint");
            if (r.fdist < 0) skip("fdist");
        }
    } else {
        skip("paint_cost");
        skip("upper_paint");
        skip("lower_paint");
        skip("fdist");
    }

    if (r.dist >= 0 && !is_distinguishing(g, r.dist_witness))
        throw std::logic_error("dist witness failed re-verification");
    for (const auto& [d, w] : r.paint_witnesses)
        if (!is_distinguishing(g, w))
            throw std::logic_error("paint witness failed re-verification");
    if (r.det >= 0 && !is_determining_set(g, r.determining_witness))
        throw std::logic_error("determining witness failed re-verification");
    return r;
}

}  // namespace sympaint
