#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <sympaint/errors.hpp>
#include <sympaint/perm_group.hpp>

#include "oracles.hpp"

using namespace sympaint;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

std::vector<std::vector<int>> image_tables(const std::vector<Permutation>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.images());
    return out;
}

const std::vector<Permutation> kDihedral5{perm({1, 2, 3, 4, 0}), perm({0, 4, 3, 2, 1})};
const std::vector<Permutation> kSym4{perm({1, 0, 2, 3}), perm({1, 2, 3, 0})};
const std::vector<Permutation> kAlt4{perm({1, 2, 0, 3}), perm({0, 2, 3, 1})};

}  // namespace

TEST_CASE("orders of known groups") {
    REQUIRE(PermutationGroup(5, kDihedral5).order() == 10);
    REQUIRE(PermutationGroup(4, kSym4).order() == 24);
    REQUIRE(PermutationGroup(4, kAlt4).order() == 12);
    REQUIRE(PermutationGroup(5, {}).order() == 1);
    REQUIRE(PermutationGroup(0, {}).order() == 1);
    REQUIRE(PermutationGroup::trivial(3).is_trivial());
}

TEST_CASE("order matches closure enumeration on random generator sets") {
    std::mt19937 rng(20250814);
    for (int trial = 0; trial < 30; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 5);
        std::vector<Permutation> gens;
        for (int i = 0; i < 2; ++i) {
            std::vector<int> images(degree);
            std::iota(images.begin(), images.end(), 0);
            std::shuffle(images.begin(), images.end(), rng);
            gens.push_back(perm(images));
        }
        PermutationGroup grp(degree, gens);
        REQUIRE(grp.order() == oracles::closure_order(image_tables(gens), degree));
    }
}

TEST_CASE("membership via sifting") {
    PermutationGroup a4(4, kAlt4);
    for (const auto& g : kAlt4) REQUIRE(a4.contains(g));
    REQUIRE(a4.contains(Permutation::identity(4)));
    REQUIRE_FALSE(a4.contains(perm({1, 0, 2, 3})));
    REQUIRE_FALSE(a4.contains(perm({0, 1, 3, 2})));

    std::mt19937 rng(7);
    Permutation word = Permutation::identity(4);
    for (int i = 0; i < 100; ++i) {
        word = compose(word, kAlt4[rng() % 2]);
        REQUIRE(a4.contains(word));
    }
}

TEST_CASE("orbits partition the domain") {
    PermutationGroup g(6, {perm({1, 2, 0, 3, 4, 5}), perm({0, 1, 2, 3, 5, 4})});
    REQUIRE(g.orbits() == std::vector<std::vector<int>>{{0, 1, 2}, {3}, {4, 5}});
    REQUIRE(g.order() == 6);
}

TEST_CASE("pointwise stabilizers") {
    PermutationGroup d5(5, kDihedral5);
    auto stab0 = d5.pointwise_stabilizer({0});
    REQUIRE(stab0.order() == 2);
    REQUIRE(stab0.contains(perm({0, 4, 3, 2, 1})));
    REQUIRE(d5.pointwise_stabilizer({0, 1}).is_trivial());

    PermutationGroup s4(4, kSym4);
    REQUIRE(s4.pointwise_stabilizer({0}).order() == 6);
    REQUIRE(s4.pointwise_stabilizer({3, 1}).order() == 2);
    REQUIRE(s4.pointwise_stabilizer({}).order() == 24);
}

TEST_CASE("setwise stabilizers match element filtering") {
    PermutationGroup d5(5, kDihedral5);
    REQUIRE(d5.setwise_stabilizer({0, 1}).order() == 2);
    REQUIRE(d5.setwise_stabilizer({0, 1}).contains(perm({1, 0, 4, 3, 2})));

    PermutationGroup s4(4, kSym4);
    REQUIRE(s4.setwise_stabilizer({0, 1}).order() == 4);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int degree = 4 + static_cast<int>(rng() % 3);
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        std::vector<Permutation> gens{perm(images)};
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        gens.push_back(perm(images));
        PermutationGroup grp(degree, gens);

        std::vector<int> s;
        for (int v = 0; v < degree; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty() || static_cast<int>(s.size()) == degree) s = {0};

        std::set<int> in_s(s.begin(), s.end());
        long long expected = 0;
        for (const auto& e : grp.elements()) {
            bool preserves = true;
            for (int v : s)
                if (!in_s.count(e(v))) {
                    preserves = false;
                    break;
                }
            if (preserves) ++expected;
        }
        REQUIRE(grp.setwise_stabilizer(s).order() == expected);
    }
}

TEST_CASE("element enumeration") {
    PermutationGroup d5(5, kDihedral5);
    auto elems = d5.elements();
    REQUIRE(elems.size() == 10);
    std::set<Permutation> distinct(elems.begin(), elems.end());
    REQUIRE(distinct.size() == 10);
    for (const auto& e : elems) REQUIRE(d5.contains(e));
    REQUIRE(d5.elements() == elems);
    REQUIRE_THROWS_AS(d5.elements(5), BudgetError);
}

TEST_CASE("prescribed base prefix changes the chain, not the group") {
    PermutationGroup s4(4, kSym4, {2, 2, 0});
    REQUIRE(s4.order() == 24);
    REQUIRE(s4.base().size() >= 2);
    REQUIRE(s4.base()[0] == 2);
    REQUIRE(s4.base()[1] == 0);
    REQUIRE(s4.contains(perm({3, 2, 1, 0})));
}

TEST_CASE("generator degree mismatch is rejected") {
    REQUIRE_THROWS_AS(PermutationGroup(3, {perm({1, 0, 2, 3})}), DomainError);
}
