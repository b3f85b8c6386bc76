#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <sympaint/bigint.hpp>
#include <sympaint/errors.hpp>
#include <sympaint/families.hpp>
#include <sympaint/formulas.hpp>

using Catch::Matchers::ContainsSubstring;
using namespace sympaint;

namespace {

bool any_note_contains(const std::vector<std::string>& notes, const std::string& needle) {
    for (const auto& note : notes)
        if (note.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("word-count identities") {
    for (int m = 3; m <= 12; ++m)
        for (long long d = 1; d <= 5; ++d) {
            REQUIRE(book_nj(m, d, m - 2) == bigpow(d, m - 2));
            REQUIRE(book_Nj(m, d, m - 2) == (m - 2) * bigpow(d, m - 3));
        }
}

TEST_CASE("word counts at fixed points") {
    REQUIRE(book_nj(8, 3, 0) == 1);
    REQUIRE(book_nj(8, 3, 4) == 473);
    REQUIRE(book_nj(8, 3, 5) == 665);
    REQUIRE(book_nj(8, 3, 6) == 729);
    REQUIRE(book_Nj(8, 3, 0) == 6);
    REQUIRE(book_Nj(8, 3, 4) == 1266);
    REQUIRE(book_Nj(8, 3, 6) == 1458);
    REQUIRE_THROWS_AS(book_nj(8, 3, 7), DomainError);
    REQUIRE_THROWS_AS(book_nj(8, 3, -1), DomainError);
    REQUIRE_THROWS_AS(book_Nj(8, 0, 2), DomainError);
}

TEST_CASE("book determining and distinguishing numbers") {
    REQUIRE(book_det(8, 473) == 472);
    REQUIRE(book_det(4, 6) == 5);
    REQUIRE(book_det(3, 7) == 7);
    REQUIRE(book_dist(8, 473) == 3);
    REQUIRE(book_dist(8, 64) == 2);
    REQUIRE(book_dist(8, 65) == 3);
    REQUIRE(book_dist(8, 729) == 3);
    REQUIRE(book_dist(8, 730) == 4);
    REQUIRE(book_dist(4, 4) == 2);
    REQUIRE(book_dist(4, 5) == 3);
    REQUIRE(book_dist(4, 2) == 2);
    REQUIRE(book_dist(3, 7) == 7);
    REQUIRE_THROWS_AS(book_dist(2, 5), DomainError);
    REQUIRE_THROWS_AS(book_dist(4, 1), DomainError);
}

TEST_CASE("book frugal distinguishing number") {
    REQUIRE(book_fdist(4, 2) == 2);
    REQUIRE(book_fdist(4, 3) == 3);
    REQUIRE(book_fdist(4, 6) == 4);
    REQUIRE(book_fdist(8, 473) == 80);
    REQUIRE(book_fdist(8, 703) == 119);
    REQUIRE(book_fdist(3, 6) == 6);
}

TEST_CASE("book paint cost, exact cells") {
    auto pc = book_paint_cost(8, 473, 3);
    REQUIRE(pc.exact);
    REQUIRE(pc.value == 1573);
    REQUIRE(pc.notes.empty());
    REQUIRE(pc.contains(1573));
    REQUIRE_FALSE(pc.contains(1574));

    REQUIRE(book_paint_cost(4, 6, 3).value == 6);
    REQUIRE(book_paint_cost(4, 3, 2).value == 3);   // n on the with-first boundary
    REQUIRE(book_paint_cost(8, 665, 3).value == 2533);
    REQUIRE(book_paint_cost(8, 729, 3).value == 2917);
    REQUIRE(book_paint_cost(3, 5, 5).value == 5);
    REQUIRE(book_paint_cost(3, 5, 9).value == 5);
}

TEST_CASE("book paint cost, interval cells") {
    auto pc = book_paint_cost(4, 2, 2);
    REQUIRE_FALSE(pc.exact);
    REQUIRE(pc.value == 1);
    REQUIRE(pc.upper_exclusive == 3);
    REQUIRE(pc.contains(1));
    REQUIRE(pc.contains(2));
    REQUIRE_FALSE(pc.contains(3));
    REQUIRE(pc.str() == "[1,3)");
}

TEST_CASE("book paint cost annotates the published mismatch") {
    auto pc = book_paint_cost(8, 703, 3);
    REQUIRE(pc.exact);
    REQUIRE(pc.value == 2760);
    REQUIRE(any_note_contains(pc.notes, "2762"));
    REQUIRE(book_paint_cost(8, 703, 4).notes.empty());
}

TEST_CASE("paint cost needs enough colors") {
    REQUIRE_THROWS_AS(book_paint_cost(4, 6, 2), DomainError);
    try {
        book_paint_cost(4, 6, 2);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        REQUIRE_THAT(e.what(), ContainsSubstring("needs 3"));
    }
}

TEST_CASE("paint bounds stay consistent") {
    auto b = book_upper_paint_bounds(8, 473);
    REQUIRE(b.lower == 1573);
    REQUIRE(b.upper_exclusive == 1574);
    REQUIRE(b.lower_source == "word budget");
    REQUIRE(b.notes.empty());

    auto c = book_upper_paint_bounds(8, 703);
    REQUIRE(c.lower == 2760);
    REQUIRE(c.upper_exclusive == 2761);
    REQUIRE_FALSE(c.notes.empty());

    auto d = book_upper_paint_bounds(4, 2);
    REQUIRE(d.lower == 1);
    REQUIRE(d.upper_exclusive == 3);

    for (int m = 4; m <= 6; ++m)
        for (long long n = 2; n <= 40; ++n) {
            auto bounds = book_upper_paint_bounds(m, n);
            REQUIRE(bounds.lower < bounds.upper_exclusive);
            auto pc = book_paint_cost(m, n, book_dist(m, n));
            REQUIRE(bounds.lower <= pc.value);
            if (pc.exact) REQUIRE(pc.value < bounds.upper_exclusive);
        }
    REQUIRE_THROWS_AS(book_upper_paint_bounds(3, 5), DomainError);
}

TEST_CASE("book params bundle") {
    auto p = book_params(8, 703, 3);
    REQUIRE(p.vertices == 4220);
    REQUIRE(p.det == 702);
    REQUIRE(p.dist == 3);
    REQUIRE(p.fdist == 119);
    REQUIRE(p.paint.value == 2760);
    REQUIRE(any_note_contains(p.notes, "2762"));
    REQUIRE(any_note_contains(p.notes, "118"));

    auto q = book_params(8, 473);
    REQUIRE(q.d == 3);  // defaults to dist
    REQUIRE(q.paint.value == 1573);
    REQUIRE(q.notes.empty());

    REQUIRE(book_params(4, 6).vertices == 14);
}

TEST_CASE("product closed forms") {
    auto p1 = product_params(1);
    REQUIRE(p1.q == 2);
    REQUIRE(p1.dist == 2);
    REQUIRE(p1.paint2 == 1);
    REQUIRE(p1.det == 1);
    REQUIRE(p1.fdist == 2);

    auto p6 = product_params(6);
    REQUIRE(p6.q == 64);
    REQUIRE(p6.paint2 == 192);
    REQUIRE(p6.det == 63);
    REQUIRE(p6.fdist == 12);

    auto p7 = product_params(7);
    REQUIRE(p7.paint2 == 448);
    REQUIRE(p7.det == 127);
    REQUIRE(p7.fdist == 20);

    auto p40 = product_params(40);
    REQUIRE(p40.fdist == (bigpow(2, 40) - 2) / 40 + 2);

    for (int m : {-1, 0, 2, 3, 4, 5}) REQUIRE_THROWS_AS(product_params(m), DomainError);
}

TEST_CASE("product fiber test validates input") {
    Graph h = make_asymmetric6();
    Coloring zeros(std::vector<int>(12, 0), 1);
    REQUIRE_FALSE(product_is_distinguishing(2, h, zeros));
    std::vector<int> a(12, 0);
    a[7] = 1;
    REQUIRE(product_is_distinguishing(2, h, Coloring(a, 2)));
    REQUIRE_THROWS_AS(product_is_distinguishing(0, h, zeros), DomainError);
    REQUIRE_THROWS_AS(product_is_distinguishing(2, make_cycle(5), Coloring(std::vector<int>(10, 0), 1)),
                      DomainError);
    REQUIRE_THROWS_AS(product_is_distinguishing(3, h, zeros), DomainError);
}
