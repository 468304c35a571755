#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irrcount/hessfam.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace irrcount;

namespace {

const Int kBudget(10'000'000);

}  // namespace

TEST_CASE("build_matrix structure")
{
    const FamilyParams k1h2(1, 2);
    const IntMatrix m = build_matrix(BMatrix(k1h2, {Int(1)}));
    CHECK(m == IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});

    const IntMatrix z = build_matrix(BMatrix::zero(FamilyParams(2, 3)));
    IntMatrix expected(5);
    expected.at(0, 1) = 1;
    expected.at(1, 2) = 1;
    expected.at(2, 3) = 1;
    expected.at(3, 4) = 3;
    CHECK(z == expected);

    // k = 1 has no H-valued superdiagonal entries
    const IntMatrix k1 = build_matrix(BMatrix::zero(FamilyParams(1, 7)));
    for (const auto& e : k1.entries()) CHECK(e != 7);
}

TEST_CASE("free block indexing follows rows 1..k and columns -k..-1")
{
    const FamilyParams fp(2, 5);
    const BMatrix b(fp, {Int(1), Int(2), Int(3), Int(4)});
    CHECK(b.free_entry(1, -2) == 1);
    CHECK(b.free_entry(1, -1) == 2);
    CHECK(b.free_entry(2, -2) == 3);
    CHECK(b.free_entry(2, -1) == 4);
    const IntMatrix m = build_matrix(b);
    // row i sits at i + k, column j at j + k
    CHECK(m.at(3, 0) == 1);
    CHECK(m.at(3, 1) == 2);
    CHECK(m.at(4, 0) == 3);
    CHECK(m.at(4, 1) == 4);
    CHECK_THROWS_AS(b.free_entry(0, -1), std::out_of_range);
    CHECK_THROWS_AS(BMatrix(fp, {Int(5), Int(0), Int(0), Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(BMatrix(fp, {Int(0)}), std::invalid_argument);
}

TEST_CASE("every member of B is lower Hessenberg, traceless, with entries in [0, H]")
{
    for (auto [k, h] : std::vector<std::pair<unsigned, long>>{{1, 2}, {2, 3}, {3, 2}}) {
        const FamilyParams fp(k, Int(h));
        BlockStream s(fp);
        while (auto b = s.next()) {
            const IntMatrix m = build_matrix(*b);
            CHECK(m.is_lower_hessenberg());
            CHECK(m.trace() == 0);
            for (const auto& e : m.entries()) {
                CHECK(e >= 0);
                CHECK(e <= h);
            }
        }
    }
}

TEST_CASE("charpoly_B examples")
{
    for (long c : {0, 1}) {
        const BMatrix b(FamilyParams(1, 2), {Int(c)});
        CHECK(oracle::cofactor_charpoly(build_matrix(b)) == IntPoly{-c, 0, 0, 1});
        CHECK(charpoly_b(b) == IntPoly{-c, 0, 0, 1});
    }
    const BMatrix z = BMatrix::zero(FamilyParams(2, 2));
    CHECK(charpoly_b(z) == IntPoly::monomial(1, 5));
    CHECK(charpoly_interp(build_matrix(z)) == IntPoly::monomial(1, 5));

    std::mt19937_64 rng(1);
    const FamilyParams fp(2, 3);
    std::vector<Int> free;
    for (int i = 0; i < 4; ++i) free.emplace_back(static_cast<long>(rng() % 3));
    const BMatrix b(fp, free);
    CHECK(f_membership(charpoly_b(b), fp).has_value());
    CHECK(charpoly_b(b) == charpoly_interp(build_matrix(b)));
}

TEST_CASE("f_membership")
{
    const FamilyParams fp(1, 2);
    auto m = f_membership(IntPoly{-1, 0, 0, 1}, fp);
    REQUIRE(m);
    CHECK(m->f == std::vector<Int>{1});
    CHECK_FALSE(f_membership(IntPoly{-2, 0, 0, 1}, fp));
    CHECK_FALSE(f_membership(IntPoly{1, 0, 0, 1}, fp));  // negated coefficient -1 < 0
    CHECK_FALSE(f_membership(IntPoly{0, 0, 0, 0, -1, 1}, FamilyParams(2, 3)));
    CHECK_FALSE(f_membership(IntPoly{0, 0, 0, 0, -1, 1}, FamilyParams(2, 100)));
    CHECK_FALSE(f_membership(IntPoly{0, 0, 0, 2}, fp));

    // divisible slot: k = 2, H = 3 needs 3 | f_0 and f_0 / 3 < 3
    const FamilyParams k2(2, 3);
    CHECK(f_membership(IntPoly{-6, 0, 0, 0, 0, 1}, k2));
    CHECK_FALSE(f_membership(IntPoly{-4, 0, 0, 0, 0, 1}, k2));
    CHECK_FALSE(f_membership(IntPoly{-9, 0, 0, 0, 0, 1}, k2));
    CHECK(f_membership(IntPoly{0, -8, 0, 0, 0, 1}, k2));
    CHECK_FALSE(f_membership(IntPoly{0, -9, 0, 0, 0, 1}, k2));
}

TEST_CASE("slot ranges")
{
    const auto s = slot_ranges(FamilyParams(2, 3));
    REQUIRE(s.size() == 3);
    CHECK((s[0].index == 2 && s[0].multiplier == 1 && s[0].range == 3));
    CHECK((s[1].index == 1 && s[1].multiplier == 1 && s[1].range == 9));
    CHECK((s[2].index == 0 && s[2].multiplier == 3 && s[2].range == 3));

    const auto s1 = slot_ranges(FamilyParams(1, 5));
    REQUIRE(s1.size() == 1);
    CHECK((s1[0].index == 0 && s1[0].multiplier == 1 && s1[0].range == 5));
}

TEST_CASE("family size")
{
    CHECK(family_size(FamilyParams(1, 2)) == 2);
    CHECK(family_size(FamilyParams(2, 3)) == 81);
    CHECK(family_size(FamilyParams(3, 2)) == 512);
    CHECK(family_size(FamilyParams(4, 7)) == pow_ui(7, 16));
}

TEST_CASE("enumerate_F")
{
    FamilyStream s(FamilyParams(1, 3));
    std::vector<IntPoly> got;
    while (auto f = s.next()) got.push_back(f->to_poly());
    CHECK(got == std::vector<IntPoly>{{0, 0, 0, 1}, {-1, 0, 0, 1}, {-2, 0, 0, 1}});

    for (auto [k, h] : std::vector<std::pair<unsigned, long>>{{2, 2}, {2, 3}, {3, 2}, {1, 5}}) {
        const FamilyParams fp(k, Int(h));
        FamilyStream stream(fp);
        std::uint64_t count = 0;
        std::vector<Int> prev;
        while (auto f = stream.next()) {
            ++count;
            auto back = f_membership(f->to_poly(), fp);
            REQUIRE(back);
            CHECK(*back == *f);
            const auto digits = f->digits();
            if (!prev.empty()) CHECK(prev < digits);
            prev = digits;
        }
        CHECK(Int(static_cast<unsigned long>(count)) == family_size(fp));
    }
}

TEST_CASE("streams restart at any index")
{
    const FamilyParams fp(2, 3);
    FamilyStream full(fp);
    std::vector<FCoefficients> all;
    while (auto f = full.next()) all.push_back(*f);
    FamilyStream tail(fp, Int(40));
    for (std::size_t i = 40; i < all.size(); ++i) CHECK(*tail.next() == all[i]);
    CHECK_FALSE(tail.next());
    CHECK_FALSE(FamilyStream(fp, Int(81)).next());
}

TEST_CASE("bijection check")
{
    for (auto [k, h, expected] : std::vector<std::tuple<unsigned, long, unsigned>>{
             {1, 2, 2}, {1, 5, 5}, {2, 2, 16}, {2, 3, 81}, {3, 2, 512}}) {
        const auto rep = bijection_check(FamilyParams(k, Int(h)), kBudget);
        CHECK(rep.pass());
        CHECK(rep.images == expected);
        CHECK(rep.distinct == expected);
        CHECK(rep.violations.empty());
    }
    CHECK_THROWS_AS(bijection_check(FamilyParams(3, 10), kBudget), BudgetExceeded);
}

TEST_CASE("bijection check at H = 1 is flagged degenerate")
{
    const auto rep = bijection_check(FamilyParams(2, 1), kBudget);
    CHECK(rep.degenerate);
    CHECK(rep.pass());
    CHECK(rep.distinct == 1);
}

TEST_CASE("partitioned image sweep is independent of worker count")
{
    const FamilyParams fp(2, 5);
    const auto one = family_image_keys(fp, kBudget, 1);
    CHECK(family_image_keys(fp, kBudget, 4) == one);
    CHECK(family_image_keys(fp, kBudget, 16) == one);
    const auto a = bijection_check(fp, kBudget, 1), b = bijection_check(fp, kBudget, 7);
    CHECK(a.distinct == b.distinct);
    CHECK(a.violations == b.violations);
}
