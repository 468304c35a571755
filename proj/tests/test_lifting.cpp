#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irrcount/lifting.hpp"

#include <cmath>
#include <set>

using namespace irrcount;

namespace {

const Int kBudget(100'000'000);

// Members of F reducing to g mod p, by sweeping the whole family.
std::vector<FCoefficients> congruent_members(const FamilyParams& fp, const FFPoly& g)
{
    std::vector<FCoefficients> out;
    FamilyStream s(fp);
    while (auto f = s.next())
        if (f->to_poly().reduce(g.modulus()) == g) out.push_back(*f);
    return out;
}

FFPoly gpoly(std::uint64_t p, std::vector<std::int64_t> c)
{
    return FFPoly(PrimeModulus(p), std::span<const std::int64_t>(c));
}

}  // namespace

TEST_CASE("choose_prime examples")
{
    CHECK(choose_prime(11, Int(100)) == 47);
    CHECK(choose_prime(11, Int(32)) == 23);
    CHECK(choose_prime(9, Int(9)) == 19);
    CHECK_THROWS_AS(choose_prime(5, Int(9)), std::invalid_argument);
    CHECK_THROWS_AS(choose_prime(10, Int(9)), std::invalid_argument);
}

TEST_CASE("choose_prime agrees with a floating-point threshold away from ties")
{
    for (unsigned n : {7u, 9u, 11u, 13u}) {
        const unsigned k = (n - 1) / 2;
        for (long h = 2; h <= 60; ++h) {
            const long double threshold = 2.0L * std::pow(static_cast<long double>(h), 2.0L / (k - 2));
            std::uint64_t p = 2;
            while (!(static_cast<long double>(p) > threshold && is_prime_u64(p) && h % static_cast<long>(p) != 0)) ++p;
            if (std::fabs(static_cast<long double>(p) - threshold) < 1e-9L) continue;
            CHECK(choose_prime(n, Int(h)) == p);
        }
    }
}

TEST_CASE("residue class counts")
{
    CHECK(residue_class_count(Int(9), 0, 2) == 5);
    CHECK(residue_class_count(Int(9), 1, 2) == 4);
    CHECK(residue_class_count(Int(3), 5, 7) == 0);
    for (std::uint64_t p : {2, 3, 5, 7})
        for (long m = 1; m <= 40; ++m)
            for (std::uint64_t r = 0; r < p; ++r) {
                long brute = 0;
                for (long x = 0; x < m; ++x) brute += (static_cast<std::uint64_t>(x) % p == r);
                CHECK(residue_class_count(Int(m), r, p) == brute);
                CHECK(residue_class_count(Int(m), r, p) >= Int(m) / Int(p));
            }
}

TEST_CASE("sign convention: the family stores negated coefficients")
{
    // g = X^5 + X^2 + ... over F_5 with g_2 = 1: a lift's X^2 coefficient is -f_2,
    // so f_2 must be = -1 = 4 (mod 5)
    const LiftParams lp(FamilyParams(2, 7), 5);
    const FFPoly g = gpoly(5, {2, 3, 1, 0, 0, 1});
    const auto slots = slot_ranges(lp.family);
    CHECK(slot_residue(g, slots[0]) == 4);
    for (const auto& f : enumerate_lifts(g, lp, kBudget)) {
        CHECK(f.f[2] % 5 == 4);
        CHECK(f.to_poly().reduce(PrimeModulus(5)) == g);
    }
}

TEST_CASE("count_lifts_exact example at p=2, H=3, k=2")
{
    const LiftParams lp(FamilyParams(2, 3), 2);
    const FFPoly g = gpoly(2, {1, 0, 1, 0, 0, 1});
    const auto lc = count_lifts_exact(g, lp);
    REQUIRE(lc.per_slot.size() == 3);
    CHECK(lc.per_slot[0].count == 1);
    CHECK(lc.per_slot[1].count == 5);
    CHECK(lc.per_slot[2].count == 1);
    CHECK(lc.total == 5);
    CHECK(congruent_members(lp.family, g).size() == 5);

    const auto lifts = enumerate_lifts(g, lp, kBudget);
    REQUIRE(lifts.size() == 5);
    std::vector<Int> f1;
    for (const auto& f : lifts) {
        CHECK(f.f[2] == 1);
        CHECK(f.f[0] == 3);
        f1.push_back(f.f[1]);
    }
    CHECK(f1 == std::vector<Int>{0, 2, 4, 6, 8});
    CHECK(lifts == congruent_members(lp.family, g));
}

TEST_CASE("a range of exactly p holds one member of every class")
{
    for (std::uint64_t p : {2, 3, 5, 47})
        for (std::uint64_t r = 0; r < p; ++r) CHECK(residue_class_count(Int(p), r, p) == 1);
}

TEST_CASE("sum of lifts equals the members with irreducible reduction")
{
    const LiftParams lp(FamilyParams(2, 3), 2);
    Int sum = 0;
    for (const auto& g : enumerate_constrained_irreducibles(2, 5, kBudget)) sum += count_lifts_exact(g, lp).total;
    std::uint64_t direct = 0;
    FamilyStream s(lp.family);
    while (auto f = s.next()) direct += is_irreducible(f->to_poly().reduce(PrimeModulus(2)));
    CHECK(sum == Int(static_cast<unsigned long>(direct)));
}

TEST_CASE("exactness and soundness sweep over (p, H, k)")
{
    for (std::uint64_t p : {2, 3, 5}) {
        for (long h : {3, 4, 5, 7}) {
            if (h % static_cast<long>(p) == 0) continue;
            for (unsigned k : {1u, 2u, 3u}) {
                const LiftParams lp(FamilyParams(k, Int(h)), p);
                const bool sweepable = family_size(lp.family) <= 2'000;
                const auto sources = enumerate_constrained_irreducibles(p, lp.family.n(), kBudget);
                std::set<std::string> seen;
                Int sum = 0;
                const bool check_each = family_size(lp.family) <= 200'000;
                std::uint64_t streamed_total = 0;
                for (const auto& g : sources) {
                    const auto lc = count_lifts_exact(g, lp);
                    LiftStream stream(g, lp);
                    std::uint64_t streamed = 0;
                    std::vector<FCoefficients> lifts;
                    while (auto f = stream.next()) {
                        ++streamed;
                        if (!check_each) continue;
                        const IntPoly poly = f->to_poly();
                        CHECK(f_membership(poly, lp.family).has_value());
                        CHECK(poly.reduce(PrimeModulus(p)) == g);
                        CHECK(seen.insert(poly.to_text()).second);  // disjoint across sources
                        if (sweepable) lifts.push_back(std::move(*f));
                    }
                    CHECK(Int(static_cast<unsigned long>(streamed)) == lc.total);
                    streamed_total += streamed;
                    sum += lc.total;
                    if (sweepable) CHECK(lifts == congruent_members(lp.family, g));

                    const auto slots = slot_ranges(lp.family);
                    for (std::size_t i = 0; i < slots.size(); ++i) {
                        const Int slot_floor = ceil(Rational(slots[i].range - 1, Int(p))) - 1;
                        CHECK(lc.per_slot[i].count >= slot_floor);
                    }
                }
                CHECK(Int(static_cast<unsigned long>(streamed_total)) == sum);
                if (check_each) CHECK(Int(static_cast<unsigned long>(seen.size())) == sum);
            }
        }
    }
}

TEST_CASE("p = 2 with odd H: divisible slots hold at least (M-1)/2 digits, attained by the odd class")
{
    for (long h : {3, 5, 7, 9}) {
        const LiftParams lp(FamilyParams(4, Int(h)), 2);
        for (const auto& s : slot_ranges(lp.family)) {
            if (s.multiplier == 1) continue;
            const Int half = (s.range - 1) / 2;
            CHECK(residue_class_count(s.range, 1, 2) == half);
            CHECK(residue_class_count(s.range, 0, 2) == half + 1);
        }
        for (const auto& g : enumerate_constrained_irreducibles(2, 9, kBudget)) {
            const auto lc = count_lifts_exact(g, lp);
            const auto slots = slot_ranges(lp.family);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (slots[i].multiplier != 1) CHECK(lc.per_slot[i].count >= (slots[i].range - 1) / 2);
        }
    }
}

TEST_CASE("lifting preconditions")
{
    CHECK_THROWS_AS(LiftParams(FamilyParams(2, 4), 2), std::invalid_argument);
    CHECK_THROWS_AS(LiftParams(FamilyParams(2, 3), 4), std::invalid_argument);
    const LiftParams lp(FamilyParams(2, 3), 2);
    CHECK_THROWS_AS(count_lifts_exact(gpoly(2, {1, 0, 1, 0, 1, 1}), lp), std::invalid_argument);
    CHECK_THROWS_AS(count_lifts_exact(gpoly(2, {1, 1, 1}), lp), std::invalid_argument);
    CHECK_THROWS_AS(count_lifts_exact(gpoly(5, {1, 0, 1, 0, 0, 1}), lp), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_lifts(gpoly(2, {1, 0, 1, 0, 0, 1}), lp, Int(2)), BudgetExceeded);
}

TEST_CASE("certified lower bound at (n, H, p) = (5, 3, 2) meets ceil(8/5)")
{
    const auto cb = certified_lower_bound(LiftParams(FamilyParams(2, 3), 2), BoundMode::ExactIfFeasible, kBudget);
    REQUIRE(cb.bound_exact);
    CHECK(*cb.bound_exact >= 2);
    CHECK(cb.bound_certified <= *cb.bound_exact);
    CHECK(cb.spec_bound == 5 * *cb.bound_exact);
}

TEST_CASE("certified lower bound at (7, 5, 2)")
{
    const auto cb = certified_lower_bound(LiftParams(FamilyParams(3, 5), 2), BoundMode::ExactIfFeasible, kBudget);
    REQUIRE(cb.bound_exact);
    CHECK(Rational(*cb.bound_exact) >= Rational(pow_ui(4, 9), Int(14)));
}

TEST_CASE("certified bound vanishes when p exceeds every slot range")
{
    const auto cb = certified_lower_bound(LiftParams(FamilyParams(2, 3), 11), BoundMode::ExactIfFeasible, kBudget);
    CHECK(cb.bound_certified == 0);
    REQUIRE(cb.bound_exact);
    CHECK(*cb.bound_exact >= 0);
}

TEST_CASE("bound-only mode at large scale degrades to zero")
{
    const auto cb = certified_lower_bound(LiftParams(FamilyParams(5, 100), 47), BoundMode::BoundOnly, kBudget);
    CHECK_FALSE(cb.bound_exact);
    CHECK(cb.degraded);
    CHECK(cb.bound_certified == 0);
    CHECK_FALSE(cb.notes.empty());
}

TEST_CASE("exact lift sum is nondecreasing in odd H at p = 2")
{
    for (unsigned k : {2u, 3u, 4u}) {
        Int prev = 0;
        for (long h = 3; h <= 15; h += 2) {
            const auto cb = certified_lower_bound(LiftParams(FamilyParams(k, Int(h)), 2), BoundMode::ExactIfFeasible, kBudget);
            CHECK(*cb.bound_exact >= prev);
            prev = *cb.bound_exact;
        }
    }
}

TEST_CASE("lift sums are independent of worker count")
{
    const LiftParams lp(FamilyParams(6, 5), 2);
    const auto a = certified_lower_bound(lp, BoundMode::ExactIfFeasible, kBudget, 1);
    for (unsigned jobs : {4u, 16u}) {
        const auto b = certified_lower_bound(lp, BoundMode::ExactIfFeasible, kBudget, jobs);
        CHECK(*a.bound_exact == *b.bound_exact);
        CHECK(*a.pi_star_exact == *b.pi_star_exact);
    }
}
