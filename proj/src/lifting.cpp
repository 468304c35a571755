#include "irrcount/lifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrcount {

namespace {

void require_pattern(const FFPoly& g, const FamilyParams& fam)
{
    const unsigned k = fam.k;
    if (!g.is_monic() || g.degree() != static_cast<int>(fam.n()))
        throw std::invalid_argument("lift source must be monic of degree 2k+1");
    if (g.coeff(2 * k) != 0 || g.coeff(2 * k - 1) != 0)
        throw std::invalid_argument("lift source must have zero X^(2k) and X^(2k-1) coefficients");
}

}  // namespace

LiftParams::LiftParams(FamilyParams family_, std::uint64_t p_) : family(std::move(family_)), p(p_)
{
    PrimeModulus{p};
    if (mpz_divisible_ui_p(family.h.get_mpz_t(), p))
        throw std::invalid_argument("lifting prime " + std::to_string(p) + " divides H = " + family.h.get_str());
}

std::uint64_t choose_prime(unsigned n, const Int& h)
{
    if (n % 2 == 0) throw std::invalid_argument("choose_prime: n must be odd");
    const unsigned k = (n - 1) / 2;
    if (k < 3) throw std::invalid_argument("choose_prime: requires k >= 3 (n >= 7)");
    if (h < 2) throw std::invalid_argument("choose_prime: requires H >= 2");
    const Int threshold = pow_ui(2, k - 2) * h * h;
    // start at the integer (k-2)-th root so the scan is short
    Int root;
    mpz_root(root.get_mpz_t(), threshold.get_mpz_t(), k - 2);
    std::uint64_t p = to_u64(root);
    for (;; ++p) {
        if (pow_ui(p, k - 2) <= threshold) continue;
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(h.get_mpz_t(), p)) continue;
        return p;
    }
}

Int residue_class_count(const Int& range, std::uint64_t residue, std::uint64_t p)
{
    const Int r(residue);
    if (r >= range) return 0;
    return floor_div(range - 1 - r, Int(p)) + 1;
}

std::uint64_t slot_residue(const FFPoly& g, const Slot& slot)
{
    // The family stores f_i = -(coefficient of X^i), so the coefficient
    // -(multiplier * digit) must reduce to g_i.
    const auto& m = g.modulus();
    const std::uint64_t target = m.neg(g.coeff(slot.index));
    return m.mul(target, m.inv(m.reduce(slot.multiplier)));
}

LiftCount count_lifts_exact(const FFPoly& g, const LiftParams& lp)
{
    if (g.prime() != lp.p) throw std::invalid_argument("lift source modulus differs from the lifting prime");
    require_pattern(g, lp.family);
    LiftCount out{g, {}, Int(1)};
    const auto slots = slot_ranges(lp.family);
    for (unsigned i = 0; i < slots.size(); ++i) {
        const std::uint64_t r = slot_residue(g, slots[i]);
        Int c = residue_class_count(slots[i].range, r, lp.p);
        out.total *= c;
        out.per_slot.push_back({i, Int(r), std::move(c)});
    }
    return out;
}

LiftStream::LiftStream(const FFPoly& g, const LiftParams& lp)
    : family_(lp.family), slots_(slot_ranges(lp.family)), count_(count_lifts_exact(g, lp)), p_(lp.p),
      steps_(slots_.size(), Int(0)), done_(count_.total == 0)
{
}

std::optional<FCoefficients> LiftStream::next()
{
    if (done_) return std::nullopt;
    FCoefficients f{family_, std::vector<Int>(2 * family_.k - 1, Int(0))};
    for (std::size_t i = 0; i < slots_.size(); ++i)
        f.f[slots_[i].index] = (count_.per_slot[i].residue + p_ * steps_[i]) * slots_[i].multiplier;
    done_ = true;
    for (std::size_t i = slots_.size(); i-- > 0;) {
        if (++steps_[i] < count_.per_slot[i].count) {
            done_ = false;
            break;
        }
        steps_[i] = 0;
    }
    return f;
}

std::vector<FCoefficients> enumerate_lifts(const FFPoly& g, const LiftParams& lp, const Int& budget)
{
    LiftStream stream(g, lp);
    if (stream.count().total > budget)
        throw BudgetExceeded("lift enumeration exceeds budget " + budget.get_str(), stream.count().total);
    std::vector<FCoefficients> out;
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

CertifiedBound certified_lower_bound(const LiftParams& lp, BoundMode mode, const Int& budget, unsigned jobs)
{
    const unsigned n = lp.family.n();
    CertifiedBound cb;
    cb.n = n;
    cb.h = lp.family.h;
    cb.p = lp.p;
    cb.pi_star_lb = pi_star_bounds(lp.p, n).lower;

    Int slot_product = 1;
    for (const auto& s : slot_ranges(lp.family)) {
        Int m = floor_div(s.range, Int(lp.p));  // fewest members of any residue class
        slot_product *= m;
        cb.per_slot_min.push_back(std::move(m));
    }
    const Int pi_floor = floor(cb.pi_star_lb);
    if (pi_floor <= 0) {
        cb.degraded = true;
        cb.notes.push_back("explicit lower bound on pi* is not positive; certified bound degrades to 0");
    }
    cb.bound_certified = std::max(Int(0), pi_floor) * slot_product;

    if (mode == BoundMode::ExactIfFeasible && n >= 3) {
        if (pow_ui(lp.p, n - 2) <= budget) {
            const auto sources = enumerate_constrained_irreducibles(lp.p, n, budget, jobs);
            cb.pi_star_exact = Int(static_cast<unsigned long>(sources.size()));
            Int sum = 0;
            for (const auto& g : sources) sum += count_lifts_exact(g, lp).total;
            cb.bound_exact = sum;
        } else {
            cb.notes.push_back("p^(n-2) exceeds the budget; J_p not enumerated");
        }
    }
    if (cb.bound_exact && cb.bound_certified > *cb.bound_exact)
        throw std::logic_error("certified bound exceeds the exact lift count");
    cb.spec_bound = Int(n) * cb.best();
    return cb;
}

}  // namespace irrcount
