#include "irrcount/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrcount {

namespace {

bool is_two_power_plus_one(unsigned n)
{
    const unsigned m = n - 1;
    return n >= 2 && (m & (m - 1)) == 0;
}

Rational ratio(const Int& num, const Int& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Verdict at_least(std::string id, const Int& count, const Rational& bound)
{
    return {std::move(id), count.get_str(), to_fraction(bound), meets(count, bound)};
}

void require_match(unsigned n, const Int& h, const BoundReport& b)
{
    if (n != b.n || h != b.h)
        throw std::invalid_argument("compare: report parameters (n=" + std::to_string(n) + ", H=" + h.get_str() +
                                    ") differ from bound parameters (n=" + std::to_string(b.n) + ", H=" +
                                    b.h.get_str() + ")");
}

}  // namespace

BoundReport eval_bounds(unsigned n, const Int& h)
{
    if (n < 1) throw std::invalid_argument("eval_bounds: n must be >= 1");
    if (h < 1) throw std::invalid_argument("eval_bounds: H must be >= 1");
    BoundReport r;
    r.n = n;
    r.h = h;
    const bool odd = n % 2 == 1;
    const unsigned k = (n - 1) / 2;

    r.alps.id = "alps";
    if (!is_two_power_plus_one(n)) {
        r.alps.reason = "n is not of the form 2^k+1";
    } else if (!odd) {
        r.alps.reason = "exponent (n-1)^2/4 is not an integer";
    } else {
        r.alps.value = ratio(Int(n) * pow(h, k * k), pow_ui(5, n));
        r.alps.applicable = true;
    }

    r.thm11_main.id = "thm11_main";
    if (odd) r.thm11_main.value = ratio(pow(h, k * k), Int(n));
    if (!odd)
        r.thm11_main.reason = "n is even";
    else if (n < 11)
        r.thm11_main.reason = "n < 11";
    else
        r.thm11_main.applicable = true;

    r.thm12.id = "thm12";
    if (odd) r.thm12.value = ratio(pow(Int(h - 1), k * k), Int(2 * n));
    if (!odd)
        r.thm12.reason = "n is even";
    else if (n < 5)
        r.thm12.reason = "n < 5";
    else if (h < 3)
        r.thm12.reason = "H < 3";
    else if (mpz_even_p(h.get_mpz_t()))
        r.thm12.reason = "H is even";
    else
        r.thm12.applicable = true;
    return r;
}

bool meets(const Int& count, const Rational& bound)
{
    return count >= ceil(bound);
}

std::vector<Verdict> compare(const CensusReport& census, const BoundReport& bounds)
{
    require_match(census.config.n, census.config.h, bounds);
    std::vector<Verdict> out;
    if (census.estimate) return out;
    const Int distinct_irr(static_cast<unsigned long>(census.distinct_irreducible_charpolys));
    const bool decided = census.inconclusive_count == 0;
    if (census.spec_count && decided)
        out.push_back(at_least("spec_vs_n_irreducible", *census.spec_count, Rational(Int(bounds.n) * distinct_irr)));
    if (census.spec_count && bounds.alps.applicable)
        out.push_back(at_least("spec_vs_alps", *census.spec_count, *bounds.alps.value));
    if (decided && bounds.thm12.applicable && census.config.domain == EntryDomain::Nonneg)
        out.push_back(at_least("irreducible_vs_thm12", distinct_irr, *bounds.thm12.value));
    return out;
}

std::vector<Verdict> compare(const CertifiedBound& lifted, const BoundReport& bounds)
{
    require_match(lifted.n, lifted.h, bounds);
    std::vector<Verdict> out;
    if (lifted.bound_exact)
        out.push_back({"certified_le_exact", lifted.bound_certified.get_str(), to_fraction(Rational(*lifted.bound_exact)),
                       lifted.bound_certified <= *lifted.bound_exact});
    if (bounds.thm12.applicable)
        out.push_back(at_least("lifts_vs_thm12", lifted.best(), *bounds.thm12.value));
    return out;
}

bool all_pass(const std::vector<Verdict>& verdicts)
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

}  // namespace irrcount
