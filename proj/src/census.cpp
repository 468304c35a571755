#include "irrcount/census.hpp"

#include "irrcount/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace irrcount {

std::string to_string(EntryDomain d)
{
    return d == EntryDomain::Nonneg ? "nonneg" : "symmetric";
}

std::string to_string(CensusMode m)
{
    return m == CensusMode::Exact ? "exact" : "sample";
}

Int domain_size(unsigned n, const Int& h, EntryDomain d)
{
    const Int base = d == EntryDomain::Nonneg ? Int(h + 1) : Int(2 * h + 1);
    return pow(base, static_cast<unsigned long>(n) * n);
}

namespace {

std::uint64_t alphabet_size(const Int& h, EntryDomain d)
{
    return to_u64(d == EntryDomain::Nonneg ? Int(h + 1) : Int(2 * h + 1));
}

Int entry_value(std::uint64_t digit, const Int& h, EntryDomain d)
{
    Int v(digit);
    return d == EntryDomain::Nonneg ? v : Int(v - h);
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Classified {
    IrreducibilityVerdict::Status status = IrreducibilityVerdict::Status::Inconclusive;
    std::vector<IntPoly> factors;
};

using KeyCounts = std::unordered_map<std::string, std::uint64_t>;

// Classifies each distinct polynomial once, in parallel over the sorted key list,
// and folds the results into the report.
void classify_into(CensusReport& rep, const std::map<std::string, std::uint64_t>& merged, bool want_factors,
                   unsigned jobs)
{
    std::vector<const std::pair<const std::string, std::uint64_t>*> items;
    items.reserve(merged.size());
    for (const auto& kv : merged) items.push_back(&kv);
    std::vector<Classified> results(items.size());
    run_partitioned(split_ranges(items.size(), jobs), [&](std::size_t, Range r) {
        for (std::uint64_t i = r.begin; i < r.end; ++i) {
            const IntPoly f = IntPoly::from_text(items[i]->first);
            results[i].status = irreducible_over_z(f).status;
            if (want_factors) results[i].factors = factor_small_degree(f);
        }
    });

    std::set<std::string> factor_keys;
    Int spec = 0;
    rep.distinct_charpolys = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        switch (results[i].status) {
        case IrreducibilityVerdict::Status::Irreducible:
            ++rep.distinct_irreducible_charpolys;
            rep.matrices_with_irreducible_charpoly += items[i]->second;
            break;
        case IrreducibilityVerdict::Status::Inconclusive: ++rep.inconclusive_count; break;
        case IrreducibilityVerdict::Status::Reducible: break;
        }
        for (const auto& fac : results[i].factors)
            if (factor_keys.insert(fac.to_text()).second) spec += fac.degree();
    }
    if (want_factors) {
        rep.spec_count = spec;
        rep.factor_set.assign(factor_keys.begin(), factor_keys.end());
    }
}

std::map<std::string, std::uint64_t> merge_parts(std::vector<KeyCounts>& parts)
{
    std::map<std::string, std::uint64_t> merged;
    for (auto& part : parts)
        for (auto& [key, count] : part) merged[key] += count;
    return merged;
}

}  // namespace

IntMatrix census_matrix(unsigned n, const Int& h, EntryDomain d, std::uint64_t index)
{
    const std::uint64_t base = alphabet_size(h, d);
    std::vector<Int> e(static_cast<std::size_t>(n) * n);
    for (std::size_t i = e.size(); i-- > 0;) {
        e[i] = entry_value(index % base, h, d);
        index /= base;
    }
    return IntMatrix(n, std::move(e));
}

IntMatrix sampled_matrix(unsigned n, const Int& h, EntryDomain d, std::uint64_t seed, std::uint64_t index)
{
    const std::uint64_t base = alphabet_size(h, d);
    const std::uint64_t stream = splitmix64(seed ^ splitmix64(index));
    std::vector<Int> e(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::uint64_t x = splitmix64(stream + i);
        const auto digit = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * base) >> 64);
        e[i] = entry_value(digit, h, d);
    }
    return IntMatrix(n, std::move(e));
}

CensusReport census_run(const CensusConfig& cfg)
{
    if (cfg.n < 1) throw std::invalid_argument("census: n must be >= 1");
    if (cfg.h < 1) throw std::invalid_argument("census: H must be >= 1");
    if (cfg.spec && cfg.n > 4) throw std::invalid_argument("census: eigenvalue counting requires n <= 4");
    if (cfg.spec && cfg.mode != CensusMode::Exact) throw std::invalid_argument("census: eigenvalue counting requires exact mode");

    CensusReport rep;
    rep.config = cfg;
    rep.total_matrices = domain_size(cfg.n, cfg.h, cfg.domain);

    std::vector<KeyCounts> parts;
    if (cfg.mode == CensusMode::Exact) {
        if (cfg.n > 5) throw std::invalid_argument("census: exact irreducibility counts require n <= 5");
        if (rep.total_matrices > cfg.budget)
            throw BudgetExceeded("census domain exceeds budget " + cfg.budget.get_str(), rep.total_matrices);
        const std::uint64_t total = to_u64(rep.total_matrices);
        const std::uint64_t base = alphabet_size(cfg.h, cfg.domain);
        const auto ranges = split_ranges(total, cfg.jobs);
        parts.resize(ranges.size());
        run_partitioned(ranges, [&](std::size_t part, Range r) {
            IntMatrix m = census_matrix(cfg.n, cfg.h, cfg.domain, r.begin);
            const Int low = entry_value(0, cfg.h, cfg.domain);
            const Int high = entry_value(base - 1, cfg.h, cfg.domain);
            auto& acc = parts[part];
            for (std::uint64_t idx = r.begin; idx < r.end; ++idx) {
                ++acc[charpoly_interp(m).to_text()];
                // row-major odometer, last entry least significant
                for (std::size_t i = m.entries().size(); i-- > 0;) {
                    Int& v = m.at(i / cfg.n, i % cfg.n);
                    if (v < high) {
                        ++v;
                        break;
                    }
                    v = low;
                }
            }
        });
    } else {
        if (cfg.samples == 0) throw std::invalid_argument("census: sample count must be positive");
        const auto ranges = split_ranges(cfg.samples, cfg.jobs);
        parts.resize(ranges.size());
        run_partitioned(ranges, [&](std::size_t part, Range r) {
            for (std::uint64_t idx = r.begin; idx < r.end; ++idx)
                ++parts[part][charpoly_interp(sampled_matrix(cfg.n, cfg.h, cfg.domain, cfg.seed, idx)).to_text()];
        });
    }

    classify_into(rep, merge_parts(parts), cfg.spec, cfg.jobs);

    if (cfg.mode == CensusMode::Sample) {
        rep.estimate = true;
        const double N = static_cast<double>(cfg.samples);
        const double f = static_cast<double>(rep.matrices_with_irreducible_charpoly) / N;
        rep.irreducible_fraction = f;
        rep.irreducible_fraction_stderr = std::sqrt(f * (1.0 - f) / N);
    }
    return rep;
}

CrossCheckReport census_vs_construction(const LiftParams& lp, const Int& budget, unsigned jobs)
{
    const FamilyParams& fam = lp.family;
    CrossCheckReport rep;
    rep.k = fam.k;
    rep.h = fam.h;
    rep.p = lp.p;
    rep.family_size = to_u64(family_size(fam));

    IrreducibilityPolicy policy;
    if (std::find(policy.primes.begin(), policy.primes.end(), lp.p) == policy.primes.end())
        policy.primes.push_back(lp.p);

    const auto image = family_image_keys(fam, budget, jobs);
    const auto sources = enumerate_constrained_irreducibles(lp.p, fam.n(), budget, jobs);
    rep.sources = sources.size();
    rep.sum_lifts = 0;
    const PrimeModulus pm(lp.p);
    for (const auto& g : sources) {
        rep.sum_lifts += count_lifts_exact(g, lp).total;
        for (const auto& lift : enumerate_lifts(g, lp, budget)) {
            ++rep.lifts_enumerated;
            const IntPoly f = lift.to_poly();
            const std::string key = f.to_text();
            if (!f_membership(f, fam)) rep.violations.push_back("lift not in F: " + key);
            if (!(f.reduce(pm) == g)) rep.violations.push_back("lift does not reduce to its source: " + key);
            if (irreducible_over_z(f, policy).status != IrreducibilityVerdict::Status::Irreducible)
                rep.violations.push_back("lift not certified irreducible: " + key);
            if (std::binary_search(image.begin(), image.end(), key))
                ++rep.lifts_in_image;
            else
                rep.violations.push_back("lift is not a characteristic polynomial of B: " + key);
        }
    }

    FamilyStream stream(fam);
    while (auto member = stream.next()) {
        switch (irreducible_over_z(member->to_poly(), policy).status) {
        case IrreducibilityVerdict::Status::Irreducible: ++rep.irreducible_members; break;
        case IrreducibilityVerdict::Status::Inconclusive: ++rep.inconclusive_members; break;
        case IrreducibilityVerdict::Status::Reducible: break;
        }
    }
    if (rep.violations.size() > 20) rep.violations.resize(20);
    return rep;
}

}  // namespace irrcount
