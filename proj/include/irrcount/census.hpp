// Brute-force and sampled censuses of bounded-height integer matrices:
// distinct characteristic polynomials, how many are irreducible, and the
// exact number of distinct eigenvalues.
#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/hessfam.hpp"
#include "irrcount/intpoly.hpp"
#include "irrcount/lifting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irrcount {

enum class EntryDomain { Nonneg, Symmetric };
enum class CensusMode { Exact, Sample };

std::string to_string(EntryDomain d);
std::string to_string(CensusMode m);

struct CensusConfig {
    unsigned n = 2;
    Int h = 1;
    EntryDomain domain = EntryDomain::Nonneg;
    CensusMode mode = CensusMode::Exact;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    Int budget = Int(100'000'000);
    bool spec = false;  // also compute the distinct irreducible factor set
};

/// (H+1)^(n^2) or (2H+1)^(n^2).
Int domain_size(unsigned n, const Int& h, EntryDomain d);

struct CensusReport {
    CensusConfig config;
    Int total_matrices;
    std::uint64_t distinct_charpolys = 0;
    std::uint64_t distinct_irreducible_charpolys = 0;
    std::uint64_t matrices_with_irreducible_charpoly = 0;
    std::optional<Int> spec_count;
    std::uint64_t inconclusive_count = 0;
    /// Sorted canonical keys of the distinct irreducible factors (with --spec).
    std::vector<std::string> factor_set;

    // Sample mode only: matrices drawn = samples, counters above refer to the sample.
    bool estimate = false;
    double irreducible_fraction = 0;
    double irreducible_fraction_stderr = 0;
};

/// Throws BudgetExceeded or std::invalid_argument on policy violations
/// (spec with n > 4, exact irreducibility above n = 5 in exact mode).
CensusReport census_run(const CensusConfig& cfg);

/// Matrix number `index` in the row-major digit-counter order.
IntMatrix census_matrix(unsigned n, const Int& h, EntryDomain d, std::uint64_t index);

/// Matrix drawn for sample `index`; depends only on (seed, index).
IntMatrix sampled_matrix(unsigned n, const Int& h, EntryDomain d, std::uint64_t seed, std::uint64_t index);

struct CrossCheckReport {
    unsigned k = 0;
    Int h;
    std::uint64_t p = 0;
    std::uint64_t family_size = 0;
    std::uint64_t sources = 0;            // #J_p
    Int sum_lifts;                        // sum of L(g)
    std::uint64_t lifts_enumerated = 0;
    std::uint64_t lifts_in_image = 0;
    std::uint64_t irreducible_members = 0;  // members of F certified irreducible directly
    std::uint64_t inconclusive_members = 0;
    std::vector<std::string> violations;

    bool pass() const
    {
        return violations.empty() && lifts_in_image == lifts_enumerated &&
               Int(static_cast<unsigned long>(irreducible_members)) >= sum_lifts;
    }
};

/// Every lift must be a characteristic polynomial of some block in B, and the
/// directly counted irreducible members of F must be at least sum L(g).
CrossCheckReport census_vs_construction(const LiftParams& lp, const Int& budget, unsigned jobs = 1);

}  // namespace irrcount
