// Lifting constrained irreducibles over F_p into the family F and counting
// the lifts exactly. Every lift is monic with an irreducible reduction mod p,
// hence irreducible over Z, so the number of lifts is a lower bound on the
// number of distinct irreducible characteristic polynomials.
#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/ffpoly.hpp"
#include "irrcount/hessfam.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irrcount {

struct LiftParams {
    FamilyParams family;
    std::uint64_t p = 2;

    /// Throws unless p is prime and does not divide H.
    LiftParams(FamilyParams family_, std::uint64_t p_);
};

struct SlotCount {
    unsigned slot = 0;   // position in slot_ranges order
    Int residue;         // digit class mod p the lift must use
    Int count;
};

struct LiftCount {
    FFPoly g;
    std::vector<SlotCount> per_slot;
    Int total;
};

/// Smallest prime p with p > 2 H^(2/(k-2)) (compared as p^(k-2) > 2^(k-2) H^2)
/// and p not dividing H. Requires odd n = 2k+1 with k >= 3 and H >= 2.
std::uint64_t choose_prime(unsigned n, const Int& h);

/// #{x in [0, range) : x = residue mod p}.
Int residue_class_count(const Int& range, std::uint64_t residue, std::uint64_t p);

/// Digit residue class for `slot` forced by g: multiplier * digit = -g[index] (mod p).
std::uint64_t slot_residue(const FFPoly& g, const Slot& slot);

LiftCount count_lifts_exact(const FFPoly& g, const LiftParams& lp);

/// Members of F congruent to g mod p, lexicographic by slot digits.
class LiftStream {
public:
    LiftStream(const FFPoly& g, const LiftParams& lp);

    const LiftCount& count() const noexcept { return count_; }
    std::optional<FCoefficients> next();

private:
    FamilyParams family_;
    std::vector<Slot> slots_;
    LiftCount count_;
    Int p_;
    std::vector<Int> steps_;  // digit = residue + p * step
    bool done_ = false;
};

/// The whole LiftStream as a vector. Requires the lift count to be <= budget.
std::vector<FCoefficients> enumerate_lifts(const FFPoly& g, const LiftParams& lp, const Int& budget);

enum class BoundMode { ExactIfFeasible, BoundOnly };

struct CertifiedBound {
    unsigned n = 0;
    Int h;
    std::uint64_t p = 0;
    Rational pi_star_lb;
    std::optional<Int> pi_star_exact;
    std::vector<Int> per_slot_min;
    std::optional<Int> bound_exact;     // sum of L(g) over the enumerated J_p
    Int bound_certified;                // max(0, floor(pi_star_lb)) * prod per_slot_min
    Int spec_bound;                     // n * best bound
    bool degraded = false;              // pi_star_lb <= 0 forced bound_certified = 0
    std::vector<std::string> notes;

    const Int& best() const { return bound_exact ? *bound_exact : bound_certified; }
};

/// Enumeration of J_p happens in ExactIfFeasible mode when p^(n-2) <= budget.
CertifiedBound certified_lower_bound(const LiftParams& lp, BoundMode mode, const Int& budget, unsigned jobs = 1);

}  // namespace irrcount
