// The lower-Hessenberg matrix family B(k, H) and the constrained polynomial
// family F(k, H) it maps onto under the characteristic polynomial.
//
// Matrices are indexed -k..k in both directions, matching the construction:
//   b(i, i+1) = 1 for i in [-k, 0], = H for i in [1, k-1];
//   b(i, j) free in [0, H) for i in [1, k], j in [-k, -1];
//   everything else zero.
// Family polynomials are X^(2k+1) - f_{2k-2} X^(2k-2) - ... - f_0 with the
// f_i stored nonnegated.
#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irrcount {

struct FamilyParams {
    unsigned k = 1;
    Int h = 2;

    FamilyParams() = default;
    FamilyParams(unsigned k_, Int h_);

    unsigned n() const noexcept { return 2 * k + 1; }
    /// H = 1 leaves a single all-zero free block.
    bool degenerate() const { return h == 1; }
};

/// One coefficient position of F: coefficient index `index` of the polynomial
/// equals -(multiplier * digit), digit in [0, range).
struct Slot {
    unsigned index = 0;
    Int multiplier;
    Int range;
};

/// Ordered as: j = 2..k+1 (index 2k-j, unit multiplier), then j = 2..k
/// (index k-j, multiplier H^(j-1)).
std::vector<Slot> slot_ranges(const FamilyParams& params);

class BMatrix {
public:
    /// `free` is row-major k*k, row i = 1..k, column j = -k..-1.
    BMatrix(FamilyParams params, std::vector<Int> free);
    static BMatrix zero(FamilyParams params);

    const FamilyParams& params() const noexcept { return params_; }
    const Int& free_entry(int i, int j) const;
    const std::vector<Int>& free_block() const noexcept { return free_; }

private:
    FamilyParams params_;
    std::vector<Int> free_;
};

struct FCoefficients {
    FamilyParams params;
    std::vector<Int> f;  // f_0 .. f_{2k-2}, all >= 0

    IntPoly to_poly() const;
    /// Slot digits in slot_ranges order.
    std::vector<Int> digits() const;

    friend bool operator==(const FCoefficients& a, const FCoefficients& b)
    {
        return a.params.k == b.params.k && a.params.h == b.params.h && a.f == b.f;
    }
};

IntMatrix build_matrix(const BMatrix& b);
IntPoly charpoly_b(const BMatrix& b);
std::optional<FCoefficients> f_membership(const IntPoly& f, const FamilyParams& params);
Int family_size(const FamilyParams& params);

/// Lexicographic stream over F by slot digit tuples; restartable at any index.
class FamilyStream {
public:
    explicit FamilyStream(FamilyParams params, const Int& start = 0);

    std::optional<FCoefficients> next();

private:
    FamilyParams params_;
    std::vector<Slot> slots_;
    std::vector<Int> digits_;
    bool done_ = false;
};

/// Lexicographic stream over all free blocks of B (row-major, first entry
/// most significant); restartable at any index.
class BlockStream {
public:
    explicit BlockStream(FamilyParams params, const Int& start = 0);

    std::optional<BMatrix> next();

private:
    FamilyParams params_;
    std::vector<Int> digits_;
    bool done_ = false;
};

struct BijectionReport {
    FamilyParams params;
    Int family_size;
    std::uint64_t images = 0;
    std::uint64_t distinct = 0;
    std::vector<std::string> violations;
    bool degenerate = false;

    bool pass() const { return violations.empty() && Int(static_cast<unsigned long>(distinct)) == family_size; }
};

/// Exhaustive forward check of charpoly: B -> F. Requires H^(k^2) <= budget.
BijectionReport bijection_check(const FamilyParams& params, const Int& budget, unsigned jobs = 1);

/// Canonical text keys of every charpoly_b image (sorted). Requires H^(k^2) <= budget.
std::vector<std::string> family_image_keys(const FamilyParams& params, const Int& budget, unsigned jobs = 1);

}  // namespace irrcount
