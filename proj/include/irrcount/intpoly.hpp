// Dense integer polynomials, integer matrices and their characteristic
// polynomials, plus complete small-degree irreducibility and factoring over Z.
#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/ffpoly.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irrcount {

class IntPoly {
public:
    IntPoly() = default;
    /// Ascending coefficients; trailing zeros are dropped.
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(const Int& c, std::size_t e);
    static IntPoly x() { return IntPoly{0, 1}; }

    const std::vector<Int>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const { return c_.back(); }

    Int eval(const Int& x) const;
    FFPoly reduce(PrimeModulus p) const;

    /// Ascending decimal coefficients separated by single spaces ("0" for zero).
    std::string to_text() const;
    static IntPoly from_text(std::string_view text);

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
    friend auto operator<=>(const IntPoly& a, const IntPoly& b)
    {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c <=> 0;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim();
    std::vector<Int> c_;
};

struct IntDivMod {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor; throws for zero or non-monic divisors.
IntDivMod divmod(const IntPoly& a, const IntPoly& b);

class IntMatrix {
public:
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::size_t n, std::vector<Int> row_major);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t size() const noexcept { return n_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const std::vector<Int>& entries() const noexcept { return e_; }

    Int trace() const;
    bool is_lower_hessenberg() const;
    IntMatrix transposed() const;

    /// Row-major decimal integers, rows separated by ';'.
    std::string to_text() const;
    static IntMatrix from_text(std::string_view text);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Int> e_;
};

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);

/// det(X*I - A) from exact determinants at X = 0..n and Newton interpolation.
IntPoly charpoly_interp(const IntMatrix& a);

/// det(X*I - B) for lower-Hessenberg B via the leading-minor recurrence.
IntPoly charpoly_hessenberg(const IntMatrix& b);

struct IrreducibilityVerdict {
    enum class Status { Irreducible, Reducible, Inconclusive };
    Status status = Status::Inconclusive;
    /// Irreducible: prime whose reduction is irreducible, unset when the
    /// bounded factor search was exhausted instead.
    std::optional<std::uint64_t> prime_witness;
    /// Reducible: a nontrivial monic factor.
    std::optional<IntPoly> factor;

    bool exhausted_factor_search() const
    {
        return status == Status::Irreducible && !prime_witness.has_value();
    }
};

std::string to_string(IrreducibilityVerdict::Status s);

struct IrreducibilityPolicy {
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
};

/// Modular certificate first, then (degree <= 5) a complete search for linear
/// and quadratic monic factors; Inconclusive only above degree 5.
IrreducibilityVerdict irreducible_over_z(const IntPoly& f, const IrreducibilityPolicy& policy = {});

/// Complete factorisation into monic irreducibles for monic f of degree <= 4,
/// sorted ascending (IntPoly ordering), repeated by multiplicity.
std::vector<IntPoly> factor_small_degree(const IntPoly& f);

/// Every coefficient of a monic factor of f is at most this in absolute value.
Int mignotte_bound(const IntPoly& f);

/// All positive divisors of |a| (a != 0), ascending.
std::vector<Int> positive_divisors(const Int& a);

}  // namespace irrcount
