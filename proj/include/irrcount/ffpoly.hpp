// Polynomials over prime fields F_p, irreducibility testing and counts of
// irreducible polynomials with and without the two-zero-coefficient constraint.
#pragma once

#include "irrcount/bigint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace irrcount {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// A validated prime modulus p < 2^63.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    std::uint64_t reduce(std::int64_t a) const noexcept;
    std::uint64_t reduce(const Int& a) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error for a == 0.
    std::uint64_t inv(std::uint64_t a) const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t p_;
};

class FFPoly {
public:
    explicit FFPoly(PrimeModulus p) : p_(p) {}
    /// Coefficients ascending by degree; each is reduced mod p.
    FFPoly(PrimeModulus p, std::vector<std::uint64_t> coeffs);
    FFPoly(PrimeModulus p, std::span<const std::int64_t> coeffs);

    static FFPoly x_power(PrimeModulus p, std::size_t e);

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::uint64_t prime() const noexcept { return p_.value(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    FFPoly monic() const;
    std::string to_text() const;

    friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
    friend bool operator==(const FFPoly& a, const FFPoly& b) = default;

private:
    void trim();

    PrimeModulus p_;
    std::vector<std::uint64_t> c_;
};

struct FFDivMod {
    FFPoly quotient;
    FFPoly remainder;
};

FFDivMod divmod(const FFPoly& a, const FFPoly& b);
FFPoly rem(const FFPoly& a, const FFPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FFPoly gcd(const FFPoly& a, const FFPoly& b);
FFPoly mulmod(const FFPoly& a, const FFPoly& b, const FFPoly& m);
FFPoly powmod(const FFPoly& base, const Int& e, const FFPoly& m);
/// X^(p^e) mod m.
FFPoly frobenius_power(const FFPoly& m, unsigned e);

/// Rabin test. Requires f monic of degree >= 1. Over F_2 up to degree 62 the
/// arithmetic runs on packed 64-bit words.
bool is_irreducible(const FFPoly& f);
/// The same test on the general coefficient-vector arithmetic.
bool is_irreducible_generic(const FFPoly& f);

/// Exact number of monic irreducible polynomials of degree n over F_p (Moebius count).
Int count_irreducible(std::uint64_t p, unsigned n);

/// Same count by testing every monic degree-n polynomial; requires p^n <= budget.
Int count_irreducible_enumerated(std::uint64_t p, unsigned n, const Int& budget);

/// Monic irreducible degree-n polynomials over F_p whose X^(n-1) and X^(n-2)
/// coefficients vanish, in lexicographic order of (a_0, ..., a_{n-3}).
/// Requires n >= 3 and p^(n-2) <= budget.
std::vector<FFPoly> enumerate_constrained_irreducibles(std::uint64_t p, unsigned n, const Int& budget,
                                                       unsigned jobs = 1);

/// Candidate number `index` (lexicographic) of the constrained pattern.
FFPoly constrained_candidate(PrimeModulus p, unsigned n, std::uint64_t index);

// Explicit bounds on pi_p(n) and pi*_p(n). The *_holds predicates are exact
// (half-integral powers are compared after squaring); the rational endpoints
// replace an irrational power by a one-sided safe rational.

bool pi_lower_holds(std::uint64_t p, unsigned n, const Int& pi);
bool pi_upper_holds(std::uint64_t p, unsigned n, const Int& pi);
Rational pi_lower(std::uint64_t p, unsigned n);
Rational pi_upper(std::uint64_t p, unsigned n);

/// |pi* - p^-2 pi| <= p^(n - floor(n/2)/2) + p^(n - 1 - floor(n/3)), exactly.
bool pi_star_deviation_holds(std::uint64_t p, unsigned n, const Int& pi, const Int& pi_star);

struct RationalInterval {
    Rational lower;
    Rational upper;
    bool contains(const Rational& v) const { return lower <= v && v <= upper; }
};

RationalInterval pi_star_bounds(std::uint64_t p, unsigned n);

struct IrrCountReport {
    std::uint64_t q = 0;
    unsigned n = 0;
    Int pi_exact;
    std::optional<Int> pi_star_exact;
    Rational pi_lower, pi_upper;
    Rational pi_star_lower, pi_star_upper;
    bool pi_interval_ok = false;
    std::optional<bool> pi_star_deviation_ok;
};

/// pi_star_exact is filled when p^(n-2) <= budget and n >= 3.
IrrCountReport irr_count_report(std::uint64_t p, unsigned n, const Int& budget, unsigned jobs = 1);

struct CorollaryRow {
    unsigned n = 0;
    Int pi_star;
    Rational bound;  // 2^n / (7n)
    bool pass = false;
};

/// pi*_2(n) >= 2^n/(7n) for each n in [n_lo, n_hi], pi* by enumeration.
std::vector<CorollaryRow> corollary_check(unsigned n_lo, unsigned n_hi, const Int& budget, unsigned jobs = 1);

}  // namespace irrcount
