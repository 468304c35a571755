// Exact integer and rational helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irrcount {

using Int = mpz_class;
using Rational = mpq_class;

/// Raised when an exhaustive operation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, Int required)
        : std::runtime_error(what + " (requires " + required.get_str() + ")"),
          required_(std::move(required)) {}

    const Int& required() const noexcept { return required_; }

private:
    Int required_;
};

Int pow(const Int& base, unsigned long exp);
Int pow_ui(unsigned long base, unsigned long exp);

Int floor_div(const Int& a, const Int& b);
Int floor(const Rational& q);
Int ceil(const Rational& q);

/// Smallest integer s with s*s >= a (a >= 0).
Int ceil_sqrt(const Int& a);
bool is_square(const Int& a);

/// "num/den" in lowest terms; integers keep the "/1" suffix.
std::string to_fraction(const Rational& q);
Rational parse_fraction(const std::string& s);

std::uint64_t to_u64(const Int& a);

}  // namespace irrcount
