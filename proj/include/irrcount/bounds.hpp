// Exact evaluation of the closed-form lower bounds and verdicts against
// computed counts. Verdicts compare an integer count against the ceiling of
// a rational bound; no floating point is involved.
#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/census.hpp"
#include "irrcount/lifting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace irrcount {

struct FormulaValue {
    std::string id;
    std::optional<Rational> value;  // absent when not exactly representable
    bool applicable = false;
    std::string reason;             // why not applicable, empty otherwise
};

struct BoundReport {
    unsigned n = 0;
    Int h;
    FormulaValue alps;        // (n / 5^n) H^((n-1)^2/4), n = 2^k + 1
    FormulaValue thm11_main;  // H^((n-1)^2/4) / n, odd n >= 11
    FormulaValue thm12;       // (H-1)^((n-1)^2/4) / (2n), odd n >= 5, odd H >= 3
};

BoundReport eval_bounds(unsigned n, const Int& h);

struct Verdict {
    std::string id;
    std::string computed;
    std::string bound;  // "num/den"
    bool pass = false;
};

/// count >= ceil(bound)
bool meets(const Int& count, const Rational& bound);

std::vector<Verdict> compare(const CensusReport& census, const BoundReport& bounds);
std::vector<Verdict> compare(const CertifiedBound& lifted, const BoundReport& bounds);

bool all_pass(const std::vector<Verdict>& verdicts);

}  // namespace irrcount
