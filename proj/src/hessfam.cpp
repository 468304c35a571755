#include "irrcount/hessfam.hpp"

#include "irrcount/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrcount {

namespace {

// Mixed-radix digits of `index`, first position most significant.
std::vector<Int> to_digits(Int index, const std::vector<Int>& radices)
{
    std::vector<Int> d(radices.size(), Int(0));
    for (std::size_t i = radices.size(); i-- > 0;) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), index.get_mpz_t(), radices[i].get_mpz_t());
        d[i] = r;
        index = q;
    }
    if (index != 0) throw std::out_of_range("stream start index beyond the family size");
    return d;
}

// Odometer increment; false once every position has wrapped.
bool advance(std::vector<Int>& digits, const std::vector<Int>& radices)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radices[i]) return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<Int> slot_radices(const std::vector<Slot>& slots)
{
    std::vector<Int> r;
    for (const auto& s : slots) r.push_back(s.range);
    return r;
}

std::uint64_t checked_family_total(const FamilyParams& params, const Int& budget)
{
    const Int total = family_size(params);
    if (total > budget) throw BudgetExceeded("family enumeration H^(k^2) exceeds budget " + budget.get_str(), total);
    return to_u64(total);
}

}  // namespace

FamilyParams::FamilyParams(unsigned k_, Int h_) : k(k_), h(std::move(h_))
{
    if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
    if (h < 1) throw std::invalid_argument("family parameter H must be >= 1");
}

std::vector<Slot> slot_ranges(const FamilyParams& params)
{
    const unsigned k = params.k;
    std::vector<Slot> slots;
    for (unsigned j = 2; j <= k + 1; ++j) slots.push_back({2 * k - j, Int(1), pow(params.h, j - 1)});
    for (unsigned j = 2; j <= k; ++j) slots.push_back({k - j, pow(params.h, j - 1), pow(params.h, k - j + 1)});
    return slots;
}

BMatrix::BMatrix(FamilyParams params, std::vector<Int> free) : params_(std::move(params)), free_(std::move(free))
{
    const std::size_t k = params_.k;
    if (free_.size() != k * k) throw std::invalid_argument("BMatrix: free block must be k*k");
    for (const auto& v : free_)
        if (v < 0 || v >= params_.h) throw std::invalid_argument("BMatrix: free entry outside [0, H-1]");
}

BMatrix BMatrix::zero(FamilyParams params)
{
    const std::size_t k = params.k;
    return BMatrix(std::move(params), std::vector<Int>(k * k, Int(0)));
}

const Int& BMatrix::free_entry(int i, int j) const
{
    const int k = static_cast<int>(params_.k);
    if (i < 1 || i > k || j < -k || j > -1) throw std::out_of_range("BMatrix: free index outside [1,k] x [-k,-1]");
    return free_[static_cast<std::size_t>((i - 1) * k + (j + k))];
}

IntPoly FCoefficients::to_poly() const
{
    const unsigned n = params.n();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = -f[i];
    return IntPoly(std::move(c));
}

std::vector<Int> FCoefficients::digits() const
{
    std::vector<Int> d;
    for (const auto& s : slot_ranges(params)) d.push_back(f[s.index] / s.multiplier);
    return d;
}

IntMatrix build_matrix(const BMatrix& b)
{
    const int k = static_cast<int>(b.params().k);
    const std::size_t n = b.params().n();
    IntMatrix m(n);
    auto at = [&](int i, int j) -> Int& { return m.at(static_cast<std::size_t>(i + k), static_cast<std::size_t>(j + k)); };
    for (int i = -k; i <= 0; ++i) at(i, i + 1) = 1;
    for (int i = 1; i <= k - 1; ++i) at(i, i + 1) = b.params().h;
    for (int i = 1; i <= k; ++i)
        for (int j = -k; j <= -1; ++j) at(i, j) = b.free_entry(i, j);
    return m;
}

IntPoly charpoly_b(const BMatrix& b)
{
    IntPoly f = charpoly_hessenberg(build_matrix(b));
    const unsigned k = b.params().k;
    if (f.coeff(2 * k) != 0 || f.coeff(2 * k - 1) != 0)
        throw std::logic_error("charpoly_b: X^(2k) or X^(2k-1) coefficient is nonzero");
    return f;
}

std::optional<FCoefficients> f_membership(const IntPoly& f, const FamilyParams& params)
{
    const unsigned k = params.k;
    const unsigned n = params.n();
    if (f.degree() != static_cast<int>(n) || !f.is_monic()) return std::nullopt;
    if (f.coeff(2 * k) != 0 || f.coeff(2 * k - 1) != 0) return std::nullopt;
    FCoefficients out{params, std::vector<Int>(2 * k - 1, Int(0))};
    for (const auto& s : slot_ranges(params)) {
        const Int value = -f.coeff(s.index);
        if (value < 0 || !mpz_divisible_p(value.get_mpz_t(), s.multiplier.get_mpz_t())) return std::nullopt;
        if (value / s.multiplier >= s.range) return std::nullopt;
        out.f[s.index] = value;
    }
    return out;
}

Int family_size(const FamilyParams& params)
{
    Int size = 1;
    for (const auto& s : slot_ranges(params)) size *= s.range;
    if (size != pow(params.h, params.k * params.k)) throw std::logic_error("family_size: slot product differs from H^(k^2)");
    return size;
}

FamilyStream::FamilyStream(FamilyParams params, const Int& start)
    : params_(std::move(params)), slots_(slot_ranges(params_))
{
    if (start >= family_size(params_)) {
        done_ = true;
        return;
    }
    digits_ = to_digits(start, slot_radices(slots_));
}

std::optional<FCoefficients> FamilyStream::next()
{
    if (done_) return std::nullopt;
    FCoefficients out{params_, std::vector<Int>(2 * params_.k - 1, Int(0))};
    for (std::size_t i = 0; i < slots_.size(); ++i) out.f[slots_[i].index] = digits_[i] * slots_[i].multiplier;
    done_ = !advance(digits_, slot_radices(slots_));
    return out;
}

BlockStream::BlockStream(FamilyParams params, const Int& start) : params_(std::move(params))
{
    if (start >= family_size(params_)) {
        done_ = true;
        return;
    }
    digits_ = to_digits(start, std::vector<Int>(params_.k * params_.k, params_.h));
}

std::optional<BMatrix> BlockStream::next()
{
    if (done_) return std::nullopt;
    BMatrix out(params_, digits_);
    done_ = !advance(digits_, std::vector<Int>(digits_.size(), params_.h));
    return out;
}

namespace {

struct ImagePart {
    std::vector<std::string> keys;
    std::vector<std::string> violations;
};

std::vector<ImagePart> sweep_images(const FamilyParams& params, std::uint64_t total, unsigned jobs)
{
    const auto ranges = split_ranges(total, jobs);
    std::vector<ImagePart> parts(ranges.size());
    run_partitioned(ranges, [&](std::size_t part, Range r) {
        BlockStream stream(params, Int(static_cast<unsigned long>(r.begin)));
        auto& out = parts[part];
        out.keys.reserve(r.end - r.begin);
        for (std::uint64_t idx = r.begin; idx < r.end; ++idx) {
            auto b = stream.next();
            IntPoly f = charpoly_b(*b);
            if (!f_membership(f, params))
                out.violations.push_back("image of block #" + std::to_string(idx) + " not in F: " + f.to_text());
            out.keys.push_back(f.to_text());
        }
    });
    return parts;
}

}  // namespace

BijectionReport bijection_check(const FamilyParams& params, const Int& budget, unsigned jobs)
{
    const std::uint64_t total = checked_family_total(params, budget);
    BijectionReport rep;
    rep.params = params;
    rep.family_size = family_size(params);
    rep.degenerate = params.degenerate();

    auto parts = sweep_images(params, total, jobs);
    std::vector<std::string> keys;
    for (auto& p : parts) {
        for (auto& v : p.violations) rep.violations.push_back(std::move(v));
        for (auto& key : p.keys) keys.push_back(std::move(key));
    }
    rep.images = keys.size();
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i] == keys[i - 1]) rep.violations.push_back("repeated image: " + keys[i]);
    rep.distinct = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
    if (rep.violations.size() > 20) rep.violations.resize(20);
    return rep;
}

std::vector<std::string> family_image_keys(const FamilyParams& params, const Int& budget, unsigned jobs)
{
    const std::uint64_t total = checked_family_total(params, budget);
    std::vector<std::string> keys;
    for (auto& p : sweep_images(params, total, jobs))
        for (auto& key : p.keys) keys.push_back(std::move(key));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace irrcount
