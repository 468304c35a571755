#include "irrcount/ffpoly.hpp"

#include "irrcount/parallel.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace irrcount {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int moebius(unsigned n)
{
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

void require_same_field(const FFPoly& a, const FFPoly& b)
{
    if (!(a.modulus() == b.modulus())) throw std::invalid_argument("FFPoly: modulus mismatch");
}

std::uint64_t checked_total(const Int& total, const Int& budget, const std::string& what)
{
    if (total > budget) throw BudgetExceeded(what + " exceeds budget " + budget.get_str(), total);
    return to_u64(total);
}

// GF(2)[X] with bit i holding the X^i coefficient; moduli up to degree 62.
namespace gf2 {

int degree(u64 a) { return a ? 63 - __builtin_clzll(a) : -1; }

// a * b mod f for deg a, deg b < n = deg f
u64 mulmod(u64 a, u64 b, u64 f, int n)
{
    u64 r = 0;
    const u64 top = 1ull << n;
    for (int i = degree(b); i >= 0; --i) {
        r <<= 1;
        if (r & top) r ^= f;
        if ((b >> i) & 1) r ^= a;
    }
    return r;
}

u64 gcd(u64 a, u64 b)
{
    while (b) {
        int db = degree(b);
        while (degree(a) >= db) a ^= b << (degree(a) - db);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(u64 f, unsigned n)
{
    const u64 x = 2;
    std::vector<u64> frob(n + 1);
    frob[0] = x;
    for (unsigned i = 1; i <= n; ++i) frob[i] = mulmod(frob[i - 1], frob[i - 1], f, static_cast<int>(n));
    if (frob[n] != x) return false;
    for (unsigned r : prime_divisors(n))
        if (gcd(f, frob[n / r] ^ x) != 1) return false;
    return true;
}

}  // namespace gf2

// Small fields (p <= 1024, degree <= 48) on fixed arrays. Ben-Or test:
// f is irreducible iff gcd(X^(p^i) - X, f) = 1 for 1 <= i <= n/2, with
// X^(p^i) advanced by the Frobenius matrix.
namespace smallfield {

constexpr u64 kMaxPrime = 1024;
constexpr unsigned kMaxDegree = 48;

using Row = std::array<u64, kMaxDegree>;

u64 inverse(u64 a, u64 p)
{
    u64 r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// a <- a mod b; returns the new degree of a (-1 for zero).
int reduce(u64* a, int da, const u64* b, int db, u64 p)
{
    const u64 binv = inverse(b[db], p);
    for (int i = da; i >= db; --i) {
        const u64 c = a[i] * binv % p;
        if (!c) continue;
        const u64 neg = p - c;
        for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + neg * b[j]) % p;
    }
    int d = std::min(da, db - 1);
    while (d >= 0 && a[d] == 0) --d;
    return d;
}

// gcd(h, f) == 1 with deg h < deg f
bool coprime(const u64* h, int dh, const u64* f, int n, u64 p)
{
    std::array<u64, kMaxDegree + 1> a{}, b{};
    std::copy(f, f + n + 1, a.begin());
    std::copy(h, h + dh + 1, b.begin());
    int da = n, db = dh;
    while (db >= 0) {
        da = reduce(a.data(), da, b.data(), db, p);
        std::swap(a, b);
        std::swap(da, db);
    }
    return da == 0;
}

bool is_irreducible(const u64* f, unsigned n, u64 p)
{
    if (f[0] == 0) return false;
    // q[j] = X^(p j) mod f
    std::array<Row, kMaxDegree> q;
    Row r{};
    r[0] = 1;
    for (u64 t = 0;; ++t) {
        if (t % p == 0) {
            q[t / p] = r;
            if (t / p == n - 1) break;
        }
        const u64 top = r[n - 1];
        for (unsigned i = n - 1; i > 0; --i) r[i] = r[i - 1];
        r[0] = 0;
        if (top) {
            const u64 neg = p - top;
            for (unsigned i = 0; i < n; ++i) r[i] = (r[i] + neg * f[i]) % p;
        }
    }
    Row h{};
    h[1] = 1;
    for (unsigned i = 1; i <= n / 2; ++i) {
        Row next{};
        for (unsigned j = 0; j < n; ++j) {
            if (!h[j]) continue;
            for (unsigned k = 0; k < n; ++k) next[k] += h[j] * q[j][k];
        }
        for (unsigned k = 0; k < n; ++k) h[k] = next[k] % p;
        Row d = h;
        d[1] = (d[1] + p - 1) % p;
        int dd = static_cast<int>(n) - 1;
        while (dd >= 0 && d[dd] == 0) --dd;
        if (dd < 0 || !coprime(d.data(), dd, f, static_cast<int>(n), p)) return false;
    }
    return true;
}

}  // namespace smallfield

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p)
{
    if (p >= (1ull << 63) || !is_prime_u64(p))
        throw std::invalid_argument("modulus is not a prime below 2^63: " + std::to_string(p));
}

std::uint64_t PrimeModulus::reduce(std::int64_t a) const noexcept
{
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = a % m;
    return static_cast<u64>(r < 0 ? r + m : r);
}

std::uint64_t PrimeModulus::reduce(const Int& a) const
{
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
    return r.get_ui();
}

std::uint64_t PrimeModulus::add(std::uint64_t a, std::uint64_t b) const noexcept
{
    u64 s = a + b;  // p < 2^63, no overflow
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeModulus::sub(std::uint64_t a, std::uint64_t b) const noexcept
{
    return a >= b ? a - b : a + (p_ - b);
}

std::uint64_t PrimeModulus::mul(std::uint64_t a, std::uint64_t b) const noexcept
{
    return mulmod_u64(a, b, p_);
}

std::uint64_t PrimeModulus::pow(std::uint64_t a, std::uint64_t e) const noexcept
{
    return powmod_u64(a, e, p_);
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const
{
    if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
    return powmod_u64(a, p_ - 2, p_);
}

FFPoly::FFPoly(PrimeModulus p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& v : c_) v %= p_.value();
    trim();
}

FFPoly::FFPoly(PrimeModulus p, std::span<const std::int64_t> coeffs) : p_(p)
{
    c_.reserve(coeffs.size());
    for (auto v : coeffs) c_.push_back(p_.reduce(v));
    trim();
}

FFPoly FFPoly::x_power(PrimeModulus p, std::size_t e)
{
    std::vector<u64> c(e + 1, 0);
    c[e] = 1;
    return FFPoly(p, std::move(c));
}

void FFPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::monic() const
{
    if (c_.empty()) return *this;
    u64 li = p_.inv(c_.back());
    FFPoly r = *this;
    for (auto& v : r.c_) v = p_.mul(v, li);
    return r;
}

std::string FFPoly::to_text() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i];
    return os.str();
}

FFPoly operator+(const FFPoly& a, const FFPoly& b)
{
    require_same_field(a, b);
    const auto& m = a.p_;
    FFPoly r(m);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = m.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

FFPoly operator-(const FFPoly& a, const FFPoly& b)
{
    require_same_field(a, b);
    const auto& m = a.p_;
    FFPoly r(m);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = m.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b)
{
    require_same_field(a, b);
    FFPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    const auto& m = a.p_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = m.add(r.c_[i + j], m.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

FFDivMod divmod(const FFPoly& a, const FFPoly& b)
{
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("FFPoly division by zero");
    const auto& m = a.modulus();
    std::vector<u64> r = a.coeffs();
    const auto& d = b.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {FFPoly(m), a};
    std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const u64 lead_inv = m.inv(d.back());
    for (int i = a.degree(); i >= db; --i) {
        u64 coef = m.mul(r[i], lead_inv);
        if (coef == 0) continue;
        q[i - db] = coef;
        for (int j = 0; j <= db; ++j) r[i - db + j] = m.sub(r[i - db + j], m.mul(coef, d[j]));
    }
    r.resize(static_cast<std::size_t>(db));
    return {FFPoly(m, std::move(q)), FFPoly(m, std::move(r))};
}

FFPoly rem(const FFPoly& a, const FFPoly& b)
{
    return divmod(a, b).remainder;
}

FFPoly gcd(const FFPoly& a, const FFPoly& b)
{
    FFPoly x = a, y = b;
    while (!y.is_zero()) {
        FFPoly t = rem(x, y);
        x = std::move(y);
        y = std::move(t);
    }
    return x.monic();
}

FFPoly mulmod(const FFPoly& a, const FFPoly& b, const FFPoly& m)
{
    return rem(a * b, m);
}

FFPoly powmod(const FFPoly& base, const Int& e, const FFPoly& m)
{
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    FFPoly result = rem(FFPoly(base.modulus(), std::vector<u64>{1}), m);
    FFPoly b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
    }
    return result;
}

FFPoly frobenius_power(const FFPoly& m, unsigned e)
{
    const Int p(m.prime());
    FFPoly x = rem(FFPoly::x_power(m.modulus(), 1), m);
    for (unsigned i = 0; i < e; ++i) x = powmod(x, p, m);
    return x;
}

bool is_irreducible(const FFPoly& f)
{
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("is_irreducible: requires monic, degree >= 1");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    if (f.prime() == 2 && n <= 62) {
        u64 bits = 0;
        for (unsigned i = 0; i <= n; ++i) bits |= f.coeff(i) << i;
        return gf2::is_irreducible(bits, n);
    }
    if (f.prime() <= smallfield::kMaxPrime && n <= smallfield::kMaxDegree)
        return smallfield::is_irreducible(f.coeffs().data(), n, f.prime());
    return is_irreducible_generic(f);
}

bool is_irreducible_generic(const FFPoly& f)
{
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("is_irreducible: requires monic, degree >= 1");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const Int p(f.prime());
    const FFPoly x = FFPoly::x_power(f.modulus(), 1);
    const auto divisors = prime_divisors(n);

    // frob[i] = X^(p^i) mod f for i = 0..n
    std::vector<FFPoly> frob{rem(x, f)};
    for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), p, f));
    if (!(frob[n] == frob[0])) return false;
    for (unsigned r : divisors) {
        FFPoly g = gcd(frob[n / r] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

Int count_irreducible(std::uint64_t p, unsigned n)
{
    if (n == 0) throw std::invalid_argument("count_irreducible: n must be >= 1");
    Int sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        Int term = pow_ui(p, n / d);
        sum += mu > 0 ? term : Int(-term);
    }
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), sum.get_mpz_t(), n);
    return q;
}

Int count_irreducible_enumerated(std::uint64_t p, unsigned n, const Int& budget)
{
    PrimeModulus m(p);
    const u64 total = checked_total(pow_ui(p, n), budget, "enumeration of p^n monic polynomials");
    Int count = 0;
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    for (u64 idx = 0; idx < total; ++idx) {
        u64 v = idx;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = v % p;
            v /= p;
        }
        if (is_irreducible(FFPoly(m, c))) ++count;
    }
    return count;
}

FFPoly constrained_candidate(PrimeModulus p, unsigned n, std::uint64_t index)
{
    if (n < 3) throw std::invalid_argument("constrained pattern needs n >= 3");
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    // a_0 is the most significant digit
    for (unsigned i = n - 2; i-- > 0;) {
        c[i] = index % p.value();
        index /= p.value();
    }
    return FFPoly(p, std::move(c));
}

std::vector<FFPoly> enumerate_constrained_irreducibles(std::uint64_t p, unsigned n, const Int& budget, unsigned jobs)
{
    if (n < 3) throw std::invalid_argument("enumerate_constrained_irreducibles: n must be >= 3");
    PrimeModulus m(p);
    const u64 total = checked_total(pow_ui(p, n - 2), budget, "constrained candidate sweep p^(n-2)");
    const auto ranges = split_ranges(total, jobs);
    std::vector<std::vector<FFPoly>> parts(ranges.size());
    run_partitioned(ranges, [&](std::size_t part, Range r) {
        for (u64 idx = r.begin; idx < r.end; ++idx) {
            FFPoly f = constrained_candidate(m, n, idx);
            if (is_irreducible(f)) parts[part].push_back(std::move(f));
        }
    });
    std::vector<FFPoly> out;
    for (auto& part : parts)
        for (auto& f : part) out.push_back(std::move(f));
    return out;
}

bool pi_lower_holds(std::uint64_t p, unsigned n, const Int& pi)
{
    // n*pi >= p^n - 2 p^(n/2)  <=>  p^n - n*pi <= 2 p^(n/2)
    const Int pn = pow_ui(p, n);
    const Int gap = pn - Int(n) * pi;
    if (gap <= 0) return true;
    return gap * gap <= 4 * pn;
}

bool pi_upper_holds(std::uint64_t p, unsigned n, const Int& pi)
{
    return Int(n) * pi <= pow_ui(p, n);
}

Rational pi_lower(std::uint64_t p, unsigned n)
{
    const Int pn = pow_ui(p, n);
    Rational r(pn - 2 * ceil_sqrt(pn), Int(n));
    r.canonicalize();
    return r;
}

Rational pi_upper(std::uint64_t p, unsigned n)
{
    Rational r(pow_ui(p, n), Int(n));
    r.canonicalize();
    return r;
}

namespace {

// p^(n - floor(n/2)/2) = sqrt(p^(2n - floor(n/2)))
unsigned half_term_twice_exponent(unsigned n) { return 2 * n - n / 2; }
unsigned third_term_exponent(unsigned n) { return n - 1 - n / 3; }

}  // namespace

bool pi_star_deviation_holds(std::uint64_t p, unsigned n, const Int& pi, const Int& pi_star)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Int p2 = Int(p) * Int(p);
    Rational dev(Int(pi_star * p2 - pi), p2);
    dev.canonicalize();
    if (dev < 0) dev = -dev;
    Rational slack = dev - Rational(pow_ui(p, third_term_exponent(n)));
    if (slack <= 0) return true;
    return slack * slack <= Rational(pow_ui(p, half_term_twice_exponent(n)));
}

RationalInterval pi_star_bounds(std::uint64_t p, unsigned n)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const Int p2 = Int(p) * Int(p);
    // ceil_sqrt over-approximates p^(n - floor(n/2)/2), keeping both endpoints safe
    const Int half_term = ceil_sqrt(pow_ui(p, half_term_twice_exponent(n)));
    const Rational err = Rational(half_term + pow_ui(p, third_term_exponent(n)));
    RationalInterval out{pi_lower(p, n) / Rational(p2) - err, pi_upper(p, n) / Rational(p2) + err};
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

IrrCountReport irr_count_report(std::uint64_t p, unsigned n, const Int& budget, unsigned jobs)
{
    PrimeModulus{p};
    IrrCountReport r;
    r.q = p;
    r.n = n;
    r.pi_exact = count_irreducible(p, n);
    r.pi_lower = pi_lower(p, n);
    r.pi_upper = pi_upper(p, n);
    r.pi_interval_ok = pi_lower_holds(p, n, r.pi_exact) && pi_upper_holds(p, n, r.pi_exact);
    auto star = pi_star_bounds(p, n);
    r.pi_star_lower = star.lower;
    r.pi_star_upper = star.upper;
    if (n >= 3 && pow_ui(p, n - 2) <= budget) {
        Int count(static_cast<unsigned long>(enumerate_constrained_irreducibles(p, n, budget, jobs).size()));
        r.pi_star_exact = count;
        r.pi_star_deviation_ok = pi_star_deviation_holds(p, n, r.pi_exact, count);
    }
    return r;
}

std::vector<CorollaryRow> corollary_check(unsigned n_lo, unsigned n_hi, const Int& budget, unsigned jobs)
{
    if (n_lo < 4) throw std::invalid_argument("corollary_check: n must be >= 4");
    std::vector<CorollaryRow> rows;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        CorollaryRow row;
        row.n = n;
        row.pi_star = Int(static_cast<unsigned long>(enumerate_constrained_irreducibles(2, n, budget, jobs).size()));
        row.bound = Rational(pow_ui(2, n), Int(7 * n));
        row.bound.canonicalize();
        row.pass = Rational(row.pi_star) >= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace irrcount
