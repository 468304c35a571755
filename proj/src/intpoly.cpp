#include "irrcount/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace irrcount {

// ---- IntPoly ---------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t e)
{
    std::vector<Int> v(e + 1, Int(0));
    v[e] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::eval(const Int& x) const
{
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

FFPoly IntPoly::reduce(PrimeModulus p) const
{
    std::vector<std::uint64_t> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(p.reduce(v));
    return FFPoly(p, std::move(r));
}

std::string IntPoly::to_text() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].get_str();
    }
    return out;
}

IntPoly IntPoly::from_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<Int> c;
    std::string tok;
    while (in >> tok) {
        Int v;
        if (v.set_str(tok, 10) != 0) throw std::invalid_argument("bad polynomial coefficient: " + tok);
        c.push_back(std::move(v));
    }
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<Int> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntDivMod divmod(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("IntPoly division by zero polynomial");
    if (!b.is_monic()) throw std::invalid_argument("IntPoly division requires a monic divisor");
    const int db = b.degree();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Int> r = a.coeffs();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
    const auto& d = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        const Int coef = r[i];
        if (coef == 0) continue;
        q[i - db] = coef;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= coef * d[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// ---- IntMatrix -------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t n) : n_(n), e_(n * n, Int(0))
{
    if (n == 0) throw std::invalid_argument("IntMatrix: dimension must be positive");
}

IntMatrix::IntMatrix(std::size_t n, std::vector<Int> row_major) : n_(n), e_(std::move(row_major))
{
    if (n == 0 || e_.size() != n * n) throw std::invalid_argument("IntMatrix: entry count is not n*n");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size())
{
    if (n_ == 0) throw std::invalid_argument("IntMatrix: dimension must be positive");
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("IntMatrix: not square");
        for (long v : row) e_.emplace_back(v);
    }
}

Int IntMatrix::trace() const
{
    Int t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool IntMatrix::is_lower_hessenberg() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 2; j < n_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::string IntMatrix::to_text() const
{
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ' ';
            out += at(i, j).get_str();
        }
    }
    return out;
}

IntMatrix IntMatrix::from_text(std::string_view text)
{
    std::vector<std::vector<Int>> rows;
    std::string s(text);
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(';', start);
        if (end == std::string::npos) end = s.size();
        std::istringstream in(s.substr(start, end - start));
        std::vector<Int> r;
        std::string tok;
        while (in >> tok) {
            Int v;
            if (v.set_str(tok, 10) != 0) throw std::invalid_argument("bad matrix entry: " + tok);
            r.push_back(std::move(v));
        }
        rows.push_back(std::move(r));
        start = end + 1;
    }
    const std::size_t n = rows.size();
    std::vector<Int> flat;
    for (auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("matrix text is not square");
        for (auto& v : r) flat.push_back(std::move(v));
    }
    return IntMatrix(n, std::move(flat));
}

// ---- determinants and characteristic polynomials ---------------------------

Int determinant(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<Int> m = a.entries();
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    Int d = at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

IntPoly charpoly_interp(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<Int> values;
    values.reserve(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = (i == j ? Int(x) : Int(0)) - a.at(i, j);
        values.push_back(determinant(m));
    }

    // Newton form on nodes 0..n: f(x) = sum_k (D^k f(0) / k!) * x(x-1)...(x-k+1)
    IntPoly result;
    IntPoly falling{1};
    Int factorial = 1;
    std::vector<Int> diff = values;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            factorial *= Int(static_cast<unsigned long>(k));
            for (std::size_t i = 0; i + k <= n; ++i) diff[i] = diff[i + 1] - diff[i];
            falling = falling * IntPoly({-static_cast<long>(k - 1), 1});
        }
        if (!mpz_divisible_p(diff[0].get_mpz_t(), factorial.get_mpz_t()))
            throw std::logic_error("charpoly_interp: non-integral Newton coefficient");
        Int c;
        mpz_divexact(c.get_mpz_t(), diff[0].get_mpz_t(), factorial.get_mpz_t());
        result = result + IntPoly(std::vector<Int>{c}) * falling;
    }
    if (result.degree() != static_cast<int>(n) || !result.is_monic())
        throw std::logic_error("charpoly_interp: interpolated polynomial is not monic of degree n");
    return result;
}

IntPoly charpoly_hessenberg(const IntMatrix& b)
{
    if (!b.is_lower_hessenberg()) throw std::invalid_argument("charpoly_hessenberg: matrix is not lower Hessenberg");
    // t is upper Hessenberg with the same characteristic polynomial
    const IntMatrix t = b.transposed();
    const std::size_t n = t.size();
    std::vector<IntPoly> minors{IntPoly{1}};
    for (std::size_t m = 1; m <= n; ++m) {
        IntPoly next = IntPoly(std::vector<Int>{-t.at(m - 1, m - 1), Int(1)}) * minors[m - 1];
        Int sub = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            sub *= t.at(i + 1, i);
            if (sub == 0) break;
            const Int scale = t.at(i, m - 1) * sub;
            if (scale != 0) next = next - IntPoly(std::vector<Int>{scale}) * minors[i];
        }
        minors.push_back(std::move(next));
    }
    return minors.back();
}

// ---- divisors --------------------------------------------------------------

namespace {

Int pollard_brent(const Int& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys;
        auto step = [&](const Int& v) {
            Int r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        const unsigned long batch = 64;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = step(y);
                    Int diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        }
        if (d == n) {
            do {
                ys = step(ys);
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<Int>& primes)
{
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<Int> positive_divisors(const Int& a)
{
    if (a == 0) throw std::invalid_argument("positive_divisors: zero has no finite divisor set");
    std::vector<Int> primes;
    factor_into(abs(a), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<Int> divs{Int(1)};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t existing = divs.size();
        Int pk = 1;
        for (std::size_t e = i; e < j; ++e) {
            pk *= primes[i];
            for (std::size_t d = 0; d < existing; ++d) divs.push_back(divs[d] * pk);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int mignotte_bound(const IntPoly& f)
{
    Int sum = 0;
    for (const auto& c : f.coeffs()) sum += abs(c);
    return pow_ui(2, static_cast<unsigned long>(std::max(f.degree(), 0))) * sum;
}

// ---- irreducibility and factoring -----------------------------------------

namespace {

IntPoly linear(const Int& root) { return IntPoly(std::vector<Int>{-root, Int(1)}); }

std::optional<Int> find_integer_root(const IntPoly& f)
{
    const Int c0 = f.coeff(0);
    if (c0 == 0) return Int(0);
    for (const auto& d : positive_divisors(c0)) {
        if (f.eval(d) == 0) return d;
        if (f.eval(-d) == 0) return Int(-d);
    }
    return std::nullopt;
}

// Requires f monic without integer roots. Any monic factor X^2 + aX + b has
// b | f(0) and (1 + a + b) | f(1), which pins a given b.
std::optional<IntPoly> find_quadratic_factor(const IntPoly& f)
{
    const Int bound = mignotte_bound(f);
    const Int f1 = f.eval(1), fm1 = f.eval(-1);
    const auto b_divs = positive_divisors(f.coeff(0));
    const auto s_divs = positive_divisors(f1);
    for (const auto& bd : b_divs) {
        if (bd > bound) break;
        for (const Int& b : {bd, Int(-bd)}) {
            for (const auto& sd : s_divs) {
                for (const Int& s : {sd, Int(-sd)}) {
                    const Int a = s - 1 - b;
                    if (abs(a) > bound) continue;
                    const Int at_minus_one = 1 - a + b;
                    if (at_minus_one == 0 || !mpz_divisible_p(fm1.get_mpz_t(), at_minus_one.get_mpz_t())) continue;
                    IntPoly q(std::vector<Int>{b, a, Int(1)});
                    if (divmod(f, q).remainder.is_zero()) return q;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(IrreducibilityVerdict::Status s)
{
    switch (s) {
    case IrreducibilityVerdict::Status::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::Status::Reducible: return "Reducible";
    case IrreducibilityVerdict::Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

IrreducibilityVerdict irreducible_over_z(const IntPoly& f, const IrreducibilityPolicy& policy)
{
    using Status = IrreducibilityVerdict::Status;
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("irreducible_over_z: requires monic, degree >= 1");
    IrreducibilityVerdict v;
    if (f.degree() == 1) {
        v.status = Status::Irreducible;
        v.prime_witness = policy.primes.empty() ? 2 : policy.primes.front();
        return v;
    }
    if (f.coeff(0) == 0) {
        v.status = Status::Reducible;
        v.factor = IntPoly::x();
        return v;
    }
    for (auto p : policy.primes) {
        if (is_irreducible(f.reduce(PrimeModulus(p)))) {
            v.status = Status::Irreducible;
            v.prime_witness = p;
            return v;
        }
    }
    if (f.degree() > 5) return v;
    if (auto r = find_integer_root(f)) {
        v.status = Status::Reducible;
        v.factor = linear(*r);
        return v;
    }
    if (f.degree() >= 4) {
        if (auto q = find_quadratic_factor(f)) {
            v.status = Status::Reducible;
            v.factor = std::move(q);
            return v;
        }
    }
    v.status = Status::Irreducible;
    return v;
}

std::vector<IntPoly> factor_small_degree(const IntPoly& f)
{
    if (!f.is_monic()) throw std::invalid_argument("factor_small_degree: requires a monic polynomial");
    if (f.degree() > 4) throw std::invalid_argument("factor_small_degree: degree above 4 is out of policy");
    std::vector<IntPoly> out;
    IntPoly g = f;
    while (g.degree() >= 1) {
        auto r = find_integer_root(g);
        if (!r) break;
        IntPoly lin = linear(*r);
        g = divmod(g, lin).quotient;
        out.push_back(std::move(lin));
    }
    if (g.degree() == 4) {
        if (auto q = find_quadratic_factor(g)) {
            out.push_back(divmod(g, *q).quotient);
            out.push_back(std::move(*q));
            g = IntPoly{1};
        }
    }
    if (g.degree() >= 2) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace irrcount
