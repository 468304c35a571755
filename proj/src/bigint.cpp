#include "irrcount/bigint.hpp"

namespace irrcount {

Int pow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int pow_ui(unsigned long base, unsigned long exp)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Int floor_div(const Int& a, const Int& b)
{
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor(const Rational& q)
{
    return floor_div(q.get_num(), q.get_den());
}

Int ceil(const Rational& q)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_sqrt(const Int& a)
{
    if (a < 0) throw std::domain_error("ceil_sqrt: negative argument");
    Int s;
    mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
    if (s * s < a) ++s;
    return s;
}

bool is_square(const Int& a)
{
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

std::string to_fraction(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

std::uint64_t to_u64(const Int& a)
{
    if (a < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64)
        throw std::out_of_range("value does not fit in 64 bits: " + a.get_str());
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, a.get_mpz_t());
    return r;
}

}  // namespace irrcount
