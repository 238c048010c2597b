#include "ebertini/scalar.hpp"

#include <cctype>

namespace ebertini {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    // extended Euclid; p need not be prime as long as gcd(a, p) = 1
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw DomainError("element not invertible mod " + std::to_string(p));
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar Scalar::reduce_mod(std::uint64_t p) const
{
    require_field(Field::Rational);
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class den_mod = q_.get_den() % pz;
    if (den_mod == 0)
        throw DomainError("denominator divisible by " + std::to_string(p) +
                          "; reduction to F_p undefined");
    mpz_class num_mod = q_.get_num() % pz;
    if (num_mod < 0)
        num_mod += pz;
    std::uint64_t n = num_mod.get_ui();
    std::uint64_t d = den_mod.get_ui();
    return Scalar::mod(mulmod(n, invmod(d, p), p), p);
}

std::string Scalar::to_string() const
{
    if (dom_.field == Field::Mod)
        return std::to_string(r_);
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpq_class parse_rational(const std::string& text)
{
    if (text.empty())
        throw ParseError("empty rational literal");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("invalid rational literal: " + text);
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal: " + text);
    v.canonicalize();
    return v;
}

} // namespace ebertini
