#ifndef EBERTINI_SCALAR_HPP
#define EBERTINI_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ebertini/errors.hpp"

namespace ebertini {

enum class Field : std::uint8_t { Rational, Mod };

struct ScalarDomain {
    Field field = Field::Rational;
    std::uint64_t p = 0; // modulus when field == Mod

    bool operator==(const ScalarDomain&) const = default;
    std::string describe() const
    {
        return field == Field::Rational ? "Q" : "F_" + std::to_string(p);
    }
};

inline constexpr ScalarDomain kRationalDomain{Field::Rational, 0};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Exact scalar: a rational in lowest terms with positive denominator, or a
// reduced residue in [0, p).  Domains never mix implicitly.
class Scalar {
public:
    Scalar() : dom_{} {}

    static Scalar rational(mpq_class v)
    {
        v.canonicalize();
        Scalar s;
        s.dom_ = kRationalDomain;
        s.q_ = std::move(v);
        return s;
    }
    static Scalar integer(long v) { return rational(mpq_class(v)); }
    static Scalar mod(std::uint64_t v, std::uint64_t p)
    {
        if (p < 2)
            throw DomainError("prime-field modulus must be at least 2");
        Scalar s;
        s.dom_ = ScalarDomain{Field::Mod, p};
        s.r_ = v % p;
        return s;
    }
    static Scalar zero(const ScalarDomain& dom)
    {
        return dom.field == Field::Rational ? Scalar() : mod(0, dom.p);
    }
    static Scalar one(const ScalarDomain& dom)
    {
        return dom.field == Field::Rational ? integer(1) : mod(1, dom.p);
    }

    const ScalarDomain& domain() const { return dom_; }

    bool is_zero() const
    {
        return dom_.field == Field::Rational ? q_ == 0 : r_ == 0;
    }
    bool is_one() const
    {
        return dom_.field == Field::Rational ? q_ == 1 : r_ == 1;
    }

    const mpq_class& rat() const
    {
        require_field(Field::Rational);
        return q_;
    }
    std::uint64_t residue() const
    {
        require_field(Field::Mod);
        return r_;
    }

    Scalar operator-() const
    {
        Scalar s = *this;
        if (dom_.field == Field::Rational)
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : dom_.p - r_;
        return s;
    }

    Scalar operator+(const Scalar& o) const
    {
        require_same(o);
        Scalar s = *this;
        if (dom_.field == Field::Rational)
            s.q_ += o.q_;
        else {
            s.r_ += o.r_;
            if (s.r_ >= dom_.p)
                s.r_ -= dom_.p;
        }
        return s;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const
    {
        require_same(o);
        Scalar s = *this;
        if (dom_.field == Field::Rational)
            s.q_ *= o.q_;
        else
            s.r_ = mulmod(r_, o.r_, dom_.p);
        return s;
    }
    Scalar operator/(const Scalar& o) const
    {
        require_same(o);
        if (o.is_zero())
            throw DomainError("division by zero scalar");
        Scalar s = *this;
        if (dom_.field == Field::Rational)
            s.q_ /= o.q_;
        else
            s.r_ = mulmod(r_, invmod(o.r_, dom_.p), dom_.p);
        return s;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const
    {
        if (dom_ != o.dom_)
            return false;
        return dom_.field == Field::Rational ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical value order used by grid enumeration: rationals by value,
    // residues by representative.
    static bool value_less(const Scalar& a, const Scalar& b)
    {
        a.require_same(b);
        return a.dom_.field == Field::Rational ? a.q_ < b.q_ : a.r_ < b.r_;
    }

    // Explicit promotion Q -> F_p; fails when the denominator vanishes mod p.
    Scalar reduce_mod(std::uint64_t p) const;

    mpq_class abs_rat() const
    {
        require_field(Field::Rational);
        return q_ < 0 ? mpq_class(-q_) : q_;
    }

    std::string to_string() const;

private:
    void require_field(Field f) const
    {
        if (dom_.field != f)
            throw DomainError("scalar domain mismatch: expected " +
                              (f == Field::Rational ? std::string("Q") : std::string("F_p")) +
                              ", have " + dom_.describe());
    }
    void require_same(const Scalar& o) const
    {
        if (dom_ != o.dom_)
            throw DomainError("scalar domains never mix implicitly (" + dom_.describe() +
                              " vs " + o.dom_.describe() + ")");
    }

    ScalarDomain dom_;
    mpq_class q_ = 0;
    std::uint64_t r_ = 0;
};

// Parses "a", "-a", or "a/b" in decimal.
mpq_class parse_rational(const std::string& text);

} // namespace ebertini

#endif
