#ifndef EBERTINI_MULTIPOLY_HPP
#define EBERTINI_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ebertini/scalar.hpp"

namespace ebertini {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t exponent_total(const Exponents& e)
{
    std::uint64_t t = 0;
    for (auto v : e)
        t += v;
    return t;
}

// Graded-lexicographic order: total degree first, then lexicographic on the
// exponent vector.  The canonical term order for iteration and printing.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        std::uint64_t ta = exponent_total(a), tb = exponent_total(b);
        if (ta != tb)
            return ta < tb;
        return a < b;
    }
};

struct BiDegree {
    long deg_x = 0;
    long deg_y = 0;
    bool operator==(const BiDegree&) const = default;
};

// Sparse multivariate polynomial with exact coefficients.  Terms map exponent
// vectors to nonzero scalars; all exponent vectors have length equal to the
// variable count and all scalars share one domain.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Scalar, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(std::vector<std::string> vars, ScalarDomain dom = kRationalDomain)
        : vars_(std::move(vars)), dom_(dom)
    {
    }

    static MultiPoly zero(std::vector<std::string> vars, ScalarDomain dom = kRationalDomain)
    {
        return MultiPoly(std::move(vars), dom);
    }
    static MultiPoly constant(std::vector<std::string> vars, const Scalar& c);
    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index,
                              ScalarDomain dom = kRationalDomain);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, const Scalar& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const ScalarDomain& domain() const { return dom_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c into the coefficient at exps, dropping the term if the
    // result is zero.
    void add_term(const Exponents& exps, const Scalar& c);

    Scalar coefficient(const Exponents& exps) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const
    {
        return vars_ == o.vars_ && dom_ == o.dom_ && terms_ == o.terms_;
    }

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(std::uint32_t e) const;

    // -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var_index) const;
    long degree_in_block(std::span<const std::size_t> var_indices) const;

    // Maximum total degrees in the two blocks of a partition of the variable
    // list.  x_indices must name distinct valid variables; the complement is
    // the Y-block.
    BiDegree bidegree(std::span<const std::size_t> x_indices) const;

    bool is_homogeneous() const;
    bool is_homogeneous_in_block(std::span<const std::size_t> var_indices) const;

    Scalar eval(std::span<const Scalar> point) const;

    // Substitute scalars for a subset of the variables; the result keeps the
    // full variable list.
    MultiPoly eval_partial(const std::map<std::size_t, Scalar>& values) const;

    // Substitute a polynomial for every variable (images share one variable
    // list, which becomes the result's).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    MultiPoly partial_derivative(std::size_t var_index) const;
    MultiPoly partial_derivative(const std::string& var_name) const;

    // Sum of absolute values of the coefficients; rational domain only.
    mpq_class l1_norm() const;

    // Largest term in graded-lex order; polynomial must be nonzero.
    const std::pair<const Exponents, Scalar>& leading_term() const;

    // Integer coefficients, content one, positive leading coefficient.
    // Returns the normalized polynomial; rational domain only.
    MultiPoly primitive_normalized() const;

    MultiPoly reduce_mod(std::uint64_t p) const;

    std::size_t var_index(const std::string& name) const;

    std::string to_string() const;

private:
    void require_compatible(const MultiPoly& o) const;
    void check_exps(const Exponents& exps) const;

    std::vector<std::string> vars_;
    ScalarDomain dom_{};
    TermMap terms_;
};

// Reads a polynomial on `from_vars` into the context `to_vars`; index_map[i]
// gives the position of from_vars[i] inside to_vars.
MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& to_vars,
                const std::vector<std::size_t>& index_map);

// Canonical ambient variable names X0..Xn, and dual-space names Y0..YN.
std::vector<std::string> x_variables(std::size_t count);
std::vector<std::string> y_variables(std::size_t count);

// Degree-d exponent vectors on nvars variables, in descending graded-lex
// order (leading monomial first).
std::vector<Exponents> monomials_of_degree(std::size_t nvars, long d);

// Exact division: returns q with p = q * d, or throws DomainError when d does
// not divide p.  Both arguments share a variable list and domain.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

mpz_class binomial(unsigned long n, unsigned long k);

} // namespace ebertini

#endif
