#include "ebertini/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ebertini {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

Exponents add_exponents(const Exponents& a, const Exponents& b)
{
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
        if (s > kMaxExponent)
            throw DomainError("exponent overflow in polynomial product");
        r[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

} // namespace

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar& c)
{
    MultiPoly p(std::move(vars), c.domain());
    if (!c.is_zero())
        p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t index,
                              ScalarDomain dom)
{
    if (index >= vars.size())
        throw DomainError("variable index out of range");
    MultiPoly p(vars, dom);
    Exponents e(vars.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Scalar::one(dom));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Scalar& c)
{
    MultiPoly p(std::move(vars), c.domain());
    p.check_exps(exps);
    if (!c.is_zero())
        p.terms_.emplace(std::move(exps), c);
    return p;
}

void MultiPoly::add_term(const Exponents& exps, const Scalar& c)
{
    check_exps(exps);
    if (c.domain() != dom_)
        throw DomainError("term coefficient domain mismatch");
    if (c.is_zero())
        return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Scalar MultiPoly::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar::zero(dom_) : it->second;
}

void MultiPoly::require_compatible(const MultiPoly& o) const
{
    if (vars_ != o.vars_)
        throw DomainError("mismatched variable lists");
    if (dom_ != o.dom_)
        throw DomainError("mismatched scalar domains (" + dom_.describe() + " vs " +
                          o.dom_.describe() + ")");
}

void MultiPoly::check_exps(const Exponents& exps) const
{
    if (exps.size() != vars_.size())
        throw DomainError("exponent vector length differs from variable count");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    require_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(vars_, dom_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    require_compatible(o);
    MultiPoly r(vars_, dom_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const
{
    if (c.domain() != dom_)
        throw DomainError("scalar domain mismatch in scaling");
    MultiPoly r(vars_, dom_);
    if (c.is_zero())
        return r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const
{
    MultiPoly r = constant(vars_, Scalar::one(dom_));
    MultiPoly base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

long MultiPoly::total_degree() const
{
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(exponent_total(e)));
    return d;
}

long MultiPoly::degree_in(std::size_t var_index) const
{
    if (var_index >= vars_.size())
        throw DomainError("variable index out of range");
    long d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(e[var_index]));
    return d;
}

long MultiPoly::degree_in_block(std::span<const std::size_t> var_indices) const
{
    long d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto i : var_indices) {
            if (i >= vars_.size())
                throw DomainError("variable index out of range");
            t += e[i];
        }
        d = std::max(d, t);
    }
    return d;
}

BiDegree MultiPoly::bidegree(std::span<const std::size_t> x_indices) const
{
    std::vector<bool> seen(vars_.size(), false);
    for (auto i : x_indices) {
        if (i >= vars_.size() || seen[i])
            throw DomainError("invalid variable partition");
        seen[i] = true;
    }
    std::vector<std::size_t> y_indices;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!seen[i])
            y_indices.push_back(i);
    BiDegree b;
    b.deg_x = std::max<long>(0, degree_in_block(x_indices));
    b.deg_y = std::max<long>(0, degree_in_block(y_indices));
    return b;
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    std::uint64_t d = exponent_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exponent_total(e) != d)
            return false;
    return true;
}

bool MultiPoly::is_homogeneous_in_block(std::span<const std::size_t> var_indices) const
{
    if (terms_.empty())
        return true;
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto i : var_indices)
            t += e[i];
        if (d == -1)
            d = t;
        else if (d != t)
            return false;
    }
    return true;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const
{
    if (point.size() != vars_.size())
        throw DomainError("evaluation point length differs from variable count");
    for (const auto& s : point)
        if (s.domain() != dom_)
            throw DomainError("evaluation point domain mismatch");
    Scalar acc = Scalar::zero(dom_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            Scalar b = point[i];
            std::uint32_t k = e[i];
            // small exponents dominate; square-and-multiply regardless
            Scalar pw = Scalar::one(dom_);
            while (k) {
                if (k & 1)
                    pw *= b;
                k >>= 1;
                if (k)
                    b *= b;
            }
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::eval_partial(const std::map<std::size_t, Scalar>& values) const
{
    for (const auto& [i, s] : values) {
        if (i >= vars_.size())
            throw DomainError("variable index out of range");
        if (s.domain() != dom_)
            throw DomainError("substitution value domain mismatch");
    }
    MultiPoly r(vars_, dom_);
    for (const auto& [e, c] : terms_) {
        Scalar coeff = c;
        Exponents e2 = e;
        for (const auto& [i, s] : values) {
            for (std::uint32_t k = 0; k < e[i]; ++k)
                coeff *= s;
            e2[i] = 0;
        }
        r.add_term(e2, coeff);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const
{
    if (images.size() != vars_.size())
        throw DomainError("substitute requires one image per variable");
    for (const auto& im : images)
        if (im.vars() != images.front().vars() || im.domain() != dom_)
            throw DomainError("substitution images must share a variable list and domain");
    MultiPoly r = MultiPoly::zero(images.front().vars(), dom_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(images.front().vars(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t *= images[i].pow(e[i]);
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var_index) const
{
    if (var_index >= vars_.size())
        throw DomainError("unknown variable in partial derivative");
    MultiPoly r(vars_, dom_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0)
            continue;
        Exponents e2 = e;
        e2[var_index] -= 1;
        Scalar factor = dom_.field == Field::Rational
                            ? Scalar::rational(mpq_class(e[var_index]))
                            : Scalar::mod(e[var_index] % dom_.p, dom_.p);
        r.add_term(e2, c * factor);
    }
    return r;
}

MultiPoly MultiPoly::partial_derivative(const std::string& var_name) const
{
    return partial_derivative(var_index(var_name));
}

mpq_class MultiPoly::l1_norm() const
{
    if (dom_.field != Field::Rational)
        throw DomainError("l1 norm requires rational coefficients");
    mpq_class s = 0;
    for (const auto& [e, c] : terms_)
        s += c.abs_rat();
    return s;
}

const std::pair<const Exponents, Scalar>& MultiPoly::leading_term() const
{
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::primitive_normalized() const
{
    if (dom_.field != Field::Rational)
        throw DomainError("normalization requires rational coefficients");
    if (is_zero())
        return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.rat().get_num().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_term().second.rat() < 0)
        scale = -scale;
    return scaled(Scalar::rational(scale));
}

MultiPoly MultiPoly::reduce_mod(std::uint64_t p) const
{
    if (dom_.field != Field::Rational)
        throw DomainError("reduce_mod starts from rational coefficients");
    MultiPoly r(vars_, ScalarDomain{Field::Mod, p});
    for (const auto& [e, c] : terms_)
        r.add_term(e, c.reduce_mod(p));
    return r;
}

std::size_t MultiPoly::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw DomainError("unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // print leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            out << " + ";
        first = false;
        out << c.to_string();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            out << "*" << vars_[i];
            if (e[i] > 1)
                out << "^" << e[i];
        }
    }
    return out.str();
}

MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& to_vars,
                const std::vector<std::size_t>& index_map)
{
    if (index_map.size() != p.vars().size())
        throw DomainError("embed index map length differs from variable count");
    MultiPoly r(to_vars, p.domain());
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(to_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (index_map[i] >= to_vars.size())
                throw DomainError("embed index map out of range");
            e2[index_map[i]] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

std::vector<std::string> x_variables(std::size_t count)
{
    std::vector<std::string> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = "X" + std::to_string(i);
    return v;
}

std::vector<std::string> y_variables(std::size_t count)
{
    std::vector<std::string> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = "Y" + std::to_string(i);
    return v;
}

namespace {
void monomial_rec(std::size_t nvars, long remaining, std::size_t pos, Exponents& cur,
                  std::vector<Exponents>& out)
{
    if (pos + 1 == nvars) {
        cur[pos] = static_cast<std::uint32_t>(remaining);
        out.push_back(cur);
        return;
    }
    for (long k = remaining; k >= 0; --k) {
        cur[pos] = static_cast<std::uint32_t>(k);
        monomial_rec(nvars, remaining - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}
} // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, long d)
{
    if (d < 0 || nvars == 0)
        return {};
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    monomial_rec(nvars, d, 0, cur, out);
    return out;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d)
{
    if (p.vars() != d.vars() || p.domain() != d.domain())
        throw DomainError("divide_exact operands incompatible");
    if (d.is_zero())
        throw DomainError("division by zero polynomial");
    MultiPoly q(p.vars(), p.domain());
    MultiPoly r = p;
    const auto& [lde, ldc] = d.leading_term();
    while (!r.is_zero()) {
        const auto& [lre, lrc] = r.leading_term();
        Exponents diff(lre.size());
        for (std::size_t i = 0; i < lre.size(); ++i) {
            if (lre[i] < lde[i])
                throw DomainError("divide_exact: not divisible");
            diff[i] = lre[i] - lde[i];
        }
        Scalar c = lrc / ldc;
        MultiPoly t = MultiPoly::monomial(p.vars(), diff, c);
        q += t;
        r -= t * d;
    }
    return q;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    if (k > n)
        return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace ebertini
