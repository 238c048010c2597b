#include "ebertini/linalg.hpp"

#include <algorithm>

namespace ebertini {

void Echelon::reduce_vector(std::vector<Scalar>& v) const
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = v[pivot_cols[r]];
        if (c.is_zero())
            continue;
        Scalar f = c; // pivot entries are 1
        for (std::size_t j = 0; j < cols; ++j)
            if (!rows[r][j].is_zero())
                v[j] -= f * rows[r][j];
    }
}

bool Echelon::absorb(std::vector<Scalar> v)
{
    reduce_vector(v);
    std::size_t lead = cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!v[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == cols)
        return false;
    Scalar inv = Scalar::one(v[lead].domain()) / v[lead];
    for (auto& x : v)
        x *= inv;
    // back-substitute into existing rows to keep the form reduced
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Scalar f = rows[r][lead];
        if (f.is_zero())
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            if (!v[j].is_zero())
                rows[r][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivot_cols.begin(), pivot_cols.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivot_cols.begin());
    pivot_cols.insert(pos, lead);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

Echelon row_reduce(std::vector<std::vector<Scalar>> m, std::size_t cols)
{
    Echelon e;
    e.cols = cols;
    for (auto& row : m) {
        if (row.size() != cols)
            throw DomainError("ragged matrix");
        e.absorb(std::move(row));
    }
    return e;
}

std::size_t rank_of(const std::vector<std::vector<Scalar>>& m, std::size_t cols)
{
    return row_reduce(m, cols).rank();
}

std::vector<Scalar> solve_in_span(const std::vector<std::vector<Scalar>>& basis_rows,
                                  const std::vector<Scalar>& v)
{
    if (basis_rows.empty())
        return {};
    std::size_t cols = basis_rows.front().size();
    // Augment each basis row with an indicator column and reduce; the
    // indicator part of the reduced v carries the coefficients.
    std::size_t k = basis_rows.size();
    Echelon e;
    e.cols = cols + k;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Scalar> row = basis_rows[i];
        row.resize(cols + k, Scalar::zero(v.front().domain()));
        row[cols + i] = Scalar::one(v.front().domain());
        e.absorb(std::move(row));
    }
    std::vector<Scalar> w = v;
    w.resize(cols + k, Scalar::zero(v.front().domain()));
    e.reduce_vector(w);
    for (std::size_t j = 0; j < cols; ++j)
        if (!w[j].is_zero())
            return {}; // not in the span
    std::vector<Scalar> coeffs(k, Scalar::zero(v.front().domain()));
    for (std::size_t i = 0; i < k; ++i)
        coeffs[i] = -w[cols + i];
    return coeffs;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m)
{
    std::size_t n = m.size();
    if (n == 0)
        throw DomainError("empty matrix has no determinant");
    for (const auto& row : m)
        if (row.size() != n)
            throw DomainError("determinant requires a square matrix");
    const auto vars = m[0][0].vars();
    const auto dom = m[0][0].domain();
    MultiPoly one = MultiPoly::constant(vars, Scalar::one(dom));
    MultiPoly prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) {
                return MultiPoly::zero(vars, dom); // whole column zero
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
            m[i][k] = MultiPoly::zero(vars, dom);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return det;
}

MultiPoly cofactor_determinant(const std::vector<std::vector<MultiPoly>>& m)
{
    std::size_t n = m.size();
    const auto vars = m[0][0].vars();
    const auto dom = m[0][0].domain();
    if (n == 1)
        return m[0][0];
    MultiPoly det = MultiPoly::zero(vars, dom);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<MultiPoly>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j)
                    row.push_back(m[i][jj]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * cofactor_determinant(sub);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

RankProfile rank_profile_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p)
{
    RankProfile out;
    if (m.empty())
        return out;
    std::size_t nrows = m.size(), ncols = m.front().size();
    std::vector<bool> row_used(nrows, false);
    for (std::size_t col = 0; col < ncols && out.rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t i = 0; i < nrows; ++i)
            if (!row_used[i] && m[i][col] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot == nrows)
            continue;
        row_used[pivot] = true;
        out.rows.push_back(pivot);
        out.cols.push_back(col);
        ++out.rank;
        std::uint64_t inv = invmod(m[pivot][col] % p, p);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (row_used[i] || m[i][col] % p == 0)
                continue;
            std::uint64_t f = mulmod(m[i][col] % p, inv, p);
            for (std::size_t j = col; j < ncols; ++j) {
                std::uint64_t sub = mulmod(f, m[pivot][j] % p, p);
                m[i][j] = (m[i][j] % p + p - sub) % p;
            }
        }
    }
    return out;
}

} // namespace ebertini
