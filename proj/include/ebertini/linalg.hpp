#ifndef EBERTINI_LINALG_HPP
#define EBERTINI_LINALG_HPP

#include <cstdint>
#include <vector>

#include "ebertini/multipoly.hpp"
#include "ebertini/scalar.hpp"

namespace ebertini {

// Reduced row echelon form with pivot bookkeeping, over an exact field.
struct Echelon {
    std::vector<std::vector<Scalar>> rows; // nonzero rows only, RREF
    std::vector<std::size_t> pivot_cols;   // ascending, one per row
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }

    // Subtracts the row space from v in place; the result has zeros at all
    // pivot columns.
    void reduce_vector(std::vector<Scalar>& v) const;

    // Attempts to add one more row to the span; returns true when the rank
    // grew (v was independent).
    bool absorb(std::vector<Scalar> v);
};

Echelon row_reduce(std::vector<std::vector<Scalar>> m, std::size_t cols);

std::size_t rank_of(const std::vector<std::vector<Scalar>>& m, std::size_t cols);

// Solve A^T c = v, i.e. write v as a combination of the given basis rows.
// Returns empty when v is outside the span.
std::vector<Scalar> solve_in_span(const std::vector<std::vector<Scalar>>& basis_rows,
                                  const std::vector<Scalar>& v);

// Exact determinant of a square polynomial matrix by fraction-free (Bareiss)
// elimination; entries share one variable list and domain.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

// Cofactor expansion, retained as a cross-check oracle for small sizes.
MultiPoly cofactor_determinant(const std::vector<std::vector<MultiPoly>>& m);

// Row/column sets of a maximal independent submatrix found by Gaussian
// elimination over F_p (machine word arithmetic).
struct RankProfile {
    std::size_t rank = 0;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

RankProfile rank_profile_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

} // namespace ebertini

#endif
