#pragma once

#include <vector>

#include "cala/matrix.hpp"

namespace cala {

// Exact nullspace of a homogeneous system. Entries must be rational or
// polynomial in a single indeterminate (alpha); multivariate entries are a
// MathError. Basis vectors are canonical: free coordinates in ascending
// column order, content-free, first nonzero coordinate positive (its leading
// coefficient, for symbolic entries).
struct NullspaceResult {
    int rank = 0;
    std::vector<int> pivot_columns;
    std::vector<std::vector<Poly>> basis;
    // Nonconstant pivots the elimination divided by. Specializing the
    // indeterminate at a root of one of these may change the rank; the
    // generic-rank answer is valid away from them.
    std::vector<Poly> pivot_polys;
};

NullspaceResult nullspace(const Mat& m);
// Same system with columns permuted (col_perm[k] = original column of new
// column k); used to cross-check that dimensions do not depend on the
// elimination order.
NullspaceResult nullspace_permuted(const Mat& m, const std::vector<int>& col_perm);

int rank_of(const Mat& m);

// Canonical basis of the row space of `vectors`, with pivot columns.
struct RowSpace {
    std::vector<std::vector<Poly>> rows;
    std::vector<int> pivots;
    int dim() const { return static_cast<int>(rows.size()); }
};
RowSpace row_space(const std::vector<std::vector<Poly>>& vectors);

bool in_span(const RowSpace& space, const std::vector<Poly>& v);

// Canonical basis of span(a) ∩ span(b).
std::vector<std::vector<Poly>> intersect_spans(const std::vector<std::vector<Poly>>& a,
                                               const std::vector<std::vector<Poly>>& b);

}  // namespace cala
