#pragma once

#include <string>
#include <vector>

#include "cala/algebra.hpp"
#include "cala/linsolve.hpp"

namespace cala {

enum class InvariantKind {
    derivation,
    centroid,
    quasi_centroid,
    quasi_derivation,
    generalized_derivation,
};

std::string to_string(InvariantKind k);
InvariantKind invariant_kind_from_string(const std::string& s);
// number of linear maps in one solution: 1, 2 (d, d') or 3 (d, d', d'')
int maps_per_solution(InvariantKind k);

struct LinearSystem {
    Mat matrix;
    std::vector<std::string> labels;  // column labels: d1_1, ..., dp1_1, ...
};

// One homogeneous row per (i, j, r, product, identity branch). The centroid
// contributes two branches per product, every other kind one.
LinearSystem assemble_system(const AlgebraPair& p, InvariantKind kind);

struct AlphaObstruction {
    Poly pivot;                        // nonconstant pivot polynomial
    std::vector<Rational> exceptional; // its rational roots, admissible values only
};

struct OperatorSpace {
    InvariantKind kind;
    int dim = 0;
    std::vector<std::vector<Mat>> basis;       // tuple of n x n matrices per member
    std::vector<std::string> parameter_names;  // free-column label per member
    std::vector<Mat> general_element;          // parametric tuple over fresh parameters
    std::vector<AlphaObstruction> obstructions;
    int rank = 0;
    int d_projection_dim = 0;  // span dimension of the first map alone
};

// Nullspace of the assembled system reshaped to matrices. Every basis member
// is re-checked against the defining identity before returning.
OperatorSpace invariant_space(const AlgebraPair& p, InvariantKind kind);

// Residuals (one Poly per (product, i, j, r)) of the defining identity for a
// concrete tuple of maps; all-zero means the tuple is a solution. This is the
// soundness oracle used by invariant_space and the tests, independent of the
// solver path.
std::vector<Poly> linear_identity_residuals(const AlgebraPair& p, InvariantKind kind,
                                            const std::vector<Mat>& maps);

// "*" where any basis member is nonzero, "." elsewhere; rows separated by
// ';', e.g. "[..;**]". Describes the zero pattern of map `which` across the
// whole space.
std::string zero_pattern(const OperatorSpace& s, int which = 0);

}  // namespace cala
