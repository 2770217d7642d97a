#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cala/algebra.hpp"

namespace cala {

enum class OperatorTag { automorphism, rota_baxter, nijenhuis, averaging, reynolds };

// nijenhuis and reynolds come in two shapes: the identity exactly as the
// source table displays it (paper) and the textbook form (standard). The
// paper shape is the default everywhere.
enum class IdentityVariant { paper, standard };

struct OperatorIdentity {
    OperatorTag tag;
    IdentityVariant variant = IdentityVariant::paper;
};

std::string to_string(OperatorTag t);
OperatorTag operator_tag_from_string(const std::string& s);

// Matrix with symbolic entries plus the side conditions (nonzero scalars)
// under which the family is claimed, e.g. a determinant or a cleared
// denominator.
struct ParametricMatrix {
    Mat entries;
    std::vector<Poly> side_conditions;
    std::vector<std::string> parameters() const;  // indeterminates appearing in entries
};

struct Residual {
    int product;     // 1 or 2
    int i, j;        // 1-based basis pair
    int r;           // 1-based component
    Poly value;      // LHS - RHS coefficient of e_r
};

struct ResidualSet {
    std::vector<Residual> residuals;
    bool all_zero() const;
    std::vector<Residual> failing() const;
};

ResidualSet residuals(const AlgebraPair& p, OperatorIdentity id, const Mat& m);

struct SideConditionReport {
    Poly condition;
    bool nonzero_polynomial;  // condition is not the zero polynomial
};

struct FamilyVerdict {
    bool verified = false;
    std::vector<Residual> failing_residuals;
    std::vector<SideConditionReport> side_conditions;
};

// Verified iff every residual of the family is identically zero; for
// automorphisms det(M) != 0 is additionally required as a polynomial and
// recorded as a side condition.
FamilyVerdict verify_family(const AlgebraPair& p, OperatorIdentity id, const ParametricMatrix& m);

struct RefutationReport {
    int trials = 0;
    int failing = 0;
    // sampled matrices that unexpectedly satisfied the identity outside the
    // family's zero pattern
    std::vector<Mat> unexpected_solutions;
};

// Samples rational matrices with entries in {-2..2} that violate at least one
// forced-zero position of the family; deterministic for a fixed seed.
RefutationReport refute_sample(const AlgebraPair& p, OperatorIdentity id,
                               const ParametricMatrix& family, int trials, uint64_t seed);

// Exhaustive integer matrix enumeration with entries in [-bound, bound], in
// lexicographic order over the flattened entries. Automorphism search
// additionally requires det != 0. Documented limits: bound <= 2 for n = 2,
// bound <= 1 for n = 3.
std::vector<Mat> grid_solve(const AlgebraPair& p, OperatorIdentity id, int bound);

}  // namespace cala
