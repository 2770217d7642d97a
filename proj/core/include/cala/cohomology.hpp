#pragma once

#include <string>
#include <vector>

#include "cala/algebra.hpp"
#include "cala/linsolve.hpp"

namespace cala {

// The mixed 2-cocycle condition as displayed:
//   phi2(u*1 v, w) + phi1(u*2 v, w) = phi1(u, v*2 w) + phi2(u, v*1 w).
// Strict mode adds the per-product trivial-action conditions
//   phi_i(u*_i v, w) = phi_i(u, v*_i w).
enum class CocycleMode { mixed, strict };
std::string to_string(CocycleMode m);

// A pair (phi1, phi2) of bilinear maps in flat coordinates:
// g[((i*n)+j)*n+r] = e_r coefficient of phi1(e_i, e_j), then the h block for
// phi2. Label convention g{r}_{i}{j}.
struct CocyclePair {
    int dim = 0;
    std::vector<Poly> coords;  // length 2*n^3
    Poly g(int i, int j, int r) const;
    Poly h(int i, int j, int r) const;
};

struct CocycleSpace {
    CocycleMode mode;
    int dim = 0;
    std::vector<CocyclePair> basis;
    std::vector<std::string> labels;  // coordinate labels (g1_11, ..., h..)
    std::vector<int> pivot_columns;
};

CocycleSpace cocycle_space(const AlgebraPair& p, CocycleMode mode);

// Image of T -> (-T o *1, -T o *2); basis = reduced images of E_{r,i}.
CocycleSpace coboundary_space(const AlgebraPair& p);

struct CohomologyResult {
    CocycleMode mode;
    int dim_Z2 = 0;
    int dim_B2 = 0;
    int dim_B2_in_Z2 = 0;
    int dim_H2 = 0;  // = dim_Z2 - dim_B2_in_Z2
    std::vector<CocyclePair> z2_basis;
    std::vector<CocyclePair> representatives;  // H^2 coset representatives
    // dimensions of a column-permuted recomputation (must agree)
    int permuted_dim_Z2 = 0;
    int permuted_dim_B2 = 0;
};

CohomologyResult second_cohomology(const AlgebraPair& p, CocycleMode mode);

std::vector<std::string> cocycle_labels(int n);

}  // namespace cala
