#pragma once

#include <optional>

#include "cala/algebra.hpp"

namespace cala {

// Basis-change witness: (first, transport(second, P)) is compatible on the
// nose. Only the second component is transported; applying the same change to
// both components preserves the defect, so one-sided transport loses nothing
// within the enumerated box.
struct Witness {
    Mat p;
    AlgebraPair transformed;
    DefectReport defect;  // empty by construction
};

struct SearchOutcome {
    std::optional<Witness> witness;
    uint64_t candidates_enumerated = 0;  // invertible matrices tried
    uint64_t search_space = 0;           // all integer matrices in the box
};

// Enumerates integer matrices with entries in [-bound, bound] and nonzero
// determinant: identity first, then permutation matrices, then the remaining
// matrices in lexicographic order over flattened entries. Returns the first
// witness in that order, or an exhaustion report. Documented limits:
// bound <= 2 for dimension 2, bound <= 1 for dimension 3.
SearchOutcome search_witness(const Algebra& a, const Algebra& b, int bound);

// Recomputes the transport and the full defect from scratch, independent of
// the search internals.
bool verify_witness(const Algebra& a, const Algebra& b, const Witness& w);

}  // namespace cala
