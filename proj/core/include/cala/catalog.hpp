#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cala/algebra.hpp"
#include "cala/invariants.hpp"
#include "cala/operators.hpp"

namespace cala {

struct ParameterSpec {
    std::string name;
    std::vector<std::string> excluded;  // excluded values, as scalar text
};

struct CatalogEntry {
    std::string name;
    Algebra algebra;
    std::vector<ParameterSpec> parameters;
};

// All embedded algebras: A2_1..A2_4, A3_1..A3_12 (A3_2 symbolic in alpha),
// A4_1, A4_2 and Zero_1..Zero_4, in that order.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& get_algebra(const std::string& name);  // throws MathError on unknown name
bool has_algebra(const std::string& name);

struct ReferencePair {
    std::string first_name;
    std::string second_name;
    std::string source;  // citation tag within the reference tables
};

// The embedded pair lists: 2 pairs for dim 2, 30 for dim 3, in table order.
std::vector<ReferencePair> reference_pairs(int dim);

AlgebraPair make_pair(const std::string& first, const std::string& second);

// All unordered pairs (equal pairs included) of catalog algebras of the given
// dimension with their on-the-nose compatibility defect, in catalog order.
std::vector<std::pair<AlgebraPair, DefectReport>> enumerate_onnose_compatible(int dim);

// ---- embedded expected-result tables -------------------------------------

enum class ExpectedStatus { confirmed, garbled_in_paper, unattributed };
std::string to_string(ExpectedStatus s);

// A linear-invariant table row. `claimed_dim` counts distinct printed
// parameters; `frozen_dim`/`frozen_pattern` are the exact recomputation this
// build was frozen against (the regression re-derives them and must agree).
struct ExpectedLinearRow {
    std::string source;
    std::string pair_a, pair_b;
    InvariantKind kind;
    int claimed_dim;
    ExpectedStatus status;
    int frozen_dim;
    std::string frozen_pattern;
    std::string note;
};
const std::vector<ExpectedLinearRow>& expected_linear_rows();

// A nonlinear family row (automorphism columns of the linear tables, the
// Rota-Baxter table, the 4-dimensional example's operator families).
struct ExpectedFamilyRow {
    std::string source;
    std::string pair_a, pair_b;
    OperatorIdentity identity;
    ParametricMatrix family;
    ExpectedStatus status;
    bool frozen_verified;  // family residuals vanish identically
    std::string note;
};
const std::vector<ExpectedFamilyRow>& expected_family_rows();

// Operator families printed without a pair attribution; swept against every
// 3-dimensional reference pair.
struct UnattributedFamilyRow {
    std::string source;
    OperatorIdentity identity;
    // families of tuples for the quasi-/generalized-derivation lists
    std::vector<Mat> family_maps;
    std::vector<std::string> frozen_paper_variant_hits;     // "A3_1,A3_3" style
    std::vector<std::string> frozen_standard_variant_hits;  // empty for linear kinds
    std::optional<InvariantKind> linear_kind;               // set for lists (5)/(6)
    std::string note;
};
const std::vector<UnattributedFamilyRow>& unattributed_family_rows();

// Second-cohomology rows: generator counts against computed dimensions in
// both modes.
struct ExpectedCohomologyRow {
    std::string source;
    std::string pair_a, pair_b;
    int claimed_generators;
    ExpectedStatus status;
    int frozen_mixed_h2;
    int frozen_strict_h2;
};
const std::vector<ExpectedCohomologyRow>& expected_cohomology_rows();

}  // namespace cala
