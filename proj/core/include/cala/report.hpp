#pragma once

#include <string>
#include <vector>

#include "cala/algebra.hpp"
#include "cala/cohomology.hpp"
#include "cala/invariants.hpp"
#include "cala/operators.hpp"

namespace cala {

struct ReportOptions {
    // any of: derivation, centroid, quasi-centroid, quasi-derivation,
    // generalized-derivation, cohomology, families, defects; empty = all
    std::vector<std::string> kinds;
    IdentityVariant variant = IdentityVariant::paper;
    CocycleMode cohomology_mode = CocycleMode::mixed;
    // names used when the pair is a catalog pair (enables the families section)
    std::string first_name, second_name;
};

// Single JSON object; byte-deterministic for fixed inputs and flags.
// Throws ParseError for unknown kind names.
std::string run_report(const AlgebraPair& p, const ReportOptions& opts);

struct RegressionRecord {
    std::string section;
    std::string subject;
    std::string status;  // match | mismatch | garbled-in-paper | unattributed-match
    std::string expected;
    std::string computed;
    std::string note;
};

struct RegressionReport {
    std::vector<RegressionRecord> records;
    int matches = 0;
    int mismatches = 0;
    int garbled = 0;
    int unattributed = 0;
    bool ok() const { return mismatches == 0; }
    std::string to_json() const;
    std::string summary_text() const;
};

// Recomputes every embedded expected result and compares. Exit-code policy:
// reference-table rows refuted by the exact recomputation are listed as
// garbled-in-paper (informational); status mismatch is reserved for internal
// inconsistencies (computed values deviating from the frozen recomputation,
// soundness re-check failures, witness verification failures).
RegressionReport paper_regression();

}  // namespace cala
