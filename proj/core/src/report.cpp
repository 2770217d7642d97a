#include "cala/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cala/catalog.hpp"
#include "cala/compat_search.hpp"
#include "cala/errors.hpp"

namespace cala {

using nlohmann::ordered_json;

namespace {

ordered_json space_json(const OperatorSpace& s) {
    ordered_json j;
    j["dim"] = s.dim;
    j["rank"] = s.rank;
    ordered_json ge = ordered_json::array();
    for (const auto& m : s.general_element) ge.push_back(m.str());
    j["general_element"] = ge;
    j["pattern"] = s.basis.empty() ? "[]" : zero_pattern(s, 0);
    j["parameters"] = s.parameter_names;
    if (s.kind == InvariantKind::quasi_derivation || s.kind == InvariantKind::generalized_derivation)
        j["d_projection_dim"] = s.d_projection_dim;
    if (!s.obstructions.empty()) {
        ordered_json obs = ordered_json::array();
        for (const auto& ob : s.obstructions) {
            ordered_json o;
            o["pivot"] = ob.pivot.str();
            ordered_json ex = ordered_json::array();
            for (const auto& r : ob.exceptional) ex.push_back(to_string(r));
            o["exceptional_values"] = ex;
            obs.push_back(o);
        }
        j["warning"] = "rank is generic in the parameter; exceptional values listed";
        j["obstructions"] = obs;
    }
    return j;
}

ordered_json defect_json(const DefectReport& d) {
    ordered_json j;
    j["kind"] = d.kind == DefectKind::associativity ? "associativity" : "compatibility";
    j["holds_identically"] = d.empty();
    ordered_json es = ordered_json::array();
    for (const auto& e : d.entries) {
        ordered_json v = ordered_json::array();
        for (const auto& c : e.defect) v.push_back(c.str());
        es.push_back({{"triple", {e.i, e.j, e.k}}, {"defect", v}});
    }
    j["entries"] = es;
    return j;
}

ordered_json verdict_json(const FamilyVerdict& v) {
    ordered_json j;
    j["verified"] = v.verified;
    ordered_json fails = ordered_json::array();
    for (const auto& r : v.failing_residuals)
        fails.push_back({{"product", r.product},
                         {"pair", {r.i, r.j}},
                         {"component", r.r},
                         {"value", r.value.str()}});
    j["failing_residuals"] = fails;
    ordered_json sc = ordered_json::array();
    for (const auto& c : v.side_conditions)
        sc.push_back({{"nonzero", c.condition.str()}, {"is_nonzero_polynomial", c.nonzero_polynomial}});
    j["side_conditions"] = sc;
    return j;
}

ordered_json cohomology_json(const CohomologyResult& r) {
    ordered_json j;
    j["mode"] = to_string(r.mode);
    j["dim_Z2"] = r.dim_Z2;
    j["dim_B2"] = r.dim_B2;
    j["dim_B2_in_Z2"] = r.dim_B2_in_Z2;
    j["dim_H2"] = r.dim_H2;
    j["permutation_check"] =
        (r.permuted_dim_Z2 == r.dim_Z2 && r.permuted_dim_B2 == r.dim_B2) ? "consistent" : "INCONSISTENT";
    return j;
}

}  // namespace

std::string run_report(const AlgebraPair& p, const ReportOptions& opts) {
    static const std::vector<std::string> all_kinds = {
        "defects",         "derivation",           "centroid",  "quasi-centroid",
        "quasi-derivation", "generalized-derivation", "cohomology", "families"};
    std::vector<std::string> kinds = opts.kinds.empty() ? all_kinds : opts.kinds;
    for (const auto& k : kinds)
        if (std::find(all_kinds.begin(), all_kinds.end(), k) == all_kinds.end())
            throw ParseError("unknown invariant kind '" + k + "'");

    ordered_json j;
    j["pair"] = {{"first", p.first.name}, {"second", p.second.name}, {"dim", p.dim()}};
    j["flags"] = {{"variant", opts.variant == IdentityVariant::paper ? "paper" : "standard"},
                  {"cohomology_mode", to_string(opts.cohomology_mode)}};

    auto wants = [&](const std::string& k) {
        return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    };

    if (wants("defects")) {
        ordered_json d;
        d["first_associativity"] = defect_json(check_associative(p.first));
        d["second_associativity"] = defect_json(check_associative(p.second));
        d["compatibility"] = defect_json(compatibility_defect(p.first.tensor, p.second.tensor));
        j["defects"] = d;
    }

    ordered_json inv;
    for (const auto& k :
         {"derivation", "centroid", "quasi-centroid", "quasi-derivation", "generalized-derivation"})
        if (wants(k)) inv[k] = space_json(invariant_space(p, invariant_kind_from_string(k)));
    if (!inv.empty()) j["invariants"] = inv;

    if (wants("cohomology")) {
        ordered_json c;
        c["mixed"] = cohomology_json(second_cohomology(p, CocycleMode::mixed));
        c["strict"] = cohomology_json(second_cohomology(p, CocycleMode::strict));
        c["selected_mode"] = to_string(opts.cohomology_mode);
        j["cohomology"] = c;
    }

    if (wants("families") && !opts.first_name.empty()) {
        ordered_json fams = ordered_json::array();
        for (const auto& row : expected_family_rows()) {
            if (row.pair_a != opts.first_name || row.pair_b != opts.second_name) continue;
            ordered_json f;
            f["source"] = row.source;
            f["identity"] = to_string(row.identity.tag);
            f["matrix"] = row.family.entries.str();
            f["verdict"] = verdict_json(verify_family(p, row.identity, row.family));
            if (row.identity.tag == OperatorTag::nijenhuis ||
                row.identity.tag == OperatorTag::reynolds) {
                OperatorIdentity other = row.identity;
                other.variant = row.identity.variant == IdentityVariant::paper
                                    ? IdentityVariant::standard
                                    : IdentityVariant::paper;
                f[other.variant == IdentityVariant::standard ? "verdict_standard_variant"
                                                             : "verdict_paper_variant"] =
                    verdict_json(verify_family(p, other, row.family));
            }
            fams.push_back(f);
        }
        j["families"] = fams;
    }
    return j.dump(2);
}

// ---- regression ----------------------------------------------------------

namespace {

struct Recorder {
    RegressionReport& rep;
    void add(std::string section, std::string subject, std::string status, std::string expected,
             std::string computed, std::string note = "") {
        if (status == "match") ++rep.matches;
        else if (status == "mismatch") ++rep.mismatches;
        else if (status == "garbled-in-paper") ++rep.garbled;
        else ++rep.unattributed;
        rep.records.push_back({std::move(section), std::move(subject), std::move(status),
                               std::move(expected), std::move(computed), std::move(note)});
    }
};

// family-membership predicates for the grid cross-checks, keyed by table row
bool member_diag1t(const Mat& m) {
    return m.at(0, 0) == Poly(1) && m.at(0, 1).is_zero() && m.at(1, 0).is_zero() &&
           !m.at(1, 1).is_zero();
}
bool member_lower_nilpotent(const Mat& m) {  // [[0,0],[z,0]]
    return m.at(0, 0).is_zero() && m.at(0, 1).is_zero() && m.at(1, 1).is_zero();
}
bool member_rb_23(const Mat& m) {
    // union of the corrected first family (trace 0, det 0, (1,2) != 0) and
    // the second family [[0,0],[z,0]]
    if (member_lower_nilpotent(m)) return true;
    Poly tr = m.at(0, 0) + m.at(1, 1);
    Poly det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    return tr.is_zero() && det.is_zero() && !m.at(0, 1).is_zero();
}

void grid_cross_check(Recorder& rec, const ExpectedFamilyRow& row) {
    int n = get_algebra(row.pair_a).algebra.dim();
    if (n > 3) return;
    int bound = n == 2 ? 2 : 1;
    AlgebraPair p = make_pair(row.pair_a, row.pair_b);
    auto sols = grid_solve(p, row.identity, bound);
    bool (*member)(const Mat&) = nullptr;
    if (row.identity.tag == OperatorTag::automorphism && row.source.rfind("table 3.1", 0) == 0)
        member = member_diag1t;
    else if (row.identity.tag == OperatorTag::automorphism && row.source == "table 3.3 row 6")
        member = [](const Mat& m) { return m == Mat::identity(3); };
    else if (row.source == "table 3.2 row 2" || row.source == "table 3.2 row 1 second family")
        member = row.pair_a == "A2_2" && row.pair_b == "A2_4" ? member_lower_nilpotent : member_rb_23;
    if (!member) return;
    if (row.pair_b == "A2_3" && row.identity.tag == OperatorTag::rota_baxter) member = member_rb_23;
    int extras = 0;
    for (const auto& m : sols)
        if (!member(m)) ++extras;
    std::ostringstream os;
    os << sols.size() << " grid solutions at bound " << bound << ", " << extras
       << " outside the printed family";
    rec.add("grid cross-check", row.pair_a + "," + row.pair_b + " " + to_string(row.identity.tag),
            extras == 0 ? "match" : "garbled-in-paper", "all grid solutions inside the family",
            os.str(),
            extras == 0 ? "" : "the printed family is sound but incomplete; extra solutions listed");
}

std::string dims_string(const OperatorSpace& s) {
    std::ostringstream os;
    os << "dim " << s.dim << " pattern " << (s.basis.empty() ? "[]" : zero_pattern(s, 0));
    return os.str();
}

}  // namespace

RegressionReport paper_regression() {
    RegressionReport rep;
    Recorder rec{rep};

    // 1. catalog soundness
    for (const auto& e : catalog_entries()) {
        DefectReport d = check_associative(e.algebra);
        rec.add("catalog", e.name, d.empty() ? "match" : "mismatch", "associative identically",
                d.empty() ? "associative" : "NOT associative");
    }

    // 2. pair lists: on-the-nose defects and witness search
    for (int dim : {2, 3}) {
        int bound = dim == 2 ? 2 : 1;
        for (const auto& rp : reference_pairs(dim)) {
            const Algebra& a = get_algebra(rp.first_name).algebra;
            const Algebra& b = get_algebra(rp.second_name).algebra;
            DefectReport onnose = compatibility_defect(a.tensor, b.tensor);
            std::ostringstream os;
            std::string status = "match";
            if (onnose.empty()) {
                os << "compatible on the nose";
            } else {
                os << onnose.entries.size() << " on-the-nose defect triples; ";
                SearchOutcome so = search_witness(a, b, bound);
                if (so.witness) {
                    bool ok = verify_witness(a, b, *so.witness);
                    os << "witness P = " << so.witness->p.str() << " at bound " << bound
                       << (ok ? " (re-verified)" : " (RE-VERIFICATION FAILED)");
                    if (!ok) status = "mismatch";
                } else {
                    os << "exhausted " << so.candidates_enumerated << " invertible candidates of "
                       << so.search_space << " at bound " << bound << "; no witness";
                }
            }
            rec.add("pair list " + std::string(dim == 2 ? "2.3" : "2.4"),
                    rp.first_name + "," + rp.second_name, status,
                    "listed as a compatible pair (" + rp.source + ")", os.str(),
                    "recorded, not asserted: the list is read up to isomorphism");
        }
    }

    // 3. linear invariant rows
    for (const auto& row : expected_linear_rows()) {
        AlgebraPair p = make_pair(row.pair_a, row.pair_b);
        OperatorSpace s = invariant_space(p, row.kind);
        std::string pat = s.basis.empty() ? row.frozen_pattern : zero_pattern(s, 0);
        bool internal_ok = (s.dim == row.frozen_dim) && (s.dim == 0 || pat == row.frozen_pattern);
        std::string status;
        if (!internal_ok)
            status = "mismatch";
        else
            status = row.status == ExpectedStatus::confirmed ? "match" : "garbled-in-paper";
        std::ostringstream exp;
        exp << "printed family with " << row.claimed_dim << " parameter(s)";
        rec.add(row.source, row.pair_a + "," + row.pair_b + " " + to_string(row.kind), status,
                exp.str(), dims_string(s), row.note);
    }

    // 4. nonlinear family rows + bounded completeness cross-checks
    for (const auto& row : expected_family_rows()) {
        AlgebraPair p = make_pair(row.pair_a, row.pair_b);
        FamilyVerdict v = verify_family(p, row.identity, row.family);
        bool internal_ok = v.verified == row.frozen_verified;
        std::string status = !internal_ok ? "mismatch"
                             : row.status == ExpectedStatus::confirmed ? "match"
                                                                       : "garbled-in-paper";
        std::ostringstream os;
        os << (v.verified ? "verified" : "not verified");
        if (!v.verified && !v.failing_residuals.empty())
            os << " (" << v.failing_residuals.size() << " nonzero residuals, first "
               << v.failing_residuals.front().value.str() << ")";
        for (const auto& sc : v.side_conditions) os << "; side condition " << sc.condition.str() << " != 0";
        rec.add(row.source, row.pair_a + "," + row.pair_b + " " + to_string(row.identity.tag),
                status, row.frozen_verified ? "family verifies identically" : "family as printed",
                os.str(), row.note);
        if (row.status == ExpectedStatus::confirmed && row.frozen_verified) grid_cross_check(rec, row);
    }

    // 5. unattributed operator lists swept over the 3-dimensional pairs
    for (const auto& row : unattributed_family_rows()) {
        for (int variant = 0; variant < (row.linear_kind ? 1 : 2); ++variant) {
            std::vector<std::string> hits;
            for (const auto& rp : reference_pairs(3)) {
                AlgebraPair p = make_pair(rp.first_name, rp.second_name);
                bool ok = false;
                if (row.linear_kind) {
                    auto res = linear_identity_residuals(p, *row.linear_kind, row.family_maps);
                    ok = std::all_of(res.begin(), res.end(), [](const Poly& q) { return q.is_zero(); });
                } else {
                    OperatorIdentity id = row.identity;
                    id.variant = variant == 0 ? IdentityVariant::paper : IdentityVariant::standard;
                    ok = residuals(p, id, row.family_maps[0]).all_zero();
                }
                if (ok) hits.push_back(rp.first_name + "," + rp.second_name);
            }
            const auto& frozen =
                variant == 0 ? row.frozen_paper_variant_hits : row.frozen_standard_variant_hits;
            bool internal_ok = hits == frozen;
            std::ostringstream os;
            os << hits.size() << " pair(s): ";
            for (size_t k = 0; k < hits.size(); ++k) os << (k ? "; " : "") << hits[k];
            rec.add(row.source,
                    std::string(variant == 0 ? "paper" : "standard") + " variant sweep",
                    internal_ok ? "unattributed-match" : "mismatch",
                    "satisfied by " + std::to_string(frozen.size()) + " pair(s)", os.str(), row.note);
        }
    }

    // 6. second cohomology rows, both modes
    for (const auto& row : expected_cohomology_rows()) {
        AlgebraPair p = make_pair(row.pair_a, row.pair_b);
        CohomologyResult mixed = second_cohomology(p, CocycleMode::mixed);
        CohomologyResult strict = second_cohomology(p, CocycleMode::strict);
        bool internal_ok = mixed.dim_H2 == row.frozen_mixed_h2 &&
                           strict.dim_H2 == row.frozen_strict_h2 &&
                           mixed.dim_H2 == mixed.dim_Z2 - mixed.dim_B2_in_Z2 &&
                           strict.dim_H2 == strict.dim_Z2 - strict.dim_B2_in_Z2 &&
                           mixed.permuted_dim_Z2 == mixed.dim_Z2 &&
                           strict.permuted_dim_Z2 == strict.dim_Z2;
        std::string mode_match = mixed.dim_H2 == row.claimed_generators ? "mixed"
                                 : strict.dim_H2 == row.claimed_generators ? "strict"
                                                                           : "neither";
        std::string status = !internal_ok ? "mismatch"
                             : mode_match != "neither" ? "match"
                                                       : "garbled-in-paper";
        std::ostringstream os;
        os << "H2 mixed " << mixed.dim_H2 << " (Z2 " << mixed.dim_Z2 << ", B2∩Z2 "
           << mixed.dim_B2_in_Z2 << "), strict " << strict.dim_H2 << " (Z2 " << strict.dim_Z2
           << ", B2∩Z2 " << strict.dim_B2_in_Z2 << "); matching mode: " << mode_match;
        rec.add(row.source, row.pair_a + "," + row.pair_b + " H2", status,
                std::to_string(row.claimed_generators) + " generators listed", os.str());
    }

    return rep;
}

std::string RegressionReport::to_json() const {
    ordered_json j;
    ordered_json rs = ordered_json::array();
    for (const auto& r : records)
        rs.push_back({{"section", r.section},
                      {"subject", r.subject},
                      {"status", r.status},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"note", r.note}});
    j["records"] = rs;
    j["summary"] = {{"match", matches},
                    {"mismatch", mismatches},
                    {"garbled-in-paper", garbled},
                    {"unattributed-match", unattributed},
                    {"exit_ok", ok()}};
    return j.dump(2);
}

std::string RegressionReport::summary_text() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << "[" << r.status << "] " << r.section << ": " << r.subject;
        if (!r.computed.empty()) os << " -- " << r.computed;
        if (!r.note.empty()) os << " (" << r.note << ")";
        os << "\n";
    }
    os << "summary: " << matches << " match, " << mismatches << " mismatch, " << garbled
       << " garbled-in-paper, " << unattributed << " unattributed-match\n";
    return os.str();
}

}  // namespace cala
