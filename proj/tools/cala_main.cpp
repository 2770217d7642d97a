// cala: exact workbench for compatible associative algebras given by
// structure constants.
//
// Exit codes: 0 success, 1 usage/parse error, 2 mathematical precondition
// failure (non-associative input), 3 regression mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cala/catalog.hpp"
#include "cala/compat_search.hpp"
#include "cala/document.hpp"
#include "cala/errors.hpp"
#include "cala/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitRegression = 3;

// "A2_2,A2_3", "A2_2:A2_3", a single catalog name (diagonal pair), or a
// document path.
cala::AlgebraPair resolve_pair(const std::string& spec, std::string* first_name,
                               std::string* second_name) {
    auto sep = spec.find_first_of(",:");
    if (sep != std::string::npos) {
        std::string a = spec.substr(0, sep), b = spec.substr(sep + 1);
        *first_name = a;
        *second_name = b;
        return cala::make_pair(a, b);
    }
    if (cala::has_algebra(spec)) {
        *first_name = *second_name = spec;
        return cala::make_pair(spec, spec);
    }
    cala::LoadedDocument doc = cala::load_document(spec);
    if (doc.is_pair()) return doc.pair();
    return cala::AlgebraPair{doc.first, doc.first};
}

void print_defects(const cala::DefectReport& rep, const std::string& title) {
    std::cout << title << ": ";
    if (rep.empty()) {
        std::cout << "holds identically\n";
        return;
    }
    std::cout << rep.entries.size() << " nonzero defect(s)\n";
    for (const auto& e : rep.entries) {
        std::cout << "  (" << e.i << "," << e.j << "," << e.k << ") -> [";
        for (size_t k = 0; k < e.defect.size(); ++k)
            std::cout << (k ? ", " : "") << e.defect[k].str();
        std::cout << "]\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for compatible associative algebras"};
    app.require_subcommand(1);

    std::string check_path;
    auto* check = app.add_subcommand("check", "associativity/compatibility defects of a document");
    check->add_option("file", check_path, "algebra document (JSON)")->required();

    std::string inv_target;
    std::string inv_kinds;
    std::string inv_variant = "paper";
    std::string inv_cmode = "mixed";
    auto* inv = app.add_subcommand("invariants", "invariant spaces and family verdicts of a pair");
    inv->add_option("target", inv_target, "pair name (A2_2,A2_3), catalog name, or document path")
        ->required();
    inv->add_option("--kind", inv_kinds,
                    "comma-separated subset of derivation,centroid,quasi-centroid,"
                    "quasi-derivation,generalized-derivation,cohomology,families,defects");
    inv->add_option("--mode", inv_variant, "identity variant: paper|standard")
        ->check(CLI::IsMember({"paper", "standard"}));
    inv->add_option("--cohomology-mode", inv_cmode, "mixed|strict")
        ->check(CLI::IsMember({"mixed", "strict"}));

    std::string coh_target;
    auto* coh = app.add_subcommand("cohomology", "second cohomology of a pair, both modes");
    coh->add_option("target", coh_target, "pair name or document path")->required();

    auto* cat = app.add_subcommand("catalog", "embedded catalog");
    auto* dump = cat->add_subcommand("dump", "emit every catalog entry in document form");

    std::string reg_json_path;
    auto* reg = app.add_subcommand("paper-regression",
                                   "recompute every embedded reference-table row and compare");
    reg->add_option("--json", reg_json_path, "also write the full report as JSON");

    std::string sw_a, sw_b;
    int sw_bound = 1;
    auto* sw = app.add_subcommand("search-witness",
                                  "search for a basis change making a pair compatible on the nose");
    sw->add_option("A", sw_a, "first catalog algebra")->required();
    sw->add_option("B", sw_b, "second catalog algebra (transported side)")->required();
    sw->add_option("--bound", sw_bound, "entry bound (<=2 for dim 2, <=1 for dim 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            cala::LoadedDocument doc = cala::load_document(check_path);
            print_defects(cala::check_associative(doc.first), "star1 associativity");
            if (doc.is_pair()) {
                print_defects(cala::check_associative(*doc.second), "star2 associativity");
                print_defects(cala::check_compatible(doc.pair()), "compatibility axiom");
            }
            return kExitOk;
        }
        if (*inv) {
            std::string a, b;
            cala::AlgebraPair p = resolve_pair(inv_target, &a, &b);
            cala::ReportOptions opts;
            opts.first_name = a;
            opts.second_name = b;
            opts.variant = inv_variant == "paper" ? cala::IdentityVariant::paper
                                                  : cala::IdentityVariant::standard;
            opts.cohomology_mode =
                inv_cmode == "mixed" ? cala::CocycleMode::mixed : cala::CocycleMode::strict;
            if (!inv_kinds.empty()) {
                std::stringstream ss(inv_kinds);
                std::string item;
                while (std::getline(ss, item, ',')) opts.kinds.push_back(item);
            }
            std::cout << cala::run_report(p, opts) << "\n";
            return kExitOk;
        }
        if (*coh) {
            std::string a, b;
            cala::AlgebraPair p = resolve_pair(coh_target, &a, &b);
            cala::ReportOptions opts;
            opts.kinds = {"cohomology"};
            opts.first_name = a;
            opts.second_name = b;
            std::cout << cala::run_report(p, opts) << "\n";
            return kExitOk;
        }
        if (*cat) {
            if (*dump) {
                std::cout << cala::catalog_dump() << "\n";
                return kExitOk;
            }
            std::cerr << "catalog: expected a subcommand (dump)\n";
            return kExitUsage;
        }
        if (*reg) {
            cala::RegressionReport rep = cala::paper_regression();
            std::cout << rep.summary_text();
            if (!reg_json_path.empty()) {
                std::ofstream out(reg_json_path);
                out << rep.to_json() << "\n";
            }
            return rep.ok() ? kExitOk : kExitRegression;
        }
        if (*sw) {
            const cala::Algebra& a = cala::get_algebra(sw_a).algebra;
            const cala::Algebra& b = cala::get_algebra(sw_b).algebra;
            cala::SearchOutcome out = cala::search_witness(a, b, sw_bound);
            if (out.witness) {
                bool ok = cala::verify_witness(a, b, *out.witness);
                std::cout << "witness P = " << out.witness->p.str()
                          << (ok ? " (re-verified)" : " (RE-VERIFICATION FAILED)") << "\n";
                return ok ? kExitOk : kExitRegression;
            }
            std::cout << "exhausted " << out.candidates_enumerated
                      << " invertible candidates of " << out.search_space << "; no witness\n";
            return kExitOk;
        }
    } catch (const cala::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cala::LimitError& e) {
        std::cerr << "limit error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cala::MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
