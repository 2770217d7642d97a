#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cala/algebra.hpp"
#include "cala/catalog.hpp"

namespace cala {

// UTF-8 JSON document; the only persistence surface.
//
//   {
//     "name": "A2_2",                      // optional
//     "dim": 2,
//     "basis": ["e1", "e2"],
//     "parameters": [{"name": "alpha", "excluded": ["1"]}],
//     "products": {
//       "star1": [["e1","e1","e1","1"], ["e1","e2","e2","1"]],
//       "star2": [...]                     // optional; present => pair
//     }
//   }
//
// Absent (i, j, k) entries are zero; coefficients use the scalar grammar.
struct AlgebraDocument {
    std::string name;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<ParameterSpec> parameters;
    // entries as (i, j, k, coefficient-text), 0-based indices after name resolution
    struct ProductEntry {
        int i, j, k;
        std::string coeff;
    };
    std::vector<ProductEntry> star1;
    std::optional<std::vector<ProductEntry>> star2;
};

struct LoadedDocument {
    AlgebraDocument doc;
    Algebra first;
    std::optional<Algebra> second;  // engaged when the document defines a pair
    bool is_pair() const { return second.has_value(); }
    AlgebraPair pair() const;  // throws MathError when not a pair
};

// Parses, resolves names, checks associativity of every product (failures
// are MathError carrying the first defect triple). ParseError carries a
// line/field location.
LoadedDocument load_document(const std::string& path);
LoadedDocument parse_document(const std::string& text, const std::string& origin = "<string>");

std::string document_to_json(const AlgebraDocument& doc);
AlgebraDocument document_of(const CatalogEntry& entry);
AlgebraDocument document_of_pair(const CatalogEntry& first, const CatalogEntry& second);

// Every catalog entry in document form, as one JSON array.
std::string catalog_dump();

}  // namespace cala
