#include "cala/document.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cala/errors.hpp"

namespace cala {

using nlohmann::ordered_json;

AlgebraPair LoadedDocument::pair() const {
    if (!second) throw MathError("document does not define a pair (no star2)");
    return {first, *second};
}

namespace {

std::vector<AlgebraDocument::ProductEntry> read_product(const ordered_json& arr,
                                                        const std::map<std::string, int>& basis_index,
                                                        const std::string& where) {
    if (!arr.is_array()) throw ParseError("products entry must be an array", where);
    std::vector<AlgebraDocument::ProductEntry> out;
    std::map<std::tuple<int, int, int>, bool> seen;
    int idx = 0;
    for (const auto& e : arr) {
        std::string loc = where + "[" + std::to_string(idx++) + "]";
        if (!e.is_array() || e.size() != 4)
            throw ParseError("product entry must be [i-name, j-name, k-name, coefficient]", loc);
        int ids[3];
        for (int k = 0; k < 3; ++k) {
            if (!e[k].is_string()) throw ParseError("basis name must be a string", loc);
            auto it = basis_index.find(e[k].get<std::string>());
            if (it == basis_index.end())
                throw ParseError("unknown basis name '" + e[k].get<std::string>() + "'", loc);
            ids[k] = it->second;
        }
        if (!e[3].is_string()) throw ParseError("coefficient must be scalar text", loc);
        auto key = std::make_tuple(ids[0], ids[1], ids[2]);
        if (seen.count(key)) throw ParseError("duplicate (i,j,k) product entry", loc);
        seen[key] = true;
        Poly::parse(e[3].get<std::string>());  // surface coefficient syntax errors here
        out.push_back({ids[0], ids[1], ids[2], e[3].get<std::string>()});
    }
    return out;
}

StructureTensor tensor_of(int dim, const std::vector<AlgebraDocument::ProductEntry>& entries) {
    StructureTensor t(dim);
    for (const auto& e : entries) t.at(e.i, e.j, e.k) = Poly::parse(e.coeff);
    return t;
}

void require_associative(const Algebra& a, const std::string& which) {
    DefectReport rep = check_associative(a);
    if (rep.empty()) return;
    const auto& d = rep.entries.front();
    std::ostringstream os;
    os << which << " product is not associative: first defect at basis triple (" << d.i << ","
       << d.j << "," << d.k << ") = [";
    for (size_t k = 0; k < d.defect.size(); ++k) {
        if (k) os << ", ";
        os << d.defect[k].str();
    }
    os << "]";
    throw MathError(os.str());
}

}  // namespace

LoadedDocument parse_document(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), origin);
    }
    if (!j.is_object()) throw ParseError("document root must be an object", origin);

    AlgebraDocument doc;
    doc.name = j.value("name", std::string());
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'", origin + "/dim");
    doc.dim = j["dim"].get<int>();
    if (doc.dim < 1 || doc.dim > 8) throw ParseError("dim out of range", origin + "/dim");

    if (!j.contains("basis") || !j["basis"].is_array())
        throw ParseError("missing array field 'basis'", origin + "/basis");
    std::map<std::string, int> basis_index;
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) throw ParseError("basis entries must be strings", origin + "/basis");
        std::string nm = b.get<std::string>();
        if (basis_index.count(nm)) throw ParseError("duplicate basis name '" + nm + "'", origin + "/basis");
        basis_index[nm] = static_cast<int>(doc.basis.size());
        doc.basis.push_back(nm);
    }
    if (static_cast<int>(doc.basis.size()) != doc.dim)
        throw ParseError("basis length does not match dim", origin + "/basis");

    if (j.contains("parameters")) {
        if (!j["parameters"].is_array()) throw ParseError("'parameters' must be an array", origin + "/parameters");
        for (const auto& p : j["parameters"]) {
            ParameterSpec spec;
            if (!p.is_object() || !p.contains("name") || !p["name"].is_string())
                throw ParseError("parameter entries need a string 'name'", origin + "/parameters");
            spec.name = p["name"].get<std::string>();
            if (p.contains("excluded"))
                for (const auto& x : p["excluded"]) spec.excluded.push_back(x.get<std::string>());
            doc.parameters.push_back(std::move(spec));
        }
    }

    if (!j.contains("products") || !j["products"].is_object())
        throw ParseError("missing object field 'products'", origin + "/products");
    const auto& prods = j["products"];
    if (!prods.contains("star1")) throw ParseError("products must contain 'star1'", origin + "/products/star1");
    doc.star1 = read_product(prods["star1"], basis_index, origin + "/products/star1");
    if (prods.contains("star2"))
        doc.star2 = read_product(prods["star2"], basis_index, origin + "/products/star2");

    LoadedDocument out;
    std::string nm = doc.name.empty() ? origin : doc.name;
    out.first = Algebra{doc.star2 ? nm + "#1" : nm, tensor_of(doc.dim, doc.star1)};
    require_associative(out.first, "star1");
    if (doc.star2) {
        out.second = Algebra{nm + "#2", tensor_of(doc.dim, *doc.star2)};
        require_associative(*out.second, "star2");
    }
    out.doc = std::move(doc);
    return out;
}

LoadedDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

namespace {

ordered_json product_json(const StructureTensor& t, const std::vector<std::string>& basis) {
    ordered_json arr = ordered_json::array();
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!t.at(i, j, k).is_zero())
                    arr.push_back({basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)],
                                   basis[static_cast<size_t>(k)], t.at(i, j, k).str()});
    return arr;
}

ordered_json doc_json(const AlgebraDocument& doc) {
    ordered_json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["dim"] = doc.dim;
    j["basis"] = doc.basis;
    if (!doc.parameters.empty()) {
        ordered_json ps = ordered_json::array();
        for (const auto& p : doc.parameters) ps.push_back({{"name", p.name}, {"excluded", p.excluded}});
        j["parameters"] = ps;
    }
    ordered_json prods;
    auto entries_json = [](const std::vector<AlgebraDocument::ProductEntry>& es,
                           const std::vector<std::string>& basis) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : es)
            arr.push_back({basis[static_cast<size_t>(e.i)], basis[static_cast<size_t>(e.j)],
                           basis[static_cast<size_t>(e.k)], e.coeff});
        return arr;
    };
    prods["star1"] = entries_json(doc.star1, doc.basis);
    if (doc.star2) prods["star2"] = entries_json(*doc.star2, doc.basis);
    j["products"] = prods;
    return j;
}

std::vector<AlgebraDocument::ProductEntry> tensor_entries(const StructureTensor& t) {
    std::vector<AlgebraDocument::ProductEntry> out;
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!t.at(i, j, k).is_zero()) out.push_back({i, j, k, t.at(i, j, k).str()});
    return out;
}

std::vector<std::string> default_basis(int n) {
    std::vector<std::string> basis;
    for (int i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
    return basis;
}

}  // namespace

std::string document_to_json(const AlgebraDocument& doc) { return doc_json(doc).dump(2); }

AlgebraDocument document_of(const CatalogEntry& entry) {
    AlgebraDocument doc;
    doc.name = entry.name;
    doc.dim = entry.algebra.dim();
    doc.basis = default_basis(doc.dim);
    doc.parameters = entry.parameters;
    doc.star1 = tensor_entries(entry.algebra.tensor);
    return doc;
}

AlgebraDocument document_of_pair(const CatalogEntry& first, const CatalogEntry& second) {
    AlgebraDocument doc = document_of(first);
    doc.name = first.name + "," + second.name;
    for (const auto& p : second.parameters) doc.parameters.push_back(p);
    doc.star2 = tensor_entries(second.algebra.tensor);
    return doc;
}

std::string catalog_dump() {
    ordered_json arr = ordered_json::array();
    for (const auto& e : catalog_entries()) arr.push_back(doc_json(document_of(e)));
    return arr.dump(2);
}

}  // namespace cala
