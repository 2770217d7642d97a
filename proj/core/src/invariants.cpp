#include "cala/invariants.hpp"

#include <algorithm>

#include "cala/errors.hpp"

namespace cala {

std::string to_string(InvariantKind k) {
    switch (k) {
        case InvariantKind::derivation: return "derivation";
        case InvariantKind::centroid: return "centroid";
        case InvariantKind::quasi_centroid: return "quasi-centroid";
        case InvariantKind::quasi_derivation: return "quasi-derivation";
        case InvariantKind::generalized_derivation: return "generalized-derivation";
    }
    return "?";
}

InvariantKind invariant_kind_from_string(const std::string& s) {
    if (s == "derivation") return InvariantKind::derivation;
    if (s == "centroid") return InvariantKind::centroid;
    if (s == "quasi-centroid") return InvariantKind::quasi_centroid;
    if (s == "quasi-derivation") return InvariantKind::quasi_derivation;
    if (s == "generalized-derivation") return InvariantKind::generalized_derivation;
    throw ParseError("unknown invariant kind '" + s + "'");
}

int maps_per_solution(InvariantKind k) {
    switch (k) {
        case InvariantKind::quasi_derivation: return 2;
        case InvariantKind::generalized_derivation: return 3;
        default: return 1;
    }
}

namespace {

// unknown layout: block m (map index), row-major (r, i); label prefix per map
int uidx(int n, int block, int r, int i) { return block * n * n + r * n + i; }

std::vector<std::string> block_prefixes(InvariantKind k) {
    switch (k) {
        case InvariantKind::derivation: return {"d"};
        case InvariantKind::centroid: return {"beta"};
        case InvariantKind::quasi_centroid: return {"delta"};
        case InvariantKind::quasi_derivation: return {"d", "dp"};
        case InvariantKind::generalized_derivation: return {"d", "dp", "dpp"};
    }
    return {};
}

struct RowBuilder {
    int n;
    int blocks;
    std::vector<std::vector<Poly>> rows;

    std::vector<Poly>& fresh() {
        rows.emplace_back(static_cast<size_t>(blocks) * n * n);
        return rows.back();
    }
};

// identity branches, with X/Y/Z the (up to three) unknown maps:
//   derivation:   X(u*v) - X(u)*v - u*X(v) = 0           (X=Y=Z=map 0)
//   quasi:        Y(u*v) - X(u)*v - u*X(v) = 0
//   generalized:  Z(u*v) - X(u)*v - u*Y(v) = 0
//   centroid A:   X(u*v) - X(u)*v = 0
//   centroid B:   X(u*v) - u*X(v) = 0
//   quasi-cent:   X(u)*v - u*X(v) = 0
enum class Branch { leibniz, centroid_left, centroid_right, qcent };

void add_rows(RowBuilder& rb, const StructureTensor& t, Branch br, int lhs_block, int arg1_block,
              int arg2_block) {
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r) {
                auto& row = rb.fresh();
                switch (br) {
                    case Branch::leibniz:
                        for (int k = 0; k < n; ++k) {
                            row[uidx(n, lhs_block, r, k)] += t.at(i, j, k);
                            row[uidx(n, arg1_block, k, i)] -= t.at(k, j, r);
                            row[uidx(n, arg2_block, k, j)] -= t.at(i, k, r);
                        }
                        break;
                    case Branch::centroid_left:
                        for (int k = 0; k < n; ++k) {
                            row[uidx(n, lhs_block, r, k)] += t.at(i, j, k);
                            row[uidx(n, lhs_block, k, i)] -= t.at(k, j, r);
                        }
                        break;
                    case Branch::centroid_right:
                        for (int k = 0; k < n; ++k) {
                            row[uidx(n, lhs_block, r, k)] += t.at(i, j, k);
                            row[uidx(n, lhs_block, k, j)] -= t.at(i, k, r);
                        }
                        break;
                    case Branch::qcent:
                        for (int k = 0; k < n; ++k) {
                            row[uidx(n, lhs_block, k, i)] += t.at(k, j, r);
                            row[uidx(n, lhs_block, k, j)] -= t.at(i, k, r);
                        }
                        break;
                }
            }
}

}  // namespace

LinearSystem assemble_system(const AlgebraPair& p, InvariantKind kind) {
    if (p.first.dim() != p.second.dim())
        throw MathError("assemble_system: pair dimensions differ");
    int n = p.dim();
    int blocks = maps_per_solution(kind);
    RowBuilder rb{n, blocks, {}};
    for (const StructureTensor* t : {&p.first.tensor, &p.second.tensor}) {
        switch (kind) {
            case InvariantKind::derivation:
                add_rows(rb, *t, Branch::leibniz, 0, 0, 0);
                break;
            case InvariantKind::quasi_derivation:
                add_rows(rb, *t, Branch::leibniz, 1, 0, 0);
                break;
            case InvariantKind::generalized_derivation:
                add_rows(rb, *t, Branch::leibniz, 2, 0, 1);
                break;
            case InvariantKind::centroid:
                add_rows(rb, *t, Branch::centroid_left, 0, 0, 0);
                add_rows(rb, *t, Branch::centroid_right, 0, 0, 0);
                break;
            case InvariantKind::quasi_centroid:
                add_rows(rb, *t, Branch::qcent, 0, 0, 0);
                break;
        }
    }
    LinearSystem sys;
    sys.matrix = Mat(static_cast<int>(rb.rows.size()), blocks * n * n);
    for (int r = 0; r < sys.matrix.rows(); ++r)
        for (int c = 0; c < sys.matrix.cols(); ++c)
            sys.matrix.at(r, c) = std::move(rb.rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    auto prefixes = block_prefixes(kind);
    for (int b = 0; b < blocks; ++b)
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < n; ++i)
                sys.labels.push_back(prefixes[static_cast<size_t>(b)] + std::to_string(r + 1) + "_" +
                                     std::to_string(i + 1));
    return sys;
}

std::vector<Poly> linear_identity_residuals(const AlgebraPair& p, InvariantKind kind,
                                            const std::vector<Mat>& maps) {
    if (static_cast<int>(maps.size()) != maps_per_solution(kind))
        throw MathError("linear_identity_residuals: wrong tuple size");
    int n = p.dim();
    std::vector<Poly> out;
    auto push = [&](Element v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    for (const StructureTensor* tp : {&p.first.tensor, &p.second.tensor}) {
        const StructureTensor& t = *tp;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Element ei = basis_element(n, i), ej = basis_element(n, j);
                Element eij = multiply(t, ei, ej);
                switch (kind) {
                    case InvariantKind::derivation:
                    case InvariantKind::quasi_derivation:
                    case InvariantKind::generalized_derivation: {
                        const Mat& X = maps[0];
                        const Mat& Y = maps.size() > 2 ? maps[1] : maps[0];
                        const Mat& Z = maps.back();
                        Element lhs = Z.apply(eij);
                        Element r1 = multiply(t, X.apply(ei), ej);
                        Element r2 = multiply(t, ei, Y.apply(ej));
                        for (int k = 0; k < n; ++k) lhs[k] -= r1[k] + r2[k];
                        push(std::move(lhs));
                        break;
                    }
                    case InvariantKind::centroid: {
                        Element b = maps[0].apply(eij);
                        Element l = multiply(t, maps[0].apply(ei), ej);
                        Element r = multiply(t, ei, maps[0].apply(ej));
                        Element d1 = b, d2 = b;
                        for (int k = 0; k < n; ++k) {
                            d1[k] -= l[k];
                            d2[k] -= r[k];
                        }
                        push(std::move(d1));
                        push(std::move(d2));
                        break;
                    }
                    case InvariantKind::quasi_centroid: {
                        Element l = multiply(t, maps[0].apply(ei), ej);
                        Element r = multiply(t, ei, maps[0].apply(ej));
                        for (int k = 0; k < n; ++k) l[k] -= r[k];
                        push(std::move(l));
                        break;
                    }
                }
            }
    }
    return out;
}

OperatorSpace invariant_space(const AlgebraPair& p, InvariantKind kind) {
    LinearSystem sys = assemble_system(p, kind);
    NullspaceResult ns = nullspace(sys.matrix);
    int n = p.dim();
    int blocks = maps_per_solution(kind);

    OperatorSpace out;
    out.kind = kind;
    out.dim = static_cast<int>(ns.basis.size());
    out.rank = ns.rank;
    for (const Poly& piv : ns.pivot_polys) {
        AlphaObstruction ob{piv, {}};
        for (const Rational& root : piv.rational_roots())
            if (root != 1) ob.exceptional.push_back(root);  // alpha = 1 is inadmissible anyway
        out.obstructions.push_back(std::move(ob));
    }

    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(sys.labels.size(), 0);
        for (int c : ns.pivot_columns) is_pivot[static_cast<size_t>(c)] = 1;
        for (size_t c = 0; c < sys.labels.size(); ++c)
            if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
    }

    for (size_t v = 0; v < ns.basis.size(); ++v) {
        std::vector<Mat> tuple(static_cast<size_t>(blocks), Mat(n, n));
        for (int b = 0; b < blocks; ++b)
            for (int r = 0; r < n; ++r)
                for (int i = 0; i < n; ++i)
                    tuple[static_cast<size_t>(b)].at(r, i) =
                        ns.basis[v][static_cast<size_t>(uidx(n, b, r, i))];
        // soundness re-check against the defining identity
        for (const Poly& res : linear_identity_residuals(p, kind, tuple))
            if (!res.is_zero())
                throw MathError("internal: invariant_space soundness re-check failed for " +
                                to_string(kind));
        out.basis.push_back(std::move(tuple));
        out.parameter_names.push_back(sys.labels[static_cast<size_t>(free_cols[v])]);
    }

    // general element: sum of parameter * basis member, parameter named after
    // the member's free column
    out.general_element.assign(static_cast<size_t>(blocks), Mat(n, n));
    for (size_t v = 0; v < out.basis.size(); ++v) {
        Poly param = Poly::variable(out.parameter_names[v]);
        for (int b = 0; b < blocks; ++b)
            for (int r = 0; r < n; ++r)
                for (int i = 0; i < n; ++i)
                    out.general_element[static_cast<size_t>(b)].at(r, i) +=
                        param * out.basis[v][static_cast<size_t>(b)].at(r, i);
    }

    // projection of the solution space to the first map
    if (!out.basis.empty()) {
        std::vector<std::vector<Poly>> firsts;
        for (const auto& tuple : out.basis) {
            std::vector<Poly> flat;
            for (int r = 0; r < n; ++r)
                for (int i = 0; i < n; ++i) flat.push_back(tuple[0].at(r, i));
            firsts.push_back(std::move(flat));
        }
        out.d_projection_dim = row_space(firsts).dim();
    }
    return out;
}

std::string zero_pattern(const OperatorSpace& s, int which) {
    if (s.basis.empty() && s.general_element.empty()) return "[]";
    int n = s.general_element[static_cast<size_t>(which)].rows();
    std::string out = "[";
    for (int r = 0; r < n; ++r) {
        if (r) out += ";";
        for (int i = 0; i < n; ++i) {
            bool nz = false;
            for (const auto& tuple : s.basis)
                if (!tuple[static_cast<size_t>(which)].at(r, i).is_zero()) nz = true;
            out += nz ? "*" : ".";
        }
    }
    return out + "]";
}

}  // namespace cala
