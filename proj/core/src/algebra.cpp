#include "cala/algebra.hpp"

#include "cala/errors.hpp"

namespace cala {

Element basis_element(int dim, int i) {
    Element e(static_cast<size_t>(dim));
    e[static_cast<size_t>(i)] = Poly(1);
    return e;
}

Element multiply(const StructureTensor& t, const Element& u, const Element& v) {
    int n = t.dim();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw MathError("multiply: element dimension mismatch");
    Element out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            Poly uv = u[i] * v[j];
            for (int k = 0; k < n; ++k)
                if (!t.at(i, j, k).is_zero()) out[k] += uv * t.at(i, j, k);
        }
    }
    return out;
}

Element multiply(const Algebra& a, const Element& u, const Element& v) {
    return multiply(a.tensor, u, v);
}

namespace {

bool nonzero(const Element& e) {
    for (const auto& p : e)
        if (!p.is_zero()) return true;
    return false;
}

Element sub(Element a, const Element& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

Element add(Element a, const Element& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

}  // namespace

DefectReport check_associative(const Algebra& a) {
    const auto& t = a.tensor;
    int n = t.dim();
    DefectReport rep{DefectKind::associativity, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = basis_element(n, i), ej = basis_element(n, j), ek = basis_element(n, k);
                Element right = multiply(t, ei, multiply(t, ej, ek));
                Element left = multiply(t, multiply(t, ei, ej), ek);
                Element d = sub(std::move(right), left);
                if (nonzero(d)) rep.entries.push_back({i + 1, j + 1, k + 1, std::move(d)});
            }
    return rep;
}

DefectReport compatibility_defect(const StructureTensor& a, const StructureTensor& b) {
    int n = a.dim();
    DefectReport rep{DefectKind::compatibility, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = basis_element(n, i), ej = basis_element(n, j), ek = basis_element(n, k);
                Element rhs = add(multiply(a, ei, multiply(b, ej, ek)),
                                  multiply(b, ei, multiply(a, ej, ek)));
                Element lhs = add(multiply(b, multiply(a, ei, ej), ek),
                                  multiply(a, multiply(b, ei, ej), ek));
                Element d = sub(std::move(rhs), lhs);
                if (nonzero(d)) rep.entries.push_back({i + 1, j + 1, k + 1, std::move(d)});
            }
    return rep;
}

DefectReport check_compatible(const AlgebraPair& p) {
    if (p.first.dim() != p.second.dim())
        throw MathError("check_compatible: pair dimensions differ");
    // The axiom alone does not define a compatible pair; both components
    // must be associative.
    for (const Algebra* a : {&p.first, &p.second}) {
        DefectReport ar = check_associative(*a);
        if (!ar.empty())
            throw MathError("check_compatible: component '" + a->name +
                            "' is not associative (first defect at basis triple (" +
                            std::to_string(ar.entries[0].i) + "," + std::to_string(ar.entries[0].j) +
                            "," + std::to_string(ar.entries[0].k) + "))");
    }
    return compatibility_defect(p.first.tensor, p.second.tensor);
}

Algebra transport(const Algebra& a, const Mat& p) {
    int n = a.dim();
    if (p.rows() != n || p.cols() != n) throw MathError("transport: matrix dimension mismatch");
    Poly d = p.det();
    if (d.is_zero()) throw MathError("transport: singular matrix (zero determinant)");
    Mat adj = p.adjugate();
    Algebra out{a.name + "'", StructureTensor(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element w = multiply(a.tensor, p.apply(basis_element(n, i)), p.apply(basis_element(n, j)));
            Element back = adj.apply(w);  // det * P^{-1} w
            for (int k = 0; k < n; ++k) {
                auto q = back[k].divide_exact(d);
                if (!q)
                    throw MathError("transport: inverse image is not polynomial in the entries");
                out.tensor.at(i, j, k) = std::move(*q);
            }
        }
    return out;
}

}  // namespace cala
