#pragma once

#include <string>
#include <vector>

#include "cala/matrix.hpp"

namespace cala {

// Coordinates of an element in the ambient basis.
using Element = std::vector<Poly>;

// e_i * e_j = sum_k c(i,j,k) e_k, indices 0-based internally.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(int dim)
        : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Poly& at(int i, int j, int k) { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    const Poly& at(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    bool operator==(const StructureTensor& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    int dim_ = 0;
    std::vector<Poly> c_;
};

struct Algebra {
    std::string name;
    StructureTensor tensor;
    int dim() const { return tensor.dim(); }
};

struct AlgebraPair {
    Algebra first;
    Algebra second;
    int dim() const { return first.dim(); }
};

enum class DefectKind { associativity, compatibility };

struct DefectEntry {
    int i, j, k;  // 1-based basis triple
    Element defect;
};

// Empty entry list means the identity holds identically, including in any
// indeterminates. Entries are listed in lexicographic (i,j,k) order, and the
// defect is oriented right-minus-left: u(vw) - (uv)w for associativity,
// u*1(v*2w) + u*2(v*1w) - (u*1v)*2w - (u*2v)*1w for compatibility.
struct DefectReport {
    DefectKind kind;
    std::vector<DefectEntry> entries;
    bool empty() const { return entries.empty(); }
};

Element multiply(const Algebra& a, const Element& u, const Element& v);
Element multiply(const StructureTensor& t, const Element& u, const Element& v);

DefectReport check_associative(const Algebra& a);
DefectReport check_compatible(const AlgebraPair& p);
// Compatibility defect without the associativity precondition check; used
// where associativity is already known (search inner loops).
DefectReport compatibility_defect(const StructureTensor& a, const StructureTensor& b);

// Algebra with product u *' v = P^{ -1}(P(u) * P(v)); P is then an
// isomorphism from the result onto a. Throws MathError if det(P) is the zero
// polynomial or the transported tensor is not polynomial in the entries.
Algebra transport(const Algebra& a, const Mat& p);

Element basis_element(int dim, int i);  // 0-based i

}  // namespace cala
