#include "cala/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "cala/errors.hpp"

namespace cala {

std::string to_string(CocycleMode m) { return m == CocycleMode::mixed ? "mixed" : "strict"; }

namespace {

int gidx(int n, int i, int j, int r) { return (i * n + j) * n + r; }

}  // namespace

Poly CocyclePair::g(int i, int j, int r) const { return coords[static_cast<size_t>(gidx(dim, i, j, r))]; }
Poly CocyclePair::h(int i, int j, int r) const {
    return coords[static_cast<size_t>(dim * dim * dim + gidx(dim, i, j, r))];
}

std::vector<std::string> cocycle_labels(int n) {
    std::vector<std::string> labels;
    for (const char* blk : {"g", "h"})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int r = 0; r < n; ++r)
                    labels.push_back(std::string(blk) + std::to_string(r + 1) + "_" +
                                     std::to_string(i + 1) + std::to_string(j + 1));
    return labels;
}

namespace {

std::vector<std::vector<Poly>> cocycle_rows(const AlgebraPair& p, CocycleMode mode) {
    int n = p.dim();
    const StructureTensor& b = p.first.tensor;
    const StructureTensor& c = p.second.tensor;
    int N = n * n * n;
    std::vector<std::vector<Poly>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int r = 0; r < n; ++r) {
                    std::vector<Poly> row(static_cast<size_t>(2 * N));
                    for (int m = 0; m < n; ++m) {
                        row[static_cast<size_t>(N + gidx(n, m, k, r))] += b.at(i, j, m);
                        row[static_cast<size_t>(gidx(n, m, k, r))] += c.at(i, j, m);
                        row[static_cast<size_t>(gidx(n, i, m, r))] -= c.at(j, k, m);
                        row[static_cast<size_t>(N + gidx(n, i, m, r))] -= b.at(j, k, m);
                    }
                    rows.push_back(std::move(row));
                }
    if (mode == CocycleMode::strict) {
        for (int blk = 0; blk < 2; ++blk) {
            const StructureTensor& t = blk == 0 ? b : c;
            int off = blk == 0 ? 0 : N;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int r = 0; r < n; ++r) {
                            std::vector<Poly> row(static_cast<size_t>(2 * N));
                            for (int m = 0; m < n; ++m) {
                                row[static_cast<size_t>(off + gidx(n, m, k, r))] += t.at(i, j, m);
                                row[static_cast<size_t>(off + gidx(n, i, m, r))] -= t.at(j, k, m);
                            }
                            rows.push_back(std::move(row));
                        }
        }
    }
    return rows;
}

std::vector<std::vector<Poly>> coboundary_vectors(const AlgebraPair& p) {
    int n = p.dim();
    int N = n * n * n;
    std::vector<std::vector<Poly>> vecs;
    for (int r0 = 0; r0 < n; ++r0)
        for (int i0 = 0; i0 < n; ++i0) {
            std::vector<Poly> v(static_cast<size_t>(2 * N));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    v[static_cast<size_t>(gidx(n, i, j, r0))] -= p.first.tensor.at(i, j, i0);
                    v[static_cast<size_t>(N + gidx(n, i, j, r0))] -= p.second.tensor.at(i, j, i0);
                }
            vecs.push_back(std::move(v));
        }
    return vecs;
}

Mat rows_to_mat(const std::vector<std::vector<Poly>>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    return m;
}

}  // namespace

CocycleSpace cocycle_space(const AlgebraPair& p, CocycleMode mode) {
    if (p.first.dim() != p.second.dim())
        throw MathError("cocycle_space: pair dimensions differ");
    int n = p.dim();
    int cols = 2 * n * n * n;
    auto rows = cocycle_rows(p, mode);
    NullspaceResult ns = nullspace(rows_to_mat(rows, cols));
    CocycleSpace out;
    out.mode = mode;
    out.dim = static_cast<int>(ns.basis.size());
    out.labels = cocycle_labels(n);
    out.pivot_columns = ns.pivot_columns;
    for (auto& v : ns.basis) out.basis.push_back({n, std::move(v)});
    return out;
}

CocycleSpace coboundary_space(const AlgebraPair& p) {
    int n = p.dim();
    RowSpace rs = row_space(coboundary_vectors(p));
    CocycleSpace out;
    out.mode = CocycleMode::mixed;
    out.dim = rs.dim();
    out.labels = cocycle_labels(n);
    out.pivot_columns = rs.pivots;
    for (auto& v : rs.rows) out.basis.push_back({n, std::move(v)});
    return out;
}

CohomologyResult second_cohomology(const AlgebraPair& p, CocycleMode mode) {
    int n = p.dim();
    int cols = 2 * n * n * n;

    CohomologyResult res;
    res.mode = mode;

    auto zrows = cocycle_rows(p, mode);
    Mat zmat = rows_to_mat(zrows, cols);
    NullspaceResult zns = nullspace(zmat);
    res.dim_Z2 = static_cast<int>(zns.basis.size());

    auto bvecs = coboundary_vectors(p);
    RowSpace bspace = row_space(bvecs);
    res.dim_B2 = bspace.dim();

    auto zvecs = zns.basis;
    auto inter = intersect_spans(zvecs, bvecs);
    res.dim_B2_in_Z2 = static_cast<int>(inter.size());
    res.dim_H2 = res.dim_Z2 - res.dim_B2_in_Z2;

    // representatives: Z^2 row-space basis members whose pivot coordinate is
    // not a pivot of the (B^2 ∩ Z^2) row space; deterministic because both
    // bases are canonical
    RowSpace zspace = row_space(zvecs);
    RowSpace ispace = row_space(inter);
    for (size_t k = 0; k < zspace.rows.size(); ++k) {
        int piv = zspace.pivots[k];
        if (std::find(ispace.pivots.begin(), ispace.pivots.end(), piv) == ispace.pivots.end())
            res.representatives.push_back({n, zspace.rows[k]});
    }
    for (auto& v : zvecs) res.z2_basis.push_back({n, std::move(v)});

    // column-permuted recomputation (reversed coordinate order)
    std::vector<int> perm(static_cast<size_t>(cols));
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    NullspaceResult zperm = nullspace_permuted(zmat, perm);
    res.permuted_dim_Z2 = static_cast<int>(zperm.basis.size());
    std::vector<std::vector<Poly>> bperm;
    for (const auto& v : bvecs) {
        std::vector<Poly> w(v.size());
        for (size_t c = 0; c < v.size(); ++c) w[c] = v[static_cast<size_t>(perm[c])];
        bperm.push_back(std::move(w));
    }
    res.permuted_dim_B2 = row_space(bperm).dim();
    return res;
}

}  // namespace cala
