#include "cala/linsolve.hpp"

#include <algorithm>
#include <set>

#include "cala/errors.hpp"

namespace cala {

namespace {

// ---- univariate helpers (dense coefficient form, ascending degree) -------

std::vector<Rational> to_dense(const Poly& p) {
    std::vector<Rational> c(static_cast<size_t>(p.total_degree()) + 1, Rational(0));
    for (const auto& [e, coef] : p.terms()) c[e.empty() ? 0 : static_cast<size_t>(e[0])] = coef;
    return c;
}

Poly from_dense(const std::vector<Rational>& c, const std::string& name) {
    Poly x = Poly::variable(name);
    Poly acc;
    for (size_t k = c.size(); k-- > 0;)
        if (c[k] != 0) acc += Poly(c[k]) * x.pow(static_cast<unsigned>(k));
    return acc;
}

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// monic gcd of univariate polynomials
std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational q = a.back() / b.back();
            size_t shift = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& x : a) x /= lead;
    }
    return a;
}

// gcd of the polynomial parts of a vector of entries (monic), or the constant
// polynomial 1 when any entry is a nonzero constant.
Poly entries_poly_gcd(const std::vector<Poly>& v, const std::string& name) {
    std::vector<Rational> g;
    bool any = false;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.is_constant()) return Poly(1);
        g = any ? uni_gcd(g, to_dense(p)) : to_dense(p);
        any = true;
        if (g.size() == 1) return Poly(1);
    }
    if (!any) return Poly(1);
    return from_dense(g, name);
}

// scale vector so that entries are content-free integers w.r.t. the rational
// part, and sign-normalized (leading coefficient of first nonzero entry > 0)
void normalize_vector(std::vector<Poly>& v, const std::string& uniname) {
    if (!uniname.empty()) {
        Poly g = entries_poly_gcd(v, uniname);
        if (!g.is_constant())
            for (auto& p : v) p = *p.divide_exact(g);
    }
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& p : v)
        for (const auto& [e, c] : p.terms()) {
            num_gcd = gcd(num_gcd, numerator(c));
            den_lcm = lcm(den_lcm, denominator(c));
        }
    if (num_gcd == 0) return;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (auto& p : v) p = Poly(scale) * p;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        // leading coefficient in the canonical (grlex-largest) term
        const Rational& lead = p.terms().rbegin()->second;
        if (lead < 0)
            for (auto& q : v) q = -q;
        break;
    }
}

std::string single_indeterminate(const Mat& m) {
    std::set<std::string> names;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& nm : m.at(r, c).indeterminates()) names.insert(nm);
    if (names.size() > 1)
        throw MathError("nullspace: system has more than one indeterminate");
    return names.empty() ? std::string() : *names.begin();
}

struct Echelon {
    std::vector<std::vector<Poly>> rows;
    std::vector<int> pivot_cols;
    std::vector<Poly> pivot_polys;  // nonconstant pivots only
};

// Fraction-free Bareiss forward elimination. Constant pivots are preferred
// so the symbolic path only divides by a polynomial when no rational pivot
// exists in the column.
Echelon eliminate(std::vector<std::vector<Poly>> rows, int cols) {
    Echelon out;
    size_t pr = 0;
    Poly prev(1);
    for (int col = 0; col < cols && pr < rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t r = pr; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            if (rows[r][col].is_constant()) {
                pivot = r;
                break;
            }
            if (pivot == rows.size()) pivot = r;
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[pr], rows[pivot]);
        const Poly p = rows[pr][col];
        if (!p.is_constant()) out.pivot_polys.push_back(p);
        for (size_t r = pr + 1; r < rows.size(); ++r) {
            const Poly f = rows[r][col];
            for (int c = col; c < cols; ++c) {
                Poly t = rows[r][c] * p;
                if (!f.is_zero() && !rows[pr][c].is_zero()) t -= rows[pr][c] * f;
                auto q = t.divide_exact(prev);
                if (!q) throw MathError("internal: Bareiss division failed");
                rows[r][c] = std::move(*q);
            }
        }
        prev = p;
        out.pivot_cols.push_back(col);
        ++pr;
    }
    rows.resize(pr);
    out.rows = std::move(rows);
    return out;
}

NullspaceResult solve(std::vector<std::vector<Poly>> rows, int cols) {
    std::set<std::string> names;
    for (const auto& r : rows)
        for (const auto& p : r)
            for (const auto& nm : p.indeterminates()) names.insert(nm);
    if (names.size() > 1) throw MathError("nullspace: system has more than one indeterminate");
    std::string uniname = names.empty() ? std::string() : *names.begin();

    Echelon ech = eliminate(std::move(rows), cols);
    NullspaceResult res;
    res.rank = static_cast<int>(ech.pivot_cols.size());
    res.pivot_columns = ech.pivot_cols;
    res.pivot_polys = ech.pivot_polys;

    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Poly> x(static_cast<size_t>(cols));
        x[static_cast<size_t>(f)] = Poly(1);
        for (size_t k = ech.rows.size(); k-- > 0;) {
            int ck = ech.pivot_cols[k];
            Poly s;
            for (int j = ck + 1; j < cols; ++j)
                if (!x[static_cast<size_t>(j)].is_zero() && !ech.rows[k][static_cast<size_t>(j)].is_zero())
                    s += ech.rows[k][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            const Poly& p = ech.rows[k][static_cast<size_t>(ck)];
            if (s.is_zero()) continue;
            if (p.is_constant()) {
                x[static_cast<size_t>(ck)] = *(-s).divide_exact(p);
            } else {
                for (int j = 0; j < cols; ++j)
                    if (j != ck) x[static_cast<size_t>(j)] = x[static_cast<size_t>(j)] * p;
                x[static_cast<size_t>(ck)] = -s;
            }
        }
        normalize_vector(x, uniname);
        res.basis.push_back(std::move(x));
    }
    return res;
}

std::vector<std::vector<Poly>> mat_rows(const Mat& m) {
    std::vector<std::vector<Poly>> rows(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        rows[static_cast<size_t>(r)].resize(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    }
    return rows;
}

}  // namespace

NullspaceResult nullspace(const Mat& m) { return solve(mat_rows(m), m.cols()); }

NullspaceResult nullspace_permuted(const Mat& m, const std::vector<int>& col_perm) {
    auto rows = mat_rows(m);
    std::vector<std::vector<Poly>> prows(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        prows[r].resize(rows[r].size());
        for (size_t c = 0; c < col_perm.size(); ++c)
            prows[r][c] = rows[r][static_cast<size_t>(col_perm[c])];
    }
    return solve(std::move(prows), m.cols());
}

int rank_of(const Mat& m) { return nullspace(m).rank; }

RowSpace row_space(const std::vector<std::vector<Poly>>& vectors) {
    RowSpace out;
    if (vectors.empty()) return out;
    int cols = static_cast<int>(vectors[0].size());
    std::set<std::string> names;
    for (const auto& r : vectors)
        for (const auto& p : r)
            for (const auto& nm : p.indeterminates()) names.insert(nm);
    if (names.size() > 1) throw MathError("row_space: more than one indeterminate");
    std::string uniname = names.empty() ? std::string() : *names.begin();
    Echelon ech = eliminate(vectors, cols);
    for (auto& r : ech.rows) normalize_vector(r, uniname);
    out.rows = std::move(ech.rows);
    out.pivots = std::move(ech.pivot_cols);
    return out;
}

bool in_span(const RowSpace& space, const std::vector<Poly>& v) {
    auto rows = space.rows;
    rows.push_back(v);
    return row_space(rows).dim() == space.dim();
}

std::vector<std::vector<Poly>> intersect_spans(const std::vector<std::vector<Poly>>& a,
                                               const std::vector<std::vector<Poly>>& b) {
    RowSpace ra = row_space(a), rb = row_space(b);
    if (ra.dim() == 0 || rb.dim() == 0) return {};
    size_t cols = ra.rows[0].size();
    // columns of the stacked system: coefficients on a-basis then b-basis;
    // nullspace vectors (x, y) satisfy sum x_i a_i - sum y_j b_j = 0.
    Mat sys(static_cast<int>(cols), ra.dim() + rb.dim());
    for (size_t c = 0; c < cols; ++c) {
        for (int k = 0; k < ra.dim(); ++k) sys.at(static_cast<int>(c), k) = ra.rows[static_cast<size_t>(k)][c];
        for (int k = 0; k < rb.dim(); ++k)
            sys.at(static_cast<int>(c), ra.dim() + k) = -rb.rows[static_cast<size_t>(k)][c];
    }
    auto ns = nullspace(sys);
    std::vector<std::vector<Poly>> vecs;
    for (const auto& sol : ns.basis) {
        std::vector<Poly> v(cols);
        for (int k = 0; k < ra.dim(); ++k)
            if (!sol[static_cast<size_t>(k)].is_zero())
                for (size_t c = 0; c < cols; ++c) v[c] += sol[static_cast<size_t>(k)] * ra.rows[static_cast<size_t>(k)][c];
        vecs.push_back(std::move(v));
    }
    return row_space(vecs).rows;
}

}  // namespace cala
