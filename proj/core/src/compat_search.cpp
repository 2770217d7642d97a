#include "cala/compat_search.hpp"

#include <algorithm>
#include <set>

#include "cala/errors.hpp"

namespace cala {

namespace {

using Flat = std::vector<int>;

// Rational specialization of a tensor (every indeterminate evaluated at 2)
// used as a fast candidate filter: a defect that is nonzero at the sample
// point is nonzero identically, so only sample survivors get the full
// symbolic check.
struct QTensor {
    int n = 0;
    std::vector<Rational> c;
    Rational& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * n + j) * n + k]; }
    const Rational& at(int i, int j, int k) const {
        return c[(static_cast<size_t>(i) * n + j) * n + k];
    }
};

QTensor specialize(const StructureTensor& t) {
    QTensor q;
    q.n = t.dim();
    q.c.resize(static_cast<size_t>(q.n) * q.n * q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            for (int k = 0; k < q.n; ++k) {
                const Poly& p = t.at(i, j, k);
                if (p.is_constant()) {
                    q.at(i, j, k) = p.is_zero() ? Rational(0) : p.to_rational();
                } else {
                    std::map<std::string, Poly> bind;
                    for (const auto& nm : p.indeterminates()) bind[nm] = Poly(2);
                    q.at(i, j, k) = p.substitute(bind).to_rational();
                }
            }
    return q;
}

long long idet(const Flat& f, int n) {
    auto e = [&](int r, int c) { return static_cast<long long>(f[static_cast<size_t>(r) * n + c]); };
    if (n == 1) return e(0, 0);
    if (n == 2) return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

// transported tensor of the rational specialization; P integer with det d
QTensor q_transport(const QTensor& b, const Flat& f, long long d) {
    int n = b.n;
    // inverse = adjugate / det
    std::vector<Rational> inv(static_cast<size_t>(n) * n);
    auto e = [&](int r, int c) { return static_cast<long long>(f[static_cast<size_t>(r) * n + c]); };
    if (n == 1) {
        inv[0] = Rational(1) / Rational(e(0, 0));
    } else if (n == 2) {
        inv[0] = Rational(e(1, 1)) / d;
        inv[1] = Rational(-e(0, 1)) / d;
        inv[2] = Rational(-e(1, 0)) / d;
        inv[3] = Rational(e(0, 0)) / d;
    } else {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                long long m = e((c + 1) % 3, (r + 1) % 3) * e((c + 2) % 3, (r + 2) % 3) -
                              e((c + 1) % 3, (r + 2) % 3) * e((c + 2) % 3, (r + 1) % 3);
                inv[static_cast<size_t>(r) * 3 + c] = Rational(m) / d;
            }
    }
    QTensor out;
    out.n = n;
    out.c.resize(b.c.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // w = (P e_i) * (P e_j) under b
            std::vector<Rational> w(static_cast<size_t>(n));
            for (int a = 0; a < n; ++a) {
                if (e(a, i) == 0) continue;
                for (int bb = 0; bb < n; ++bb) {
                    if (e(bb, j) == 0) continue;
                    Rational s = Rational(e(a, i)) * Rational(e(bb, j));
                    for (int k = 0; k < n; ++k)
                        if (b.at(a, bb, k) != 0) w[static_cast<size_t>(k)] += s * b.at(a, bb, k);
                }
            }
            for (int r = 0; r < n; ++r) {
                Rational acc(0);
                for (int k = 0; k < n; ++k)
                    if (w[static_cast<size_t>(k)] != 0)
                        acc += inv[static_cast<size_t>(r) * n + k] * w[static_cast<size_t>(k)];
                out.at(i, j, r) = std::move(acc);
            }
        }
    return out;
}

std::vector<Rational> q_mul(const QTensor& t, const std::vector<Rational>& u,
                            const std::vector<Rational>& v) {
    int n = t.n;
    std::vector<Rational> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (u[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (v[static_cast<size_t>(j)] == 0) continue;
            Rational s = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
            for (int k = 0; k < n; ++k)
                if (t.at(i, j, k) != 0) out[static_cast<size_t>(k)] += s * t.at(i, j, k);
        }
    }
    return out;
}

bool q_compat_empty(const QTensor& a, const QTensor& b) {
    int n = a.n;
    std::vector<Rational> ei(static_cast<size_t>(n)), ej(static_cast<size_t>(n)),
        ek(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::fill(ei.begin(), ei.end(), Rational(0));
                std::fill(ej.begin(), ej.end(), Rational(0));
                std::fill(ek.begin(), ek.end(), Rational(0));
                ei[static_cast<size_t>(i)] = 1;
                ej[static_cast<size_t>(j)] = 1;
                ek[static_cast<size_t>(k)] = 1;
                auto rhs1 = q_mul(a, ei, q_mul(b, ej, ek));
                auto rhs2 = q_mul(b, ei, q_mul(a, ej, ek));
                auto lhs1 = q_mul(b, q_mul(a, ei, ej), ek);
                auto lhs2 = q_mul(a, q_mul(b, ei, ej), ek);
                for (int r = 0; r < n; ++r)
                    if (rhs1[static_cast<size_t>(r)] + rhs2[static_cast<size_t>(r)] !=
                        lhs1[static_cast<size_t>(r)] + lhs2[static_cast<size_t>(r)])
                        return false;
            }
    return true;
}

Flat identity_flat(int n) {
    Flat f(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) f[static_cast<size_t>(i) * n + i] = 1;
    return f;
}

std::vector<Flat> permutation_flats(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<Flat> out;
    do {
        Flat f(static_cast<size_t>(n) * n, 0);
        for (int r = 0; r < n; ++r) f[static_cast<size_t>(r) * n + perm[static_cast<size_t>(r)]] = 1;
        out.push_back(std::move(f));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Mat to_mat(const Flat& f, int n) {
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Poly(f[static_cast<size_t>(r) * n + c]);
    return m;
}

}  // namespace

SearchOutcome search_witness(const Algebra& a, const Algebra& b, int bound) {
    if (a.dim() != b.dim()) throw MathError("search_witness: dimensions differ");
    int n = a.dim();
    if (bound < 1) throw LimitError("search_witness: bound must be >= 1");
    if ((n == 2 && bound > 2) || (n == 3 && bound > 1) || n > 3)
        throw LimitError("search_witness: enumeration limits are bound <= 2 for n = 2, bound <= 1 for n = 3");
    if (!check_associative(a).empty() || !check_associative(b).empty())
        throw MathError("search_witness: components must be associative");

    SearchOutcome out;
    const int cells = n * n;
    const int radix = 2 * bound + 1;
    uint64_t total = 1;
    for (int k = 0; k < cells; ++k) total *= static_cast<uint64_t>(radix);
    out.search_space = total;

    // priority list first (fast positive controls), then plain lexicographic
    std::vector<Flat> priority;
    priority.push_back(identity_flat(n));
    for (auto& pm : permutation_flats(n))
        if (pm != priority.front()) priority.push_back(std::move(pm));
    std::set<Flat> seen(priority.begin(), priority.end());

    auto try_candidate = [&](const Flat& f) -> bool {
        Mat p = to_mat(f, n);
        if (p.det().is_zero()) return false;
        ++out.candidates_enumerated;
        // associativity is preserved by transport, so only the compatibility
        // defect needs evaluating here
        Algebra moved = transport(b, p);
        DefectReport d = compatibility_defect(a.tensor, moved.tensor);
        if (!d.empty()) return false;
        out.witness = Witness{std::move(p), AlgebraPair{a, std::move(moved)},
                              DefectReport{DefectKind::compatibility, {}}};
        return true;
    };

    for (const auto& f : priority)
        if (try_candidate(f)) return out;

    Flat f(static_cast<size_t>(cells), -bound);
    for (uint64_t idx = 0; idx < total; ++idx) {
        if (!seen.count(f) && try_candidate(f)) return out;
        // odometer increment, last entry fastest
        for (int k = cells - 1; k >= 0; --k) {
            if (f[static_cast<size_t>(k)] < bound) {
                ++f[static_cast<size_t>(k)];
                break;
            }
            f[static_cast<size_t>(k)] = -bound;
        }
    }
    return out;
}

bool verify_witness(const Algebra& a, const Algebra& b, const Witness& w) {
    try {
        Algebra moved = transport(b, w.p);
        AlgebraPair p{a, moved};
        return check_compatible(p).empty();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace cala
