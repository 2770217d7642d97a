#include "cala/operators.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <thread>

#include "cala/errors.hpp"

namespace cala {

std::string to_string(OperatorTag t) {
    switch (t) {
        case OperatorTag::automorphism: return "automorphism";
        case OperatorTag::rota_baxter: return "rota-baxter";
        case OperatorTag::nijenhuis: return "nijenhuis";
        case OperatorTag::averaging: return "averaging";
        case OperatorTag::reynolds: return "reynolds";
    }
    return "?";
}

OperatorTag operator_tag_from_string(const std::string& s) {
    if (s == "automorphism") return OperatorTag::automorphism;
    if (s == "rota-baxter") return OperatorTag::rota_baxter;
    if (s == "nijenhuis") return OperatorTag::nijenhuis;
    if (s == "averaging") return OperatorTag::averaging;
    if (s == "reynolds") return OperatorTag::reynolds;
    throw ParseError("unknown operator identity '" + s + "'");
}

std::vector<std::string> ParametricMatrix::parameters() const {
    std::set<std::string> names;
    for (int r = 0; r < entries.rows(); ++r)
        for (int c = 0; c < entries.cols(); ++c)
            for (const auto& nm : entries.at(r, c).indeterminates()) names.insert(nm);
    return {names.begin(), names.end()};
}

bool ResidualSet::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const Residual& r) { return r.value.is_zero(); });
}

std::vector<Residual> ResidualSet::failing() const {
    std::vector<Residual> out;
    for (const auto& r : residuals)
        if (!r.value.is_zero()) out.push_back(r);
    return out;
}

namespace {

Element sub3(Element a, const Element& b, const Element& c) {
    for (size_t k = 0; k < a.size(); ++k) a[k] = a[k] + b[k] - c[k];
    return a;
}

}  // namespace

ResidualSet residuals(const AlgebraPair& p, OperatorIdentity id, const Mat& m) {
    int n = p.dim();
    if (m.rows() != n || m.cols() != n) throw MathError("residuals: matrix dimension mismatch");
    ResidualSet out;
    int product = 0;
    for (const StructureTensor* tp : {&p.first.tensor, &p.second.tensor}) {
        ++product;
        const StructureTensor& t = *tp;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Element u = basis_element(n, i), v = basis_element(n, j);
                Element mu = m.apply(u), mv = m.apply(v);
                auto emit = [&](Element lhs, const Element& rhs) {
                    for (int r = 0; r < n; ++r)
                        out.residuals.push_back({product, i + 1, j + 1, r + 1, lhs[r] - rhs[r]});
                };
                switch (id.tag) {
                    case OperatorTag::automorphism:
                        emit(m.apply(multiply(t, u, v)), multiply(t, mu, mv));
                        break;
                    case OperatorTag::rota_baxter: {
                        Element inner = multiply(t, mu, v);
                        Element inner2 = multiply(t, u, mv);
                        for (int k = 0; k < n; ++k) inner[k] += inner2[k];
                        emit(multiply(t, mu, mv), m.apply(inner));
                        break;
                    }
                    case OperatorTag::nijenhuis: {
                        if (id.variant == IdentityVariant::paper) {
                            // N(u)N(v) = N(N(u)v) + uN(v) - N(uv)
                            Element rhs = m.apply(multiply(t, mu, v));
                            Element mid = multiply(t, u, mv);
                            Element tail = m.apply(multiply(t, u, v));
                            for (int k = 0; k < n; ++k) rhs[k] += mid[k] - tail[k];
                            emit(multiply(t, mu, mv), rhs);
                        } else {
                            // N(u)N(v) = N(N(u)v + uN(v) - N(uv))
                            Element inner = sub3(multiply(t, mu, v), multiply(t, u, mv),
                                                 m.apply(multiply(t, u, v)));
                            emit(multiply(t, mu, mv), m.apply(inner));
                        }
                        break;
                    }
                    case OperatorTag::averaging: {
                        // chi(chi(u)v) = chi(u)chi(v) = chi(u chi(v)): two residual groups
                        Element mid = multiply(t, mu, mv);
                        emit(m.apply(multiply(t, mu, v)), mid);
                        emit(m.apply(multiply(t, u, mv)), mid);
                        break;
                    }
                    case OperatorTag::reynolds: {
                        Element inner = sub3(multiply(t, mu, v), multiply(t, u, mv),
                                             multiply(t, mu, mv));
                        Element lhs = (id.variant == IdentityVariant::paper)
                                          ? m.apply(multiply(t, mu, v))
                                          : multiply(t, mu, mv);
                        emit(std::move(lhs), m.apply(inner));
                        break;
                    }
                }
            }
    }
    return out;
}

FamilyVerdict verify_family(const AlgebraPair& p, OperatorIdentity id, const ParametricMatrix& m) {
    FamilyVerdict v;
    ResidualSet rs = residuals(p, id, m.entries);
    v.failing_residuals = rs.failing();
    v.verified = v.failing_residuals.empty();
    for (const auto& cond : m.side_conditions)
        v.side_conditions.push_back({cond, !cond.is_zero()});
    if (id.tag == OperatorTag::automorphism) {
        Poly det = m.entries.det();
        v.side_conditions.push_back({det, !det.is_zero()});
        if (det.is_zero()) v.verified = false;  // bijectivity cannot hold
    }
    for (const auto& sc : v.side_conditions)
        if (!sc.nonzero_polynomial) v.verified = false;
    return v;
}

namespace {

std::vector<std::pair<int, int>> forced_zero_positions(const ParametricMatrix& fam) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < fam.entries.rows(); ++r)
        for (int c = 0; c < fam.entries.cols(); ++c)
            if (fam.entries.at(r, c).is_zero()) out.emplace_back(r, c);
    return out;
}

}  // namespace

RefutationReport refute_sample(const AlgebraPair& p, OperatorIdentity id,
                               const ParametricMatrix& family, int trials, uint64_t seed) {
    if (trials < 1) throw MathError("refute_sample: trials must be >= 1");
    auto zeros = forced_zero_positions(family);
    if (zeros.empty())
        throw MathError("refute_sample: family has no forced-zero positions to violate");
    int n = p.dim();
    std::mt19937_64 rng(seed);
    // map raw draws into {-2..2} directly; std::uniform_int_distribution is
    // not bit-reproducible across library implementations
    auto draw = [&]() { return static_cast<int>(rng() % 5) - 2; };
    RefutationReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Mat m(n, n);
        bool violates = false;
        do {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m.at(r, c) = Poly(draw());
            violates = false;
            for (auto [r, c] : zeros)
                if (!m.at(r, c).is_zero()) violates = true;
        } while (!violates);
        if (residuals(p, id, m).all_zero())
            rep.unexpected_solutions.push_back(m);
        else
            ++rep.failing;
    }
    return rep;
}

std::vector<Mat> grid_solve(const AlgebraPair& p, OperatorIdentity id, int bound) {
    int n = p.dim();
    if (bound < 1) throw LimitError("grid_solve: bound must be >= 1");
    if (n == 2) {
        if (bound > 2) throw LimitError("grid_solve: bound > 2 unsupported for dimension 2");
    } else if (n == 3) {
        if (bound > 1) throw LimitError("grid_solve: bound > 1 unsupported for dimension 3");
    } else {
        throw LimitError("grid_solve: only dimensions 2 and 3 are supported");
    }
    const int cells = n * n;
    const int radix = 2 * bound + 1;
    uint64_t total = 1;
    for (int k = 0; k < cells; ++k) total *= static_cast<uint64_t>(radix);

    auto decode = [&](uint64_t index) {
        Mat m(n, n);
        for (int k = cells - 1; k >= 0; --k) {
            int digit = static_cast<int>(index % radix) - bound;
            index /= radix;
            m.at(k / n, k % n) = Poly(digit);
        }
        return m;
    };

    // partition the enumeration across workers; merge in index order so the
    // result is independent of the worker count
    unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8);
    if (total < 512) workers = 1;
    std::vector<std::future<std::vector<std::pair<uint64_t, Mat>>>> futs;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            std::vector<std::pair<uint64_t, Mat>> found;
            for (uint64_t idx = lo; idx < hi; ++idx) {
                Mat m = decode(idx);
                if (id.tag == OperatorTag::automorphism && m.det().is_zero()) continue;
                if (residuals(p, id, m).all_zero()) found.emplace_back(idx, std::move(m));
            }
            return found;
        }));
    }
    std::vector<std::pair<uint64_t, Mat>> all;
    for (auto& f : futs)
        for (auto& hit : f.get()) all.push_back(std::move(hit));
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Mat> out;
    out.reserve(all.size());
    for (auto& [idx, m] : all) out.push_back(std::move(m));
    return out;
}

}  // namespace cala
