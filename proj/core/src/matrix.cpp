#include "cala/matrix.hpp"

#include <sstream>

#include "cala/errors.hpp"

namespace cala {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw MathError("matrix product shape mismatch");
    Mat out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Poly acc;
            for (int k = 0; k < cols_; ++k) acc += at(r, k) * o.at(k, c);
            out.at(r, c) = std::move(acc);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum shape mismatch");
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference shape mismatch");
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

std::vector<Poly> Mat::apply(const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw MathError("matrix apply shape mismatch");
    std::vector<Poly> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Poly acc;
        for (int c = 0; c < cols_; ++c)
            if (!v[c].is_zero()) acc += at(r, c) * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

namespace {

Poly minor_det(const Mat& m, std::vector<int> rows, std::vector<int> cols) {
    size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Poly acc;
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        if (m.at(rows[0], cols[j]).is_zero()) continue;
        std::vector<int> subcols;
        for (size_t k = 0; k < n; ++k)
            if (k != j) subcols.push_back(cols[k]);
        Poly term = m.at(rows[0], cols[j]) * minor_det(m, subrows, subcols);
        if (j % 2) acc -= term; else acc += term;
    }
    return acc;
}

}  // namespace

Poly Mat::det() const {
    if (rows_ != cols_) throw MathError("determinant of a non-square matrix");
    if (rows_ == 0) return Poly(1);
    std::vector<int> idx(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) idx[i] = i;
    return minor_det(*this, idx, idx);
}

Mat Mat::adjugate() const {
    if (rows_ != cols_) throw MathError("adjugate of a non-square matrix");
    int n = rows_;
    Mat out(n, n);
    if (n == 1) {
        out.at(0, 0) = Poly(1);
        return out;
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::vector<int> rr, cc;
            for (int k = 0; k < n; ++k) {
                if (k != r) rr.push_back(k);
                if (k != c) cc.push_back(k);
            }
            Poly m = minor_det(*this, rr, cc);
            out.at(c, r) = ((r + c) % 2) ? -m : m;  // transposed cofactor
        }
    return out;
}

bool Mat::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace cala
