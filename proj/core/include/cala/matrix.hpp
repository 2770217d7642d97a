#pragma once

#include <vector>

#include "cala/poly.hpp"

namespace cala {

// Small dense matrix over Poly. Operator matrices follow the convention
// M(e_i) = sum_r M(r,i) e_r: column i is the image of e_i.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Poly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    std::vector<Poly> apply(const std::vector<Poly>& v) const;

    Poly det() const;       // square only
    Mat adjugate() const;   // square only; adj * M = det * I
    bool is_zero() const;

    std::string str() const;  // row-major "[a, b; c, d]"

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

}  // namespace cala
