#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nmds/errors.hpp"
#include "nmds/field.hpp"

namespace nmds {

// Dense row-major matrix over a runtime field.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr F, std::size_t rows, std::size_t cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldPtr& field() const { return F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fe& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Fe at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const Fe* row(std::size_t i) const { return a_.data() + i * cols_; }
    Fe* row(std::size_t i) { return a_.data() + i * cols_; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // Reduced row echelon form in place: pivots 1, pivot columns cleared
    // above and below, zero rows dropped. Returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            const Fe piv_inv = F_->inv(at(r, col));
            for (std::size_t j = col; j < cols_; ++j) at(r, j) = F_->mul(at(r, j), piv_inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const Fe f = at(i, col);
                if (f == 0) continue;
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = F_->sub(at(i, j), F_->mul(f, at(r, j)));
            }
            pivots.push_back(col);
            ++r;
        }
        rows_ = r;
        a_.resize(rows_ * cols_);
        return pivots;
    }

private:
    FieldPtr F_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fe> a_;
};

inline Mat mat_from_rows(const FieldPtr& F, const std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) return Mat(F, 0, 0);
    Mat m(F, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw consistency_error("ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline std::size_t rank_of(Mat m) { return m.rref().size(); }

inline Mat transpose(const Mat& m) {
    Mat t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw consistency_error("inner dimensions differ");
    const FieldPtr& F = a.field();
    Mat c(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Fe v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = F->add(c.at(i, j), F->mul(v, b.at(k, j)));
        }
    return c;
}

inline bool is_zero_matrix(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

// Basis of the right kernel {x : m x^T = 0}, one row per free column of
// the RREF, in ascending free-column order, then reduced again so the
// result is canonical for the subspace.
inline Mat kernel_basis(Mat m) {
    const FieldPtr F = m.field();
    const std::size_t n = m.cols();
    const std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Mat ker(F, n - pivots.size(), n);
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        ker.at(r, j) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            ker.at(r, pivots[i]) = F->neg(m.at(i, j));
        ++r;
    }
    ker.rref();
    return ker;
}

// Row space equality via RREF comparison.
inline bool same_row_space(Mat a, Mat b) {
    if (a.cols() != b.cols()) return false;
    a.rref();
    b.rref();
    return a == b;
}

}  // namespace nmds
