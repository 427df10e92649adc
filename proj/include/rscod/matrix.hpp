#ifndef RSCOD_MATRIX_HPP
#define RSCOD_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rscod/galois.hpp"

namespace rsc {

using Vec = std::vector<Label>;

// Dense row-major matrix over a Galois field. Small sizes only.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<Label> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Label& operator()(size_t r, size_t c) { return a[r * cols + c]; }
    Label operator()(size_t r, size_t c) const { return a[r * cols + c]; }

    Vec row(size_t r) const { return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
    void set_row(size_t r, const Vec& v) {
        for (size_t c = 0; c < cols; ++c) a[r * cols + c] = v[c];
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    static Mat identity(const GaloisField&, size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    Mat transposed() const {
        Mat t(cols, rows);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
    Mat columns(const std::vector<size_t>& idx) const {
        Mat s(rows, idx.size());
        for (size_t r = 0; r < rows; ++r)
            for (size_t j = 0; j < idx.size(); ++j) s(r, j) = (*this)(r, idx[j]);
        return s;
    }
};

Mat mat_mul(const GaloisField& f, const Mat& x, const Mat& y);
Vec vec_mat(const GaloisField& f, const Vec& x, const Mat& m);    // row vector * M
Vec mat_vec(const GaloisField& f, const Mat& m, const Vec& x);    // M * column vector
Vec vec_add(const GaloisField& f, const Vec& x, const Vec& y);
Vec vec_sub(const GaloisField& f, const Vec& x, const Vec& y);
Vec vec_scale(const GaloisField& f, Label s, const Vec& x);

size_t mat_rank(const GaloisField& f, Mat m);
std::optional<Mat> mat_inverse(const GaloisField& f, const Mat& m);
// Solves x * M = b for a row vector x (M square). nullopt when singular.
std::optional<Vec> solve_left(const GaloisField& f, const Mat& m, const Vec& b);
// Solves M * x = b (M square).
std::optional<Vec> solve_right(const GaloisField& f, const Mat& m, const Vec& b);
// Reduced row echelon form; returns pivot column per row. When `also` is
// non-null the identical row operations are applied to it (same row count).
std::vector<size_t> rref(const GaloisField& f, Mat& m, Mat* also = nullptr);
// Basis of the right kernel {x : M x = 0}, one vector per matrix row.
Mat right_kernel(const GaloisField& f, const Mat& m);

}  // namespace rsc

#endif
