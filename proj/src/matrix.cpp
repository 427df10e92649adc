#include "rscod/matrix.hpp"

#include <cassert>

namespace rsc {

Mat mat_mul(const GaloisField& f, const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            Label xv = x(i, k);
            if (xv == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                z(i, j) = f.add(z(i, j), f.mul(xv, y(k, j)));
        }
    return z;
}

Vec vec_mat(const GaloisField& f, const Vec& x, const Mat& m) {
    assert(x.size() == m.rows);
    Vec y(m.cols, 0);
    for (size_t r = 0; r < m.rows; ++r) {
        if (x[r] == 0) continue;
        for (size_t c = 0; c < m.cols; ++c) y[c] = f.add(y[c], f.mul(x[r], m(r, c)));
    }
    return y;
}

Vec mat_vec(const GaloisField& f, const Mat& m, const Vec& x) {
    assert(x.size() == m.cols);
    Vec y(m.rows, 0);
    for (size_t r = 0; r < m.rows; ++r) {
        Label s = 0;
        for (size_t c = 0; c < m.cols; ++c) s = f.add(s, f.mul(m(r, c), x[c]));
        y[r] = s;
    }
    return y;
}

Vec vec_add(const GaloisField& f, const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = f.add(x[i], y[i]);
    return z;
}

Vec vec_sub(const GaloisField& f, const Vec& x, const Vec& y) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = f.sub(x[i], y[i]);
    return z;
}

Vec vec_scale(const GaloisField& f, Label s, const Vec& x) {
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = f.mul(s, x[i]);
    return z;
}

std::vector<size_t> rref(const GaloisField& f, Mat& m, Mat* also) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
            if (also)
                for (size_t j = 0; j < also->cols; ++j) std::swap((*also)(r, j), (*also)(p, j));
        }
        Label s = f.inv(m(r, c));
        if (s != 1) {
            for (size_t j = 0; j < m.cols; ++j) m(r, j) = f.mul(s, m(r, j));
            if (also)
                for (size_t j = 0; j < also->cols; ++j) (*also)(r, j) = f.mul(s, (*also)(r, j));
        }
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Label t = m(i, c);
            for (size_t j = 0; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
            if (also)
                for (size_t j = 0; j < also->cols; ++j)
                    (*also)(i, j) = f.sub((*also)(i, j), f.mul(t, (*also)(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t mat_rank(const GaloisField& f, Mat m) { return rref(f, m).size(); }

std::optional<Mat> mat_inverse(const GaloisField& f, const Mat& m) {
    assert(m.rows == m.cols);
    Mat work = m;
    Mat inv = Mat::identity(f, m.rows);
    auto piv = rref(f, work, &inv);
    if (piv.size() != m.rows) return std::nullopt;
    return inv;
}

std::optional<Vec> solve_right(const GaloisField& f, const Mat& m, const Vec& b) {
    auto inv = mat_inverse(f, m);
    if (!inv) return std::nullopt;
    return mat_vec(f, *inv, b);
}

std::optional<Vec> solve_left(const GaloisField& f, const Mat& m, const Vec& b) {
    auto inv = mat_inverse(f, m);
    if (!inv) return std::nullopt;
    return vec_mat(f, b, *inv);
}

Mat right_kernel(const GaloisField& f, const Mat& m) {
    Mat work = m;
    auto piv = rref(f, work);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat ker(free_cols.size(), m.cols);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        ker(i, fc) = 1;
        for (size_t r = 0; r < piv.size(); ++r) ker(i, piv[r]) = f.neg(work(r, fc));
    }
    return ker;
}

}  // namespace rsc
