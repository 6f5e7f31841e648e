#pragma once

#include <cassert>
#include <string>
#include <vector>

namespace gkn {

// Dense matrix over an exact field object F (RatField, CycloField, RatFuncField).
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(const F& f, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(const F& f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    void add_in_place(const F& f, const Mat& o) {
        assert(rows == o.rows && cols == o.cols);
        for (size_t k = 0; k < a.size(); ++k) a[k] = f.add(a[k], o.a[k]);
    }

    bool equals(const F& f, const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t k = 0; k < a.size(); ++k)
            if (!f.eq(a[k], o.a[k])) return false;
        return true;
    }
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
    assert(x.cols == y.rows);
    Mat<F> r(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) {
                const auto& ykj = y.at(k, j);
                if (f.is_zero(ykj)) continue;
                r.at(i, j) = f.add(r.at(i, j), f.mul(xik, ykj));
            }
        }
    return r;
}

// Rank by exact Gaussian elimination over the field; destroys its copy.
template <class F>
int mat_rank(const F& f, Mat<F> m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        auto pinv = f.inv(m.at(row, col));
        for (int i = row + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            auto factor = f.mul(m.at(i, col), pinv);
            m.at(i, col) = f.zero();
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace gkn
