#pragma once

#include <cstddef>
#include <vector>

#include "firma/errors.hpp"

namespace firma {

// Row-major dense matrix of doubles. Just enough linear algebra for the MLP;
// loop orders keep the innermost access contiguous so the compiler vectorizes.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    double* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }
};

// out[b,o] = sum_i x[b,i] * w[i,o]  (+ bias[o] if given)
inline void matmul(const Mat& x, const Mat& w, Mat& out, const double* bias = nullptr) {
    if (x.cols != w.rows) throw ShapeError("matmul: inner dimensions disagree");
    out.rows = x.rows;
    out.cols = w.cols;
    out.a.assign(static_cast<std::size_t>(x.rows) * w.cols, 0.0);
    for (int b = 0; b < x.rows; ++b) {
        double* ob = out.row(b);
        if (bias) {
            for (int o = 0; o < w.cols; ++o) ob[o] = bias[o];
        }
        const double* xb = x.row(b);
        for (int i = 0; i < x.cols; ++i) {
            const double xi = xb[i];
            const double* wi = w.row(i);
            for (int o = 0; o < w.cols; ++o) ob[o] += xi * wi[o];
        }
    }
}

// dx[b,i] = sum_o dy[b,o] * w[i,o]
inline void matmul_transposed_b(const Mat& dy, const Mat& w, Mat& dx) {
    if (dy.cols != w.cols) throw ShapeError("matmul_transposed_b: dimensions disagree");
    dx.rows = dy.rows;
    dx.cols = w.rows;
    dx.a.assign(static_cast<std::size_t>(dy.rows) * w.rows, 0.0);
    for (int b = 0; b < dy.rows; ++b) {
        const double* dyb = dy.row(b);
        double* dxb = dx.row(b);
        for (int i = 0; i < w.rows; ++i) {
            const double* wi = w.row(i);
            double acc = 0.0;
            for (int o = 0; o < dy.cols; ++o) acc += dyb[o] * wi[o];
            dxb[i] = acc;
        }
    }
}

// dw[i,o] += sum_b x[b,i] * dy[b,o];  db[o] += sum_b dy[b,o]
inline void accumulate_weight_grads(const Mat& x, const Mat& dy, double* dw, double* db) {
    for (int b = 0; b < x.rows; ++b) {
        const double* xb = x.row(b);
        const double* dyb = dy.row(b);
        for (int i = 0; i < x.cols; ++i) {
            const double xi = xb[i];
            double* dwi = dw + static_cast<std::size_t>(i) * dy.cols;
            for (int o = 0; o < dy.cols; ++o) dwi[o] += xi * dyb[o];
        }
        for (int o = 0; o < dy.cols; ++o) db[o] += dyb[o];
    }
}

}  // namespace firma
