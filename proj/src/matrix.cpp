#include "fedgnn/matrix.hpp"

#include <cmath>
#include <string>

#include "fedgnn/errors.hpp"

namespace fedgnn {

namespace {

void check_mul(std::size_t ak, std::size_t bk, const char* what) {
    if (ak != bk) {
        throw ShapeError(std::string(what) + ": inner dimensions " +
                         std::to_string(ak) + " vs " + std::to_string(bk));
    }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_mul(a.cols, b.rows, "matmul");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    check_mul(a.rows, b.rows, "matmul_tn");
    Matrix out(a.cols, b.cols);
    for (std::size_t k = 0; k < a.rows; ++k) {
        const double* arow = a.row(k);
        const double* brow = b.row(k);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double aki = arow[i];
            if (aki == 0.0) continue;
            double* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aki * brow[j];
        }
    }
    return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    check_mul(a.cols, b.cols, "matmul_nt");
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* brow = b.row(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) acc += arow[k] * brow[k];
            orow[j] = acc;
        }
    }
    return out;
}

void add_inplace(Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeError("add_inplace: shape mismatch");
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
}

void scale_inplace(Matrix& a, double s) {
    for (double& x : a.data) x *= s;
}

void relu_inplace(Matrix& a) {
    for (double& x : a.data) {
        if (x < 0.0) x = 0.0;
    }
}

Matrix relu_mask(const Matrix& activated, const Matrix& grad) {
    if (!activated.same_shape(grad)) throw ShapeError("relu_mask: shape mismatch");
    Matrix out = grad;
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        if (activated.data[i] <= 0.0) out.data[i] = 0.0;
    }
    return out;
}

bool all_finite(const Matrix& a) {
    for (double x : a.data) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void require_finite(const Matrix& a, const char* what) {
    if (!all_finite(a)) {
        throw NumericError(std::string(what) + ": non-finite entries");
    }
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        double d = std::fabs(a.data[i] - b.data[i]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace fedgnn
