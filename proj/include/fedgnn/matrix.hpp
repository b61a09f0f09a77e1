#pragma once

#include <cstddef>
#include <vector>

namespace fedgnn {

// Row-major dense matrix of 64-bit floats.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool same_shape(const Matrix& o) const {
        return rows == o.rows && cols == o.cols;
    }
    bool empty() const { return rows == 0 || cols == 0; }
};

Matrix matmul(const Matrix& a, const Matrix& b);     // a * b
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // a^T * b
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a * b^T

void add_inplace(Matrix& a, const Matrix& b);
void scale_inplace(Matrix& a, double s);
void relu_inplace(Matrix& a);

// Masks grad by activated > 0 (ReLU backward). Returns masked copy.
Matrix relu_mask(const Matrix& activated, const Matrix& grad);

bool all_finite(const Matrix& a);
void require_finite(const Matrix& a, const char* what);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace fedgnn
