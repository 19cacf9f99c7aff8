#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace xmd {

using Vec = std::vector<double>;

// Dense row-major matrix. All reductions over it run in fixed index order so
// repeated runs are bit-identical.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }

    Vec row_vec(std::size_t i) const {
        return Vec(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                   data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    void set_row(std::size_t i, std::span<const double> v) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
    }
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double squared_distance(std::span<const double> a, std::span<const double> b);

// Returns v scaled to unit Euclidean norm. Throws ZeroVectorError when the
// norm falls below 1e-12.
Vec l2_normalize(const Vec& v);

// In-place variant for matrix rows.
void l2_normalize_row(Matrix& m, std::size_t i);

// S[i,j] = dot(A_i, B_j) for unit rows. Throws DimMismatchError when the
// feature dimensions differ.
Matrix cosine_sim_matrix(const Matrix& a, const Matrix& b);

// Temperature softmax: p_k proportional to exp(scores_k / sigma), computed
// with max-subtraction. sigma must be positive.
Vec softmax_temp(std::span<const double> scores, double sigma);

// Gaussian kernel exp(-||x-y||^2 / (2 h^2)).
double rbf_kernel(std::span<const double> x, std::span<const double> y, double h);

}  // namespace xmd
