#include "xmd/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xmd/errors.hpp"

namespace xmd {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Vec l2_normalize(const Vec& v) {
    const double n = norm2(v);
    if (n < 1e-12) throw ZeroVectorError("l2_normalize: vector norm below 1e-12");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

void l2_normalize_row(Matrix& m, std::size_t i) {
    auto r = m.row(i);
    const double n = norm2(r);
    if (n < 1e-12) throw ZeroVectorError("l2_normalize_row: row norm below 1e-12");
    for (auto& x : r) x /= n;
}

Matrix cosine_sim_matrix(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols)
        throw DimMismatchError("cosine_sim_matrix: feature dims differ");
    Matrix s(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.rows; ++j)
            s.at(i, j) = dot(a.row(i), b.row(j));
    return s;
}

Vec softmax_temp(std::span<const double> scores, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("softmax_temp: sigma must be > 0");
    const std::size_t k = scores.size();
    Vec out(k);
    double mx = -std::numeric_limits<double>::infinity();
    for (double s : scores) mx = std::max(mx, s / sigma);
    double z = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = std::exp(scores[i] / sigma - mx);
        z += out[i];
    }
    for (auto& x : out) x /= z;
    return out;
}

double rbf_kernel(std::span<const double> x, std::span<const double> y, double h) {
    return std::exp(-squared_distance(x, y) / (2.0 * h * h));
}

}  // namespace xmd
