#ifndef RELAYNET_MATRIX_HPP
#define RELAYNET_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace relaynet {

// Dense row-major matrix of doubles, just big enough for per-hop gain tables.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

} // namespace relaynet

#endif
