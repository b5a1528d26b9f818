// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <Eigen/Dense>

#include "irsisac/numerics.hpp"
#include "irsisac/random.hpp"

namespace irsisac::testing {

inline Eigen::MatrixXcd to_eigen(const CMatrix& a)
{
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    return m;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, RandomStream& rng)
{
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
    return m;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace irsisac::testing
