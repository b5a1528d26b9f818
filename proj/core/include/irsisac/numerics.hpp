// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace irsisac {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix outer(std::span<const cplx> left, std::span<const cplx> right_conj);
    static CMatrix from_columns(std::span<const CVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    CVector column(std::size_t c) const;
    /// Columns [first, first + count).
    CMatrix columns(std::size_t first, std::size_t count) const;
    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    const std::vector<cplx>& entries() const noexcept { return data_; }

    /// Largest entry magnitude.
    double max_abs() const noexcept;
    double frobenius() const noexcept;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx scale) noexcept;

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, std::span<const cplx> x);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);

/// a^H b
cplx vdot(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> x);
CVector hadamard(std::span<const cplx> a, std::span<const cplx> b);
CVector conj(std::span<const cplx> x);
CVector scaled(std::span<const cplx> x, cplx s);
/// Kronecker product; entry i*b.size() + j = a[i]*b[j].
CVector kron(std::span<const cplx> a, std::span<const cplx> b);

struct EigenPair {
    std::vector<double> values; ///< descending
    CMatrix vectors;            ///< column k pairs with values[k]
    int sweeps = 0;
};

struct JacobiOptions {
    /// Stop when off-diagonal Frobenius norm <= tolerance * ||A||_F.
    double tolerance = 1e-14;
    int max_sweeps = 100;
    /// Relative Hermitian-ness required of the input.
    double hermitian_tolerance = 1e-9;

    bool operator==(const JacobiOptions&) const = default;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws Error(InvalidInput) for non-square or non-Hermitian input.
EigenPair hermitian_eig(const CMatrix& a, const JacobiOptions& options = {});

/// Both eigenvalues of a 2x2 matrix, larger magnitude first.
std::array<cplx, 2> eig2x2(const CMatrix& a);

/// 2x2 inverse; throws Error(SubspaceDegenerate) when singular.
CMatrix inverse2x2(const CMatrix& a);

/// Spectral condition number of a 2x2 matrix (infinity if singular).
double condition2x2(const CMatrix& a);

/// Exchange (counter-identity) matrix.
CMatrix exchange_matrix(std::size_t n);

} // namespace irsisac
