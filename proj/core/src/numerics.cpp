// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "irsisac/error.hpp"

namespace irsisac {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::InvalidInput, "entry count " + std::to_string(data_.size()) +
                                                 " does not match " + std::to_string(rows) + "x" +
                                                 std::to_string(cols));
    }
}

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::outer(std::span<const cplx> left, std::span<const cplx> right_conj)
{
    CMatrix m(left.size(), right_conj.size());
    for (std::size_t r = 0; r < left.size(); ++r)
        for (std::size_t c = 0; c < right_conj.size(); ++c) m(r, c) = left[r] * std::conj(right_conj[c]);
    return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns)
{
    if (columns.empty()) return {};
    const std::size_t rows = columns.front().size();
    CMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(ErrorKind::InvalidInput, "ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

CVector CMatrix::column(std::size_t c) const
{
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

CMatrix CMatrix::columns(std::size_t first, std::size_t count) const
{
    return block(0, first, rows_, count);
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::InvalidInput, "block out of range");
    CMatrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::transpose() const
{
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CMatrix CMatrix::conj() const
{
    CMatrix m = *this;
    for (auto& z : m.data_) z = std::conj(z);
    return m;
}

double CMatrix::max_abs() const noexcept
{
    double best = 0.0;
    for (const auto& z : data_) best = std::max(best, std::abs(z));
    return best;
}

double CMatrix::frobenius() const noexcept
{
    double acc = 0.0;
    for (const auto& z : data_) acc += std::norm(z);
    return std::sqrt(acc);
}

CMatrix& CMatrix::operator+=(const CMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::InvalidInput, "shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::InvalidInput, "shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scale) noexcept
{
    for (auto& z : data_) z *= scale;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "shape mismatch in *");
    CMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

CVector operator*(const CMatrix& a, std::span<const cplx> x)
{
    if (a.cols() != x.size()) throw Error(ErrorKind::InvalidInput, "shape mismatch in matrix-vector *");
    CVector y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto row = a.row(r);
        y[r] = std::inner_product(row.begin(), row.end(), x.begin(), cplx{});
    }
    return y;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

cplx vdot(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "length mismatch in vdot");
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(std::span<const cplx> x)
{
    double acc = 0.0;
    for (const auto& z : x) acc += std::norm(z);
    return std::sqrt(acc);
}

CVector hadamard(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "length mismatch in hadamard");
    CVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

CVector conj(std::span<const cplx> x)
{
    CVector out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [](cplx z) { return std::conj(z); });
    return out;
}

CVector scaled(std::span<const cplx> x, cplx s)
{
    CVector out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [s](cplx z) { return s * z; });
    return out;
}

CVector kron(std::span<const cplx> a, std::span<const cplx> b)
{
    CVector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

namespace {

double off_diagonal_norm(const CMatrix& a)
{
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) acc += std::norm(a(r, c));
    return std::sqrt(acc);
}

// Annihilates a(p, q) with G = diag(e^{i phi}, 1) * [[c, s], [-s, c]], where
// a(p, q) = |a(p, q)| e^{i phi}. A <- G^H A G and V <- V G.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q)
{
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const cplx g00 = phase * c;
    const cplx g01 = phase * s;
    const cplx g10 = -s;
    const cplx g11 = c;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * g00 + akq * g10;
        a(k, q) = akp * g01 + akq * g11;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
        a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * g00 + vkq * g10;
        v(k, q) = vkp * g01 + vkq * g11;
    }
}

} // namespace

EigenPair hermitian_eig(const CMatrix& input, const JacobiOptions& options)
{
    if (!input.is_square()) throw Error(ErrorKind::InvalidInput, "hermitian_eig requires a square matrix");
    const std::size_t n = input.rows();
    const double scale = input.max_abs();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c)
            if (std::abs(input(r, c) - std::conj(input(c, r))) > options.hermitian_tolerance * scale)
                throw Error(ErrorKind::InvalidInput, "hermitian_eig requires a Hermitian matrix");

    // Work on the exactly-Hermitian part.
    CMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

    CMatrix v = CMatrix::identity(n);
    const double threshold = options.tolerance * a.frobenius();

    int sweep = 0;
    while (sweep < options.max_sweeps && off_diagonal_norm(a) > threshold) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenPair out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::array<cplx, 2> eig2x2(const CMatrix& a)
{
    if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::InvalidInput, "eig2x2 requires a 2x2 matrix");
    const cplx half_trace = 0.5 * (a(0, 0) + a(1, 1));
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    cplx root = std::sqrt(half_trace * half_trace - det);
    // Pick the sign that avoids cancellation in the larger root.
    if (std::real(std::conj(half_trace) * root) < 0.0) root = -root;
    const cplx first = half_trace + root;
    if (first == cplx{}) return {cplx{}, cplx{}};
    return {first, det / first};
}

CMatrix inverse2x2(const CMatrix& a)
{
    if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::InvalidInput, "inverse2x2 requires a 2x2 matrix");
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (det == cplx{}) throw Error(ErrorKind::SubspaceDegenerate, "singular 2x2 matrix");
    CMatrix inv(2, 2);
    inv(0, 0) = a(1, 1) / det;
    inv(0, 1) = -a(0, 1) / det;
    inv(1, 0) = -a(1, 0) / det;
    inv(1, 1) = a(0, 0) / det;
    return inv;
}

double condition2x2(const CMatrix& a)
{
    if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::InvalidInput, "condition2x2 requires a 2x2 matrix");
    // Singular values from the Gram matrix G = A^H A.
    const CMatrix g = a.adjoint() * a;
    const double p = g(0, 0).real();
    const double q = g(1, 1).real();
    const double off = std::abs(g(0, 1));
    const double mean = 0.5 * (p + q);
    const double spread = std::hypot(0.5 * (p - q), off);
    const double big = mean + spread;
    // det(G) = |det A|^2 gives the small eigenvalue without cancellation.
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double small = big > 0.0 ? std::norm(det) / big : 0.0;
    if (small <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(big / small);
}

CMatrix exchange_matrix(std::size_t n)
{
    CMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return j;
}

} // namespace irsisac
