// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irsisac/error.hpp"
#include "irsisac/numerics.hpp"
#include "support.hpp"

using namespace irsisac;
using Catch::Matchers::WithinAbs;

namespace {

// Characteristic polynomial coefficients by Faddeev-LeVerrier, then real
// roots by bracketing on a fine grid and bisection.
std::vector<double> charpoly_roots(const CMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<cplx> coeff(n + 1);
    coeff[n] = 1.0;
    CMatrix m = CMatrix::identity(n);
    CMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * m;
        cplx tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        coeff[n - k] = -tr / static_cast<double>(k);
        m = mk;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += coeff[n - k];
    }
    auto p = [&](double x) {
        double acc = 0.0;
        for (std::size_t k = n + 1; k-- > 0;) acc = acc * x + coeff[k].real();
        return acc;
    };
    const double bound = a.frobenius() + 1.0;
    const int steps = 200000;
    std::vector<double> roots;
    double x0 = -bound;
    double p0 = p(x0);
    for (int s = 1; s <= steps; ++s) {
        const double x1 = -bound + 2.0 * bound * s / steps;
        const double p1 = p(x1);
        if (p0 == 0.0) roots.push_back(x0);
        else if (p0 * p1 < 0.0) {
            double lo = x0;
            double hi = x1;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (p(lo) * p(mid) <= 0.0) hi = mid;
                else lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        p0 = p1;
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

CMatrix gram(std::size_t n, RandomStream& rng)
{
    const CMatrix b = testing::random_matrix(n, n, rng);
    return b.adjoint() * b;
}

} // namespace

TEST_CASE("identity has unit eigenvalues and orthonormal vectors")
{
    const EigenPair e = hermitian_eig(CMatrix::identity(3));
    for (double v : e.values) CHECK_THAT(v, WithinAbs(1.0, 1e-15));
    const CMatrix g = e.vectors.adjoint() * e.vectors;
    CHECK((g - CMatrix::identity(3)).max_abs() < 1e-14);
}

TEST_CASE("classic real symmetric 2x2")
{
    const CMatrix a(2, 2, {2.0, 1.0, 1.0, 2.0});
    const EigenPair e = hermitian_eig(a);
    CHECK_THAT(e.values[0], WithinAbs(3.0, 1e-14));
    CHECK_THAT(e.values[1], WithinAbs(1.0, 1e-14));
    const double r = 1.0 / std::sqrt(2.0);
    // eigenvectors are defined up to a unit phase
    CHECK_THAT(std::abs(vdot(e.vectors.column(0), CVector{r, r})), WithinAbs(1.0, 1e-14));
    CHECK_THAT(std::abs(vdot(e.vectors.column(1), CVector{r, -r})), WithinAbs(1.0, 1e-14));
}

TEST_CASE("4x4 Gram spectrum matches characteristic polynomial roots")
{
    RandomStream rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix a = gram(4, rng);
        const EigenPair e = hermitian_eig(a);
        const auto roots = charpoly_roots(a);
        REQUIRE(roots.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(e.values[k], WithinAbs(roots[k], 1e-9 * roots[0]));
    }
}

TEST_CASE("9x9 Gram matrix: reconstruction and singular values")
{
    RandomStream rng(7);
    const CMatrix b = testing::random_matrix(9, 9, rng);
    const CMatrix a = b.adjoint() * b;
    const EigenPair e = hermitian_eig(a);

    CMatrix lambda(9, 9);
    for (std::size_t k = 0; k < 9; ++k) lambda(k, k) = e.values[k];
    const CMatrix rebuilt = e.vectors * lambda * e.vectors.adjoint();
    CHECK((rebuilt - a).max_abs() <= 1e-10);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(testing::to_eigen(b));
    const auto sv = svd.singularValues();
    for (std::size_t k = 0; k < 9; ++k)
        CHECK_THAT(e.values[k], WithinAbs(sv(static_cast<Eigen::Index>(k)) * sv(static_cast<Eigen::Index>(k)), 1e-9));
}

TEST_CASE("16x16 Hermitian agrees with an independent solver")
{
    RandomStream rng(99);
    const CMatrix a = gram(16, rng);
    const EigenPair e = hermitian_eig(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(testing::to_eigen(a));
    for (std::size_t k = 0; k < 16; ++k)
        CHECK_THAT(e.values[k], WithinAbs(ref.eigenvalues()(15 - static_cast<Eigen::Index>(k)), 1e-9));
    CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
}

TEST_CASE("eigensolver rejects bad input")
{
    CHECK_THROWS_AS(hermitian_eig(CMatrix(2, 3)), Error);
    const CMatrix skew(2, 2, {0.0, 1.0, -1.0, 0.0});
    CHECK_THROWS_AS(hermitian_eig(skew), Error);
}

TEST_CASE("eig2x2 examples")
{
    using namespace std::complex_literals;
    auto sorted = [](std::array<cplx, 2> v) {
        std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.imag() < b.imag() || (a.imag() == b.imag() && a.real() < b.real()); });
        return v;
    };
    const auto d = sorted(eig2x2(CMatrix(2, 2, {1i, 0.0, 0.0, 2.0})));
    CHECK(std::abs(d[0] - cplx(2.0)) < 1e-15);
    CHECK(std::abs(d[1] - 1i) < 1e-15);

    const auto z = eig2x2(CMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}));
    CHECK(std::abs(z[0]) < 1e-15);
    CHECK(std::abs(z[1]) < 1e-15);

    const cplx r1 = std::polar(1.0, 0.3);
    const cplx r2 = std::polar(1.0, 1.1);
    const CMatrix companion(2, 2, {r1 + r2, -r1 * r2, 1.0, 0.0});
    const auto c = eig2x2(companion);
    const bool direct = std::abs(c[0] - r1) < 1e-12 && std::abs(c[1] - r2) < 1e-12;
    const bool swapped = std::abs(c[0] - r2) < 1e-12 && std::abs(c[1] - r1) < 1e-12;
    CHECK((direct || swapped));
}

TEST_CASE("eig2x2 agrees with an independent solver on random matrices")
{
    RandomStream rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const CMatrix a = testing::random_matrix(2, 2, rng);
        auto ours = eig2x2(a);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ref(testing::to_eigen(a));
        const cplx e0 = ref.eigenvalues()(0);
        const cplx e1 = ref.eigenvalues()(1);
        const double straight = std::abs(ours[0] - e0) + std::abs(ours[1] - e1);
        const double crossed = std::abs(ours[0] - e1) + std::abs(ours[1] - e0);
        CHECK(std::min(straight, crossed) < 1e-12);
    }
}

TEST_CASE("exchange matrix")
{
    CHECK(exchange_matrix(1) == CMatrix(1, 1, {1.0}));
    CHECK(exchange_matrix(2) == CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
    for (std::size_t n : {3u, 7u, 16u}) {
        const CMatrix j = exchange_matrix(n);
        CHECK(j * j == CMatrix::identity(n));
    }
}

TEST_CASE("2x2 inverse and condition number")
{
    const CMatrix a(2, 2, {4.0, 7.0, 2.0, 6.0});
    const CMatrix prod = a * inverse2x2(a);
    CHECK((prod - CMatrix::identity(2)).max_abs() < 1e-14);
    CHECK_THAT(condition2x2(CMatrix(2, 2, {3.0, 0.0, 0.0, 1.0})), WithinAbs(3.0, 1e-12));
    CHECK_THROWS_AS(inverse2x2(CMatrix(2, 2, {1.0, 2.0, 2.0, 4.0})), Error);
}

TEST_CASE("kron ordering")
{
    const CVector k = kron(CVector{1.0, 2.0}, CVector{1.0, 10.0});
    CHECK(k == CVector{1.0, 10.0, 2.0, 20.0});
}
