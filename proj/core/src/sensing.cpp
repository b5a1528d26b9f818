// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "irsisac/scenario.hpp"

namespace irsisac {

namespace {
constexpr double kMaxCondition = 1e12;
constexpr double kTieTolerance = 1e-12;
constexpr double kParallelTolerance = 1e-12;
} // namespace

MicroLayout build_micro_layout(const ArraySpec& spec, std::size_t q_y, std::size_t q_z)
{
    if (q_y < 2 || q_y > spec.n_y || q_z < 2 || q_z > spec.n_z)
        throw Error(ErrorKind::InvalidConfig, "micro-surface size must satisfy 2 <= q <= n on both axes");
    MicroLayout layout;
    layout.parent = spec;
    layout.q_y = q_y;
    layout.q_z = q_z;
    for (std::size_t oy = 0; oy + q_y <= spec.n_y; ++oy)
        for (std::size_t oz = 0; oz + q_z <= spec.n_z; ++oz) {
            std::vector<std::size_t> map;
            map.reserve(q_y * q_z);
            for (std::size_t iy = 0; iy < q_y; ++iy)
                for (std::size_t iz = 0; iz < q_z; ++iz) map.push_back((oy + iy) * spec.n_z + (oz + iz));
            layout.index_maps.push_back(std::move(map));
        }
    return layout;
}

AuxSelectors aux_selectors(const MicroLayout& layout, Axis axis)
{
    const std::size_t qy = layout.q_y;
    const std::size_t qz = layout.q_z;
    if ((axis == Axis::Y && qy < 2) || (axis == Axis::Z && qz < 2))
        throw Error(ErrorKind::InvalidConfig, "auxiliary sub-surfaces need at least two elements along the axis");

    const std::size_t rows_y = axis == Axis::Y ? qy - 1 : qy;
    const std::size_t rows_z = axis == Axis::Z ? qz - 1 : qz;
    AuxSelectors sel{CMatrix(rows_y * rows_z, qy * qz), CMatrix(rows_y * rows_z, qy * qz)};
    std::size_t row = 0;
    for (std::size_t iy = 0; iy < rows_y; ++iy)
        for (std::size_t iz = 0; iz < rows_z; ++iz, ++row) {
            const std::size_t first = iy * qz + iz;
            const std::size_t second = axis == Axis::Y ? (iy + 1) * qz + iz : iy * qz + iz + 1;
            sel.j1(row, first) = 1.0;
            sel.j2(row, second) = 1.0;
        }
    return sel;
}

CMatrix fbss_covariance(const SnapshotBatch& batch, const MicroLayout& layout)
{
    if (batch.samples.empty()) throw Error(ErrorKind::InvalidInput, "empty snapshot batch");
    const std::size_t l = layout.l_micro();
    CMatrix forward(l, l);
    for (const auto& x : batch.samples) {
        if (x.size() != layout.parent.size())
            throw Error(ErrorKind::InvalidInput, "snapshot length does not match the micro-surface layout");
        for (const auto& map : layout.index_maps)
            for (std::size_t r = 0; r < l; ++r) {
                const cplx xr = x[map[r]];
                for (std::size_t c = 0; c < l; ++c) forward(r, c) += xr * std::conj(x[map[c]]);
            }
    }
    // sum_t,m J x* x^T J = J conj(sum_t,m x x^H) J, i.e. entry (r, c) of the
    // backward term is conj(F(l-1-r, l-1-c)).
    CMatrix r(l, l);
    const double scale = 1.0 / (2.0 * static_cast<double>(batch.slots()) * static_cast<double>(layout.n_micro()));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            r(i, j) = scale * (forward(i, j) + std::conj(forward(l - 1 - i, l - 1 - j)));
    return r;
}

std::array<double, 2> esprit_axis(const CMatrix& signal_subspace, const AuxSelectors& selectors)
{
    if (signal_subspace.cols() != 2) throw Error(ErrorKind::InvalidInput, "signal subspace must have two columns");
    const CMatrix u1 = selectors.j1 * signal_subspace;
    const CMatrix u2 = selectors.j2 * signal_subspace;

    CMatrix stacked(u1.rows(), 4);
    for (std::size_t r = 0; r < u1.rows(); ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            stacked(r, c) = u1(r, c);
            stacked(r, c + 2) = u2(r, c);
        }
    const CMatrix c = stacked.adjoint() * stacked;
    const EigenPair eig = hermitian_eig(c);

    const CMatrix v12 = eig.vectors.block(0, 2, 2, 2);
    const CMatrix v22 = eig.vectors.block(2, 2, 2, 2);
    if (!(condition2x2(v22) <= kMaxCondition))
        throw Error(ErrorKind::SubspaceDegenerate, "ill-conditioned TLS block");
    const CMatrix phi = cplx{-1.0} * (v12 * inverse2x2(v22));
    const auto lambdas = eig2x2(phi);
    return {std::arg(lambdas[0]), std::arg(lambdas[1])};
}

double music_score(double u, double v, const CMatrix& noise_subspace, const MicroLayout& layout)
{
    const CVector b = ura_response(u, v, layout.micro_spec());
    double acc = 0.0;
    for (std::size_t k = 0; k < noise_subspace.cols(); ++k) {
        cplx proj{};
        for (std::size_t r = 0; r < b.size(); ++r) proj += std::conj(b[r]) * noise_subspace(r, k);
        acc += std::norm(proj);
    }
    return acc;
}

AoaPairing music_pair(const AxisEstimates& axes, const CMatrix& noise_subspace, const MicroLayout& layout)
{
    std::array<std::array<double, 2>, 2> f{};
    for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t s = 0; s < 2; ++s) f[l][s] = music_score(axes.u_pair[l], axes.v_pair[s], noise_subspace, layout);

    const double straight = f[0][0] + f[1][1];
    const double crossed = f[0][1] + f[1][0];
    AoaPairing out;
    if (straight <= crossed) {
        out.pairs = {EffectiveAngles{axes.u_pair[0], axes.v_pair[0]}, EffectiveAngles{axes.u_pair[1], axes.v_pair[1]}};
        out.music_scores = {f[0][0], f[1][1]};
    } else {
        out.pairs = {EffectiveAngles{axes.u_pair[0], axes.v_pair[1]}, EffectiveAngles{axes.u_pair[1], axes.v_pair[0]}};
        out.music_scores = {f[0][1], f[1][0]};
    }
    return out;
}

EffectiveAngles identify_user_pair(const AoaPairing& pairing, const DirectionCosines& known_i2i,
                                   double spacing_over_lambda)
{
    std::array<double, 2> dist{};
    for (std::size_t l = 0; l < 2; ++l) {
        const DirectionCosines c = scale_to_cosines(pairing.pairs[l], spacing_over_lambda);
        dist[l] = std::hypot(c.cy - known_i2i.cy, c.cz - known_i2i.cz);
    }
    if (std::abs(dist[0] - dist[1]) <= kTieTolerance)
        throw Error(ErrorKind::AmbiguousDisambiguation, "both AoA pairs are equidistant from the known interference");
    return dist[0] > dist[1] ? pairing.pairs[0] : pairing.pairs[1];
}

LocationEstimate localize(const DirectionCosines& user_cosines_2, const DirectionCosines& user_cosines_3,
                          const Position& q2, const Position& q3)
{
    // Bearing components measured from the user towards each surface.
    const double u2 = -user_cosines_2.cy;
    const double v2 = -user_cosines_2.cz;
    const double u3 = -user_cosines_3.cy;
    const double v3 = -user_cosines_3.cz;

    const double denom = u3 * v2 - u2 * v3;
    if (std::abs(denom) <= kParallelTolerance)
        throw Error(ErrorKind::ParallelBearings, "bearings from the two surfaces are parallel");

    LocationEstimate est;
    const double d2 = (u3 * (q2.z - q3.z) - v3 * (q2.y - q3.y)) / denom;
    const double d3 = (u2 * (q3.z - q2.z) - v2 * (q3.y - q2.y)) / (u2 * v3 - u3 * v2);
    if (!(d2 > 0.0) || !(d3 > 0.0))
        throw Error(ErrorKind::InconsistentGeometry, "estimated user distance is not positive");

    const double y = q2.y - u2 * d2;
    const double z = q2.z - v2 * d2;

    auto x_offset = [&](double d, const Position& q) {
        const double radicand = d * d - (y - q.y) * (y - q.y) - (z - q.z) * (z - q.z);
        if (radicand < 0.0) {
            est.radicand_clamped = true;
            return 0.0;
        }
        return std::sqrt(radicand);
    };
    const double dx2 = x_offset(d2, q2);
    const double dx3 = x_offset(d3, q3);

    const std::array<double, 2> omega2{q2.x + dx2, q2.x - dx2};
    const std::array<double, 2> omega3{q3.x + dx3, q3.x - dx3};
    double best_gap = std::numeric_limits<double>::infinity();
    for (double a : omega2)
        for (double b : omega3) best_gap = std::min(best_gap, std::abs(a - b));
    // Among (near-)minimal candidates prefer the half-space in front of the surfaces.
    double x = omega2[1];
    bool found = false;
    for (double a : omega2) {
        for (double b : omega3)
            if (std::abs(a - b) <= best_gap + kTieTolerance * (1.0 + best_gap)) {
                x = a;
                found = true;
                break;
            }
        if (found) break;
    }

    est.position = {x, y, z};
    est.user_aoas = {user_cosines_2, user_cosines_3};
    est.distances = {d2, d3};
    est.x_ambiguity_gap = best_gap;
    return est;
}

SurfaceSensing sense_surface(const SnapshotBatch& batch, const MicroLayout& layout,
                             const DirectionCosines& known_i2i, double spacing_over_lambda,
                             const JacobiOptions& eig_options)
{
    SurfaceSensing out;
    const CMatrix r = fbss_covariance(batch, layout);
    const EigenPair eig = hermitian_eig(r, eig_options);
    out.eigenvalues = eig.values;

    const std::size_t l = layout.l_micro();
    const CMatrix signal = eig.vectors.columns(0, 2);
    const CMatrix noise = eig.vectors.columns(2, l - 2);

    out.axes.u_pair = esprit_axis(signal, aux_selectors(layout, Axis::Y));
    out.axes.v_pair = esprit_axis(signal, aux_selectors(layout, Axis::Z));
    out.pairing = music_pair(out.axes, noise, layout);
    out.user_pair = identify_user_pair(out.pairing, known_i2i, spacing_over_lambda);
    out.user_cosines = from_effective(out.user_pair, spacing_over_lambda);
    return out;
}

SensingOutcome sense_location(const SnapshotBatch& batch2, const SnapshotBatch& batch3,
                              const ScenarioConfig& scenario)
{
    SensingOutcome outcome;
    try {
        std::array<DirectionCosines, 2> cosines{};
        const std::array<const SnapshotBatch*, 2> batches{&batch2, &batch3};
        for (std::size_t k = 0; k < 2; ++k) {
            const std::size_t surface = k + 1;
            const MicroLayout layout = build_micro_layout(scenario.irs_arrays[surface], scenario.micro_qy_for(surface),
                                                          scenario.micro_qz_for(surface));
            const DirectionCosines known = direction_cosines(scenario.irs[surface], scenario.irs[0]);
            cosines[k] =
                sense_surface(*batches[k], layout, known, scenario.spacing_over_lambda, scenario.eig).user_cosines;
        }
        outcome.estimate = localize(cosines[0], cosines[1], scenario.irs[1], scenario.irs[2]);
    } catch (const Error& e) {
        outcome.failure = e.kind();
        outcome.message = e.what();
    }
    return outcome;
}

} // namespace irsisac
