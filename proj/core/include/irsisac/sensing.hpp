// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "irsisac/channel.hpp"
#include "irsisac/error.hpp"
#include "irsisac/geometry.hpp"
#include "irsisac/numerics.hpp"
#include "irsisac/signal.hpp"

namespace irsisac {

struct ScenarioConfig;

/// Overlapping q_y x q_z windows of a parent URA, each shifted by one
/// element along y or z. Window m at offset (oy, oz) is enumerated with oz
/// varying fastest.
struct MicroLayout {
    ArraySpec parent{};
    std::size_t q_y = 0;
    std::size_t q_z = 0;
    std::vector<std::vector<std::size_t>> index_maps;

    std::size_t n_micro() const noexcept { return index_maps.size(); }
    std::size_t l_micro() const noexcept { return q_y * q_z; }
    ArraySpec micro_spec() const noexcept { return ArraySpec::ura(q_y, q_z); }
};

MicroLayout build_micro_layout(const ArraySpec& spec, std::size_t q_y, std::size_t q_z);

enum class Axis { Y, Z };

/// 0/1 selection matrices picking the two shifted auxiliary sub-surfaces of
/// the first micro-surface along one axis.
struct AuxSelectors {
    CMatrix j1;
    CMatrix j2;
};

AuxSelectors aux_selectors(const MicroLayout& layout, Axis axis);

/// Forward-backward spatially smoothed covariance of the micro-surface
/// samples, averaged over slots and windows.
CMatrix fbss_covariance(const SnapshotBatch& batch, const MicroLayout& layout);

/// TLS-ESPRIT along one axis from a two-column signal subspace. Returns the
/// two effective angles (unordered). Throws Error(SubspaceDegenerate) when
/// the lower-right eigenvector block is ill-conditioned.
std::array<double, 2> esprit_axis(const CMatrix& signal_subspace, const AuxSelectors& selectors);

struct AxisEstimates {
    std::array<double, 2> u_pair{};
    std::array<double, 2> v_pair{};
};

struct AoaPairing {
    std::array<EffectiveAngles, 2> pairs{};
    std::array<double, 2> music_scores{};
};

/// ||b_micro(u, v)^H U_N||^2
double music_score(double u, double v, const CMatrix& noise_subspace, const MicroLayout& layout);

/// Chooses the perfect matching of u and v estimates with the smaller total
/// MUSIC score. Ties resolve to the identity matching.
AoaPairing music_pair(const AxisEstimates& axes, const CMatrix& noise_subspace, const MicroLayout& layout);

/// Returns the pair farther (in cosine space) from the known surface-to-surface
/// arrival. Throws Error(AmbiguousDisambiguation) on an exact tie.
EffectiveAngles identify_user_pair(const AoaPairing& pairing, const DirectionCosines& known_i2i,
                                   double spacing_over_lambda = kHalfWavelength);

struct LocationEstimate {
    Position position{};
    std::array<DirectionCosines, 2> user_aoas{}; ///< at sub-IRS 2 and 3
    std::array<double, 2> distances{};          ///< user to sub-IRS 2 and 3
    double x_ambiguity_gap = 0.0;
    bool radicand_clamped = false;
};

/// Intersects the two bearings. Inputs are arrival cosines at sub-IRS 2 and
/// 3 pointing towards the user; both surfaces lie in planes of constant x.
LocationEstimate localize(const DirectionCosines& user_cosines_2, const DirectionCosines& user_cosines_3,
                          const Position& q2, const Position& q3);

/// Per-surface diagnostics of one sensing pass.
struct SurfaceSensing {
    AxisEstimates axes;
    AoaPairing pairing;
    EffectiveAngles user_pair;
    DirectionCosines user_cosines;
    std::vector<double> eigenvalues;
};

SurfaceSensing sense_surface(const SnapshotBatch& batch, const MicroLayout& layout,
                             const DirectionCosines& known_i2i, double spacing_over_lambda,
                             const JacobiOptions& eig = {});

/// Result of a sensing attempt; failures carry the error instead of a position.
struct SensingOutcome {
    std::optional<LocationEstimate> estimate;
    std::optional<ErrorKind> failure;
    std::string message;

    bool ok() const noexcept { return estimate.has_value(); }
};

/// Full pipeline for one sensing block. Never throws for estimation
/// failures; they are reported in the outcome.
SensingOutcome sense_location(const SnapshotBatch& batch2, const SnapshotBatch& batch3,
                              const ScenarioConfig& scenario);

} // namespace irsisac
