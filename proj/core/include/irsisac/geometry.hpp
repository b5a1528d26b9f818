// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

namespace irsisac {

/// Point in the room frame, metres. Surfaces lie in planes of constant x.
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b) noexcept;

/// Components of a unit direction along the array y and z axes.
struct DirectionCosines {
    double cy = 0.0;
    double cz = 0.0;

    DirectionCosines operator-() const noexcept { return {-cy, -cz}; }
    bool operator==(const DirectionCosines&) const = default;
};

/// Inter-element phase progression along y (u) and z (v), radians.
struct EffectiveAngles {
    double u = 0.0;
    double v = 0.0;

    bool operator==(const EffectiveAngles&) const = default;
};

inline constexpr double kHalfWavelength = 0.5;

/// Wraps to (-pi, pi].
double wrap_pi(double angle) noexcept;

/// Cosines of the direction from `from` towards `to`; this is the arrival
/// direction seen at `from` for a wave emitted at `to`. Departure cosines
/// from `from` towards `to` are the negation.
/// Throws Error(DegenerateGeometry) for coincident points.
DirectionCosines direction_cosines(const Position& from, const Position& to);

/// Departure cosines at `from` for a link heading to `to`.
DirectionCosines departure_cosines(const Position& from, const Position& to);

EffectiveAngles to_effective(const DirectionCosines& c, double spacing_over_lambda = kHalfWavelength);

/// Inverse of to_effective. Throws Error(SpatialAliasing) when an angle lies
/// outside the unambiguous range and Error(InvalidDirection) when the
/// resulting cosines leave the unit disc.
DirectionCosines from_effective(const EffectiveAngles& e, double spacing_over_lambda = kHalfWavelength);

/// Plain rescaling to cosine units with no range checks.
DirectionCosines scale_to_cosines(const EffectiveAngles& e, double spacing_over_lambda = kHalfWavelength) noexcept;

} // namespace irsisac
