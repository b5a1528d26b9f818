// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/geometry.hpp"

#include <cmath>
#include <numbers>

#include "irsisac/error.hpp"

namespace irsisac {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-12;
} // namespace

double distance(const Position& a, const Position& b) noexcept
{
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

double wrap_pi(double angle) noexcept
{
    double w = std::remainder(angle, 2.0 * kPi); // [-pi, pi]
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

DirectionCosines direction_cosines(const Position& from, const Position& to)
{
    const double d = distance(from, to);
    if (!(d > 0.0)) throw Error(ErrorKind::DegenerateGeometry, "coincident points");
    return {(to.y - from.y) / d, (to.z - from.z) / d};
}

DirectionCosines departure_cosines(const Position& from, const Position& to)
{
    return -direction_cosines(from, to);
}

EffectiveAngles to_effective(const DirectionCosines& c, double spacing_over_lambda)
{
    if (!(spacing_over_lambda > 0.0)) throw Error(ErrorKind::InvalidInput, "spacing_over_lambda must be positive");
    const double k = 2.0 * kPi * spacing_over_lambda;
    return {wrap_pi(k * c.cy), wrap_pi(k * c.cz)};
}

DirectionCosines scale_to_cosines(const EffectiveAngles& e, double spacing_over_lambda) noexcept
{
    const double k = 2.0 * kPi * spacing_over_lambda;
    return {e.u / k, e.v / k};
}

DirectionCosines from_effective(const EffectiveAngles& e, double spacing_over_lambda)
{
    if (!(spacing_over_lambda > 0.0)) throw Error(ErrorKind::InvalidInput, "spacing_over_lambda must be positive");
    const double limit = 2.0 * kPi * spacing_over_lambda + kSlack;
    if (std::abs(e.u) > limit || std::abs(e.v) > limit)
        throw Error(ErrorKind::SpatialAliasing, "effective angle outside the unambiguous range");
    const DirectionCosines c = scale_to_cosines(e, spacing_over_lambda);
    if (c.cy * c.cy + c.cz * c.cz > 1.0 + kSlack)
        throw Error(ErrorKind::InvalidDirection, "direction cosines outside the unit disc");
    return c;
}

} // namespace irsisac
