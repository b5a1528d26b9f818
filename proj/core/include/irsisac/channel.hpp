// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <cstddef>

#include "irsisac/geometry.hpp"
#include "irsisac/numerics.hpp"
#include "irsisac/random.hpp"

namespace irsisac {

struct ScenarioConfig;

enum class ArrayKind { UlaY, UraYZ };

struct ArraySpec {
    ArrayKind kind = ArrayKind::UraYZ;
    std::size_t n_y = 1;
    std::size_t n_z = 1;

    static ArraySpec ula(std::size_t n) { return {ArrayKind::UlaY, n, 1}; }
    static ArraySpec ura(std::size_t n_y, std::size_t n_z) { return {ArrayKind::UraYZ, n_y, n_z}; }

    std::size_t size() const noexcept { return n_y * n_z; }
    bool operator==(const ArraySpec&) const = default;
};

/// Log-distance loss referenced to 1 m.
struct PathGainModel {
    double ref_loss_db = 30.0;
    double exponent = 2.0;

    bool operator==(const PathGainModel&) const = default;
};

/// [1, e^{ju}, ..., e^{j(n-1)u}]
CVector ula_response(double u, std::size_t n);

/// y-axis response (kron) z-axis response; element index iy * n_z + iz.
CVector ura_response(double u, double v, const ArraySpec& spec);
CVector ura_response(const EffectiveAngles& angles, const ArraySpec& spec);

/// Linear amplitude of the path loss at distance d.
double path_amplitude(double d, const PathGainModel& model);

/// Complex gain with loss-model magnitude and a uniform random phase.
/// Throws Error(InvalidInput) for d <= 0.
cplx path_gain(double d, const PathGainModel& model, RandomStream& rng);

/// Synthesised LoS channels. Index 0..2 refers to sub-IRS 1..3; the
/// surface-to-surface arrays hold sub-IRS 2 and 3 at index 0 and 1.
struct ChannelSet {
    std::size_t n_bs = 0;
    std::array<ArraySpec, 3> arrays{};

    std::array<CMatrix, 3> h_i2b; ///< N x M_i
    std::array<CVector, 3> h_u2i; ///< M_i
    std::array<CMatrix, 2> h_i2i; ///< M_i x M_1

    struct Angles {
        std::array<double, 3> bs_arrival{};           ///< u at the BS ULA
        std::array<EffectiveAngles, 3> i2b_departure{};
        std::array<EffectiveAngles, 3> user_arrival{};
        std::array<EffectiveAngles, 2> i2i_arrival{};   ///< at sub-IRS 2, 3
        std::array<EffectiveAngles, 2> i2i_departure{}; ///< at sub-IRS 1
    } true_angles;

    struct Gains {
        std::array<cplx, 3> i2b{};
        std::array<cplx, 3> u2i{};
        std::array<cplx, 2> i2i{};
    } gains;

    std::size_t total_elements() const noexcept
    {
        return arrays[0].size() + arrays[1].size() + arrays[2].size();
    }
};

/// Builds every channel from scenario positions. Gains are drawn in the
/// order i2b[1..3], u2i[1..3], i2i[2..3].
ChannelSet synth_channels(const ScenarioConfig& scenario, RandomStream& rng);

} // namespace irsisac
