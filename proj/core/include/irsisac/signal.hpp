// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "irsisac/channel.hpp"
#include "irsisac/numerics.hpp"
#include "irsisac/random.hpp"

namespace irsisac {

struct RadioParams {
    double tx_power_mw = 100.0;  ///< rho
    double noise_power_mw = 1e-11; ///< sigma_0^2

    double snr_scale() const noexcept { return tx_power_mw / noise_power_mw; }
};

/// Baseband samples received by one semi-passive sub-IRS over a sensing block.
struct SnapshotBatch {
    int sub_irs_id = 2;
    std::vector<CVector> samples; ///< one length-M_i vector per slot

    std::size_t slots() const noexcept { return samples.size(); }
};

/// Per slot: s ~ CN(0,1) shared by both receivers, then the sub-IRS 2 noise
/// vector, then the sub-IRS 3 noise vector.
std::array<SnapshotBatch, 2> simulate_sensing_snapshots(const ChannelSet& ch, std::span<const cplx> theta1,
                                                        const RadioParams& radio, std::size_t slots,
                                                        RandomStream& rng);

/// w^H H_I2B,1 diag(xi_1) h_U2I,1
cplx effective_gain_isac(std::span<const cplx> w, std::span<const cplx> theta1, const ChannelSet& ch);

/// w^H H_I2B diag(xi) h_U2I over the stacked three-surface channel.
cplx effective_gain_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch);

/// The three per-surface contributions whose sum is effective_gain_pc.
std::array<cplx, 3> per_surface_gains(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch);

double rate_from_gain(cplx gain, const RadioParams& radio) noexcept;

double rate_isac(std::span<const cplx> w, std::span<const cplx> theta1, const ChannelSet& ch,
                 const RadioParams& radio);

double rate_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch, const RadioParams& radio);

/// Empirical mean of |y(t)|^2 over `slots` probe slots with a unit-modulus
/// pilot and BS noise; expectation rho |w^H H Theta h|^2 + sigma_0^2.
double received_power_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch,
                         const RadioParams& radio, std::size_t slots, RandomStream& rng);

/// Stacks the three per-surface beams into one length-M vector.
CVector stack_beams(const std::array<CVector, 3>& beams);

} // namespace irsisac
