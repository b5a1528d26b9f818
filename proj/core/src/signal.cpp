// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/signal.hpp"

#include <cmath>

#include "irsisac/error.hpp"

namespace irsisac {

namespace {

std::size_t offset_of(const ChannelSet& ch, std::size_t surface)
{
    std::size_t offset = 0;
    for (std::size_t i = 0; i < surface; ++i) offset += ch.arrays[i].size();
    return offset;
}

// w^H H diag(xi) h for one surface.
cplx surface_gain(std::span<const cplx> w, const CMatrix& h_i2b, std::span<const cplx> xi, std::span<const cplx> h_u2i)
{
    const CVector reflected = hadamard(xi, h_u2i);
    const CVector at_bs = h_i2b * std::span<const cplx>(reflected);
    return vdot(w, at_bs);
}

} // namespace

std::array<SnapshotBatch, 2> simulate_sensing_snapshots(const ChannelSet& ch, std::span<const cplx> theta1,
                                                        const RadioParams& radio, std::size_t slots,
                                                        RandomStream& rng)
{
    if (theta1.size() != ch.arrays[0].size())
        throw Error(ErrorKind::InvalidInput, "passive beam length does not match sub-IRS 1");
    if (slots < 1) throw Error(ErrorKind::InvalidInput, "at least one sensing slot is required");

    // Deterministic part of x_i(t) / (sqrt(rho) s(t)).
    const CVector reflected = hadamard(theta1, ch.h_u2i[0]);
    std::array<CVector, 2> mix;
    for (std::size_t k = 0; k < 2; ++k) {
        mix[k] = ch.h_i2i[k] * std::span<const cplx>(reflected);
        for (std::size_t m = 0; m < mix[k].size(); ++m) mix[k][m] += ch.h_u2i[k + 1][m];
    }

    const double amp = std::sqrt(radio.tx_power_mw);
    std::array<SnapshotBatch, 2> out;
    out[0].sub_irs_id = 2;
    out[1].sub_irs_id = 3;
    for (auto& b : out) b.samples.reserve(slots);

    for (std::size_t t = 0; t < slots; ++t) {
        const cplx s = rng.complex_normal(1.0);
        for (std::size_t k = 0; k < 2; ++k) {
            CVector x(mix[k].size());
            for (std::size_t m = 0; m < x.size(); ++m)
                x[m] = amp * mix[k][m] * s + rng.complex_normal(radio.noise_power_mw);
            out[k].samples.push_back(std::move(x));
        }
    }
    return out;
}

cplx effective_gain_isac(std::span<const cplx> w, std::span<const cplx> theta1, const ChannelSet& ch)
{
    if (theta1.size() != ch.arrays[0].size())
        throw Error(ErrorKind::InvalidInput, "passive beam length does not match sub-IRS 1");
    return surface_gain(w, ch.h_i2b[0], theta1, ch.h_u2i[0]);
}

std::array<cplx, 3> per_surface_gains(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch)
{
    if (xi.size() != ch.total_elements()) throw Error(ErrorKind::InvalidInput, "beam length does not match the IRS");
    std::array<cplx, 3> g{};
    for (std::size_t i = 0; i < 3; ++i)
        g[i] = surface_gain(w, ch.h_i2b[i], xi.subspan(offset_of(ch, i), ch.arrays[i].size()), ch.h_u2i[i]);
    return g;
}

cplx effective_gain_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch)
{
    if (xi.size() != ch.total_elements()) throw Error(ErrorKind::InvalidInput, "beam length does not match the IRS");
    // Direct evaluation over the concatenated channel [H_1 H_2 H_3] diag(xi) [h_1; h_2; h_3].
    CVector at_bs(ch.n_bs);
    std::size_t col = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t m = 0; m < ch.arrays[i].size(); ++m, ++col) {
            const cplx coeff = xi[col] * ch.h_u2i[i][m];
            for (std::size_t n = 0; n < ch.n_bs; ++n) at_bs[n] += ch.h_i2b[i](n, m) * coeff;
        }
    return vdot(w, at_bs);
}

double rate_from_gain(cplx gain, const RadioParams& radio) noexcept
{
    return std::log2(1.0 + radio.tx_power_mw * std::norm(gain) / radio.noise_power_mw);
}

double rate_isac(std::span<const cplx> w, std::span<const cplx> theta1, const ChannelSet& ch,
                 const RadioParams& radio)
{
    return rate_from_gain(effective_gain_isac(w, theta1, ch), radio);
}

double rate_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch, const RadioParams& radio)
{
    return rate_from_gain(effective_gain_pc(w, xi, ch), radio);
}

double received_power_pc(std::span<const cplx> w, std::span<const cplx> xi, const ChannelSet& ch,
                         const RadioParams& radio, std::size_t slots, RandomStream& rng)
{
    if (slots < 1) throw Error(ErrorKind::InvalidInput, "at least one probe slot is required");
    const cplx signal = std::sqrt(radio.tx_power_mw) * effective_gain_pc(w, xi, ch);
    double acc = 0.0;
    CVector noise(w.size());
    for (std::size_t t = 0; t < slots; ++t) {
        const cplx pilot = rng.unit_phasor();
        for (auto& n : noise) n = rng.complex_normal(radio.noise_power_mw);
        const cplx y = signal * pilot + vdot(w, noise);
        acc += std::norm(y);
    }
    return acc / static_cast<double>(slots);
}

CVector stack_beams(const std::array<CVector, 3>& beams)
{
    CVector xi;
    xi.reserve(beams[0].size() + beams[1].size() + beams[2].size());
    for (const auto& b : beams) xi.insert(xi.end(), b.begin(), b.end());
    return xi;
}

} // namespace irsisac
