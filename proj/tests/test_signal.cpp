// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include <catch_amalgamated.hpp>

#include <cmath>

#include "irsisac/beamforming.hpp"
#include "irsisac/channel.hpp"
#include "irsisac/scenario.hpp"
#include "irsisac/signal.hpp"
#include "support.hpp"

using namespace irsisac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Fixture {
    ScenarioConfig s;
    RandomStream rng{2024};
    ChannelSet ch = synth_channels(s, rng);
    CVector w = isac_combiner(s.bs, s.irs[0], s.bs_antennas);
};

} // namespace

TEST_CASE("noiseless snapshot without interference is collinear with the user channel")
{
    Fixture f;
    for (auto& h : f.ch.h_i2i) h = CMatrix(h.rows(), h.cols());
    const CVector theta = random_phase_beam(f.ch.arrays[0].size(), f.rng);
    const auto b = simulate_sensing_snapshots(f.ch, theta, {100.0, 0.0}, 1, f.rng);
    for (std::size_t k = 0; k < 2; ++k) {
        const CVector& x = b[k].samples[0];
        const CVector& h = f.ch.h_u2i[k + 1];
        const double cos_angle = std::abs(vdot(h, x)) / (norm(h) * norm(x));
        CHECK_THAT(cos_angle, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("mean snapshot power per element")
{
    Fixture f;
    const RadioParams radio{10.0, 1e-6};
    const CVector theta = random_phase_beam(f.ch.arrays[0].size(), f.rng);
    const std::size_t slots = 10000;
    const auto b = simulate_sensing_snapshots(f.ch, theta, radio, slots, f.rng);

    // expected per-element power: rho |h_u2i + H_i2i (theta . h_u2i1)|^2 + sigma^2
    const CVector refl = hadamard(theta, f.ch.h_u2i[0]);
    for (std::size_t k = 0; k < 2; ++k) {
        const CVector interf = f.ch.h_i2i[k] * std::span<const cplx>(refl);
        for (std::size_t m = 0; m < interf.size(); ++m) {
            const double expected = radio.tx_power_mw * std::norm(f.ch.h_u2i[k + 1][m] + interf[m]) + radio.noise_power_mw;
            double acc = 0.0;
            for (const auto& x : b[k].samples) acc += std::norm(x[m]);
            CHECK_THAT(acc / slots, WithinRel(expected, 0.05));
        }
    }
}

TEST_CASE("snapshots are reproducible")
{
    Fixture f;
    const CVector theta = random_phase_beam(f.ch.arrays[0].size(), f.rng);
    RandomStream a(8);
    RandomStream b(8);
    const auto ba = simulate_sensing_snapshots(f.ch, theta, f.s.radio(), 5, a);
    const auto bb = simulate_sensing_snapshots(f.ch, theta, f.s.radio(), 5, b);
    CHECK(ba[0].samples == bb[0].samples);
    CHECK(ba[1].samples == bb[1].samples);
}

TEST_CASE("rate from gain")
{
    CHECK(rate_from_gain(0.0, {1.0, 1.0}) == 0.0);
    CHECK(rate_from_gain(1.0, {2.0, 2.0}) == 1.0);
}

TEST_CASE("coherent ISAC rate equals the closed form")
{
    Fixture f;
    const CVector xi = isac_phase_beam(f.s.user, f.s.irs[0], f.s.bs, f.s.irs_arrays[0], f.s.spacing_over_lambda);
    const RadioParams r = f.s.radio();
    const double n = static_cast<double>(f.s.bs_antennas);
    const double m1 = static_cast<double>(f.s.irs_arrays[0].size());
    const double closed = std::log2(1.0 + r.tx_power_mw * n * m1 * m1 * std::norm(f.ch.gains.i2b[0] * f.ch.gains.u2i[0]) / r.noise_power_mw);

    // direct matrix evaluation of w^H H diag(xi) h
    CVector at_bs(f.s.bs_antennas);
    for (std::size_t row = 0; row < at_bs.size(); ++row)
        for (std::size_t m = 0; m < xi.size(); ++m) at_bs[row] += f.ch.h_i2b[0](row, m) * xi[m] * f.ch.h_u2i[0][m];
    const double direct = rate_from_gain(vdot(f.w, at_bs), r);

    CHECK_THAT(rate_isac(f.w, xi, f.ch, r), WithinRel(closed, 1e-9));
    CHECK_THAT(direct, WithinRel(closed, 1e-9));
}

TEST_CASE("PC rate paths agree")
{
    Fixture f;
    const CVector ones(f.ch.total_elements(), 1.0);
    const auto parts = per_surface_gains(f.w, ones, f.ch);
    CHECK(std::abs(effective_gain_pc(f.w, ones, f.ch) - (parts[0] + parts[1] + parts[2])) < 1e-15);

    const RadioParams r = f.s.radio();
    const double base = rate_pc(f.w, ones, f.ch, r);
    CHECK_THAT(rate_pc(f.w, ones, f.ch, {r.tx_power_mw * 7.0, r.noise_power_mw * 7.0}), WithinRel(base, 1e-12));
}

TEST_CASE("aligning sub-IRS 1 plus any others is no worse than ISAC alone")
{
    Fixture f;
    const RadioParams r = f.s.radio();
    const CVector xi1 = isac_phase_beam(f.s.user, f.s.irs[0], f.s.bs, f.s.irs_arrays[0], f.s.spacing_over_lambda);
    const double isac = rate_isac(f.w, xi1, f.ch, r);
    const auto patterns = pc_phase_beams(f.s.user, f.s, {}).surfaces;
    double best = 0.0;
    for (int a = 0; a < 64; ++a)
        for (int b = 0; b < 64; ++b) {
            const PhaseBeam beam = apply_tuple(patterns, {a * std::numbers::pi / 32, b * std::numbers::pi / 32});
            best = std::max(best, rate_pc(f.w, beam.stacked(), f.ch, r));
        }
    CHECK(best >= isac);
}

TEST_CASE("received power expectation")
{
    Fixture f;
    const CVector xi(f.ch.total_elements(), 1.0);
    const RadioParams r{1.0, 1e-7};
    const double signal = r.tx_power_mw * std::norm(effective_gain_pc(f.w, xi, f.ch));
    CHECK_THAT(received_power_pc(f.w, xi, f.ch, {r.tx_power_mw, 0.0}, 1, f.rng), WithinRel(signal, 1e-12));
    const double mc = received_power_pc(f.w, xi, f.ch, r, 10000, f.rng);
    CHECK_THAT(mc, WithinRel(signal + r.noise_power_mw, 0.05));

    const double low = received_power_pc(f.w, xi, f.ch, {0.5, 0.0}, 1, f.rng);
    CHECK(low < received_power_pc(f.w, xi, f.ch, {1.0, 0.0}, 1, f.rng));
}
