// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

#include "irsisac/beamforming.hpp"
#include "irsisac/channel.hpp"
#include "irsisac/error.hpp"
#include "irsisac/protocol.hpp"
#include "irsisac/random.hpp"
#include "irsisac/scenario.hpp"
#include "irsisac/sensing.hpp"
#include "irsisac/signal.hpp"

namespace irsisac {

namespace {

struct Check {
    const char* name;
    std::function<std::string()> run; // empty string on success
};

std::string covariance_check()
{
    ScenarioConfig s;
    RandomStream rng(11);
    const ChannelSet ch = synth_channels(s, rng);
    const CVector theta = random_phase_beam(ch.arrays[0].size(), rng);
    const auto batches = simulate_sensing_snapshots(ch, theta, s.radio(), 20, rng);
    const MicroLayout layout = build_micro_layout(s.irs_arrays[1], s.micro_qy_for(1), s.micro_qz_for(1));
    const CMatrix r = fbss_covariance(batches[0], layout);
    const CMatrix diff = r - r.adjoint();
    if (diff.max_abs() > 1e-12 * r.max_abs()) return "covariance not Hermitian";
    const EigenPair e = hermitian_eig(r);
    if (e.values.back() < -1e-10 * e.values.front()) return "covariance has a negative eigenvalue";
    return {};
}

CMatrix orthonormal_columns(const std::vector<CVector>& cols)
{
    std::vector<CVector> q;
    for (CVector v : cols) {
        for (const auto& b : q) {
            const cplx p = vdot(b, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * b[i];
        }
        const double n = norm(v);
        for (auto& x : v) x /= n;
        q.push_back(std::move(v));
    }
    return CMatrix::from_columns(q);
}

std::string esprit_rotation_check()
{
    const MicroLayout layout = build_micro_layout(ArraySpec::ura(4, 4), 3, 3);
    const CMatrix us = orthonormal_columns(
        {ura_response(0.7, -1.1, layout.micro_spec()), ura_response(-2.0, 0.4, layout.micro_spec())});
    RandomStream rng(5);
    const double a = rng.phase();
    const cplx e1 = std::polar(1.0, rng.phase());
    const cplx e2 = std::polar(1.0, rng.phase());
    CMatrix q(2, 2);
    q(0, 0) = std::cos(a) * e1;
    q(0, 1) = -std::sin(a) * std::conj(e2);
    q(1, 0) = std::sin(a) * e2;
    q(1, 1) = std::cos(a) * std::conj(e1);
    for (Axis axis : {Axis::Y, Axis::Z}) {
        const AuxSelectors sel = aux_selectors(layout, axis);
        auto base = esprit_axis(us, sel);
        auto rotated = esprit_axis(us * q, sel);
        std::sort(base.begin(), base.end());
        std::sort(rotated.begin(), rotated.end());
        for (std::size_t k = 0; k < 2; ++k)
            if (std::abs(base[k] - rotated[k]) > 1e-9) return "ESPRIT angles change under subspace rotation";
    }
    return {};
}

std::string localize_check()
{
    ScenarioConfig s;
    RandomStream rng(3);
    for (int k = 0; k < 200; ++k) {
        const Position user{0.5 + 20.0 * rng.uniform(), 30.0 + 40.0 * rng.uniform(), 0.0};
        const LocationEstimate est = localize(direction_cosines(s.irs[1], user), direction_cosines(s.irs[2], user),
                                             s.irs[1], s.irs[2]);
        if (distance(est.position, user) > 1e-8) return "localize does not invert the geometry";
    }
    return {};
}

std::string unit_modulus_check()
{
    ScenarioConfig s;
    RandomStream rng(9);
    auto unit = [](const CVector& v) {
        return std::all_of(v.begin(), v.end(), [](cplx x) { return std::abs(std::abs(x) - 1.0) < 1e-12; });
    };
    if (!unit(isac_phase_beam(s.user, s.irs[0], s.bs, s.irs_arrays[0], s.spacing_over_lambda)))
        return "ISAC beam not unit modulus";
    if (!unit(random_phase_beam(64, rng))) return "random beam not unit modulus";
    const PhaseBeam pc = pc_phase_beams(s.user, s, PhaseTuple{1.3, 4.0});
    if (!unit(pc.stacked())) return "PC beam not unit modulus";
    return {};
}

std::string slot_check()
{
    ScenarioConfig s;
    s.time = {300, 60, 15};
    RandomStream rng(21);
    const BlockResult r = run_coherence_block(s, s.time, s.radio(), rng);
    if (r.rates.size() != s.time.total) return "rate trace length differs from T";
    if (r.probe_slots + r.exploit_slots != s.time.pc()) return "PC period slots not conserved";
    if (r.loc_block1.ok() == false && r.loc_block1.failure == std::nullopt) return "block 1 outcome empty";
    return {};
}

std::string determinism_check()
{
    ScenarioConfig s;
    s.time = {300, 60, 15};
    RandomStream a(77);
    RandomStream b(77);
    const BlockResult ra = run_coherence_block(s, s.time, s.radio(), a);
    const BlockResult rb = run_coherence_block(s, s.time, s.radio(), b);
    if (ra.rates != rb.rates) return "same seed gave different rate traces";
    const SweepResult sa = monte_carlo_sweep(s, SweepAxis::TxPower, {10.0}, 4, 5);
    s.threads = 1;
    const SweepResult sb = monte_carlo_sweep(s, SweepAxis::TxPower, {10.0}, 4, 5);
    if (sa.points[0].rate_total.mean != sb.points[0].rate_total.mean ||
        sa.points[0].rmse_block1.value != sb.points[0].rmse_block1.value)
        return "sweep depends on thread count";
    return {};
}

} // namespace

bool run_selftest(std::ostream& out)
{
    const Check checks[] = {
        {"covariance_hermitian_psd", covariance_check}, {"esprit_rotation_invariance", esprit_rotation_check},
        {"localize_round_trip", localize_check},        {"unit_modulus_beams", unit_modulus_check},
        {"slot_conservation", slot_check},              {"determinism", determinism_check},
    };
    bool all = true;
    for (const auto& c : checks) {
        std::string failure;
        try {
            failure = c.run();
        } catch (const std::exception& e) {
            failure = std::string("threw: ") + e.what();
        }
        out << (failure.empty() ? "PASS " : "FAIL ") << c.name;
        if (!failure.empty()) out << ": " << failure;
        out << '\n';
        all = all && failure.empty();
    }
    return all;
}

} // namespace irsisac
