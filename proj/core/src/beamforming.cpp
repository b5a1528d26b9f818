// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/beamforming.hpp"

#include <cmath>
#include <numbers>

#include "irsisac/error.hpp"
#include "irsisac/scenario.hpp"

namespace irsisac {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

CVector PhaseBeam::stacked() const
{
    CVector xi;
    xi.reserve(surfaces[0].size() + surfaces[1].size() + surfaces[2].size());
    for (const auto& s : surfaces) xi.insert(xi.end(), s.begin(), s.end());
    return xi;
}

double wrap_two_pi(double angle) noexcept
{
    double w = std::fmod(angle, 2.0 * kPi);
    if (w < 0.0) w += 2.0 * kPi;
    if (w >= 2.0 * kPi) w = 0.0;
    return w;
}

PhaseTuple PhaseTuple::wrapped(double phi2, double phi3) noexcept
{
    return {wrap_two_pi(phi2), wrap_two_pi(phi3)};
}

CVector isac_combiner(const Position& bs, const Position& irs1, std::size_t n)
{
    if (n < 1) throw Error(ErrorKind::InvalidInput, "combiner needs at least one antenna");
    const double u = to_effective(direction_cosines(bs, irs1)).u;
    return scaled(ula_response(u, n), 1.0 / std::sqrt(static_cast<double>(n)));
}

CVector isac_phase_beam(const Position& user_est, const Position& irs1, const Position& bs, const ArraySpec& spec,
                        double spacing_over_lambda)
{
    const CVector arrival = ura_response(to_effective(direction_cosines(irs1, user_est), spacing_over_lambda), spec);
    const CVector departure = ura_response(to_effective(departure_cosines(irs1, bs), spacing_over_lambda), spec);
    return hadamard(conj(arrival), departure);
}

CVector random_phase_beam(std::size_t m, RandomStream& rng)
{
    CVector xi(m);
    for (auto& z : xi) z = rng.unit_phasor();
    return xi;
}

PhaseBeam apply_tuple(const std::array<CVector, 3>& patterns, const PhaseTuple& tuple)
{
    PhaseBeam beam;
    beam.surfaces[0] = patterns[0];
    beam.surfaces[1] = scaled(patterns[1], std::polar(1.0, tuple.phi2));
    beam.surfaces[2] = scaled(patterns[2], std::polar(1.0, tuple.phi3));
    return beam;
}

PhaseBeam pc_phase_beams(const Position& user_est, const ScenarioConfig& scenario, const PhaseTuple& tuple)
{
    std::array<CVector, 3> patterns;
    for (std::size_t i = 0; i < 3; ++i)
        patterns[i] = isac_phase_beam(user_est, scenario.irs[i], scenario.bs, scenario.irs_arrays[i],
                                      scenario.spacing_over_lambda);
    return apply_tuple(patterns, tuple);
}

std::array<PhaseTuple, 5> diagonal_candidates(const PhaseTuple& center, double offset) noexcept
{
    return {center,
            PhaseTuple::wrapped(center.phi2 - offset, center.phi3 - offset),
            PhaseTuple::wrapped(center.phi2 - offset, center.phi3 + offset),
            PhaseTuple::wrapped(center.phi2 + offset, center.phi3 - offset),
            PhaseTuple::wrapped(center.phi2 + offset, center.phi3 + offset)};
}

TrainingTrace bisection_training(const PowerProbe& probe, double epsilon, int max_rounds,
                                 std::size_t slots_per_probe, bool early_stop)
{
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidInput, "training tolerance must be positive");
    if (max_rounds < 1) throw Error(ErrorKind::InvalidInput, "training needs at least one round");

    TrainingTrace trace;
    // Round 1 is the (pi, pi)-centred pattern with corners at pi/2 and 3pi/2.
    std::array<PhaseTuple, 5> candidates = diagonal_candidates({kPi, kPi}, kPi / 2.0);
    for (int k = 1; k <= max_rounds; ++k) {
        TrainingRound round;
        round.candidates = candidates;
        for (std::size_t n = 0; n < 5; ++n) {
            round.powers[n] = probe(candidates[n]);
            if (round.powers[n] > round.powers[round.winner]) round.winner = n;
        }
        trace.slots_consumed += 5 * slots_per_probe;
        trace.rounds.push_back(round);
        trace.final_tuple = round.candidates[round.winner];

        if (early_stop && k >= 2 && trace.winner_power(k - 1) - trace.winner_power(k - 2) <= epsilon) break;
        candidates = diagonal_candidates(trace.final_tuple, kPi / std::ldexp(1.0, k + 1));
    }
    return trace;
}

} // namespace irsisac
