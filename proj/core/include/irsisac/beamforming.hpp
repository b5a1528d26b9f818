// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "irsisac/channel.hpp"
#include "irsisac/geometry.hpp"
#include "irsisac/numerics.hpp"
#include "irsisac/random.hpp"

namespace irsisac {

struct ScenarioConfig;

/// Unit-modulus reflection coefficients of the three sub-IRSs.
struct PhaseBeam {
    std::array<CVector, 3> surfaces;

    CVector stacked() const;
};

/// Inter-surface phase offsets of sub-IRS 2 and 3 (sub-IRS 1 fixed at 0),
/// kept in [0, 2pi).
struct PhaseTuple {
    double phi2 = 0.0;
    double phi3 = 0.0;

    static PhaseTuple wrapped(double phi2, double phi3) noexcept;
    bool operator==(const PhaseTuple&) const = default;
};

double wrap_two_pi(double angle) noexcept;

/// BS combiner matched to the sub-IRS 1 direction, unit norm.
CVector isac_combiner(const Position& bs, const Position& irs1, std::size_t n);

/// Reflection pattern steering a user at `user_est` into the BS direction:
/// conj(b(user arrival)) .* b(BS departure).
CVector isac_phase_beam(const Position& user_est, const Position& irs1, const Position& bs, const ArraySpec& spec,
                        double spacing_over_lambda = kHalfWavelength);

CVector random_phase_beam(std::size_t m, RandomStream& rng);

/// Per-surface location-matched beams rotated by e^{j phi_i}.
PhaseBeam pc_phase_beams(const Position& user_est, const ScenarioConfig& scenario, const PhaseTuple& tuple);

/// Same beams with each surface pattern supplied by the caller (e.g. random).
PhaseBeam apply_tuple(const std::array<CVector, 3>& patterns, const PhaseTuple& tuple);

struct TrainingRound {
    std::array<PhaseTuple, 5> candidates{};
    std::array<double, 5> powers{};
    std::size_t winner = 0;
};

struct TrainingTrace {
    std::vector<TrainingRound> rounds;
    PhaseTuple final_tuple{};
    std::size_t slots_consumed = 0;

    double winner_power(std::size_t round) const { return rounds.at(round).powers[rounds.at(round).winner]; }
};

using PowerProbe = std::function<double(const PhaseTuple&)>;

/// Bisection search over (phi2, phi3). Round 1 probes (pi,pi) and the four
/// points (pi/2 or 3pi/2, pi/2 or 3pi/2); round k >= 2 probes the previous
/// winner and its diagonal neighbours at +-pi/2^k. Stops once the winner
/// power improves by no more than epsilon or after max_rounds rounds. With
/// early_stop false every one of the max_rounds rounds is run.
TrainingTrace bisection_training(const PowerProbe& probe, double epsilon, int max_rounds,
                                 std::size_t slots_per_probe = 1, bool early_stop = true);

/// Candidate tuples probed in a round centred at `center` with half-step `offset`.
std::array<PhaseTuple, 5> diagonal_candidates(const PhaseTuple& center, double offset) noexcept;

} // namespace irsisac
