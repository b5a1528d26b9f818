// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irsisac/beamforming.hpp"
#include "irsisac/channel.hpp"
#include "irsisac/scenario.hpp"
#include "irsisac/sensing.hpp"
#include "irsisac/signal.hpp"

namespace irsisac {

enum class ProtocolMode {
    Isac,      ///< sensing overlaps with sub-IRS 1 assisted transmission
    Benchmark, ///< first period senses only (zero rate), second period transmits
};

struct BlockOptions {
    ProtocolMode mode = ProtocolMode::Isac;
    /// Replaces both sensing results with this position (sensing still runs).
    std::optional<Position> injected_location;
    /// Beam training observes rho |w^H H Theta h|^2 exactly.
    bool noiseless_feedback = false;
};

struct BlockResult {
    SensingOutcome loc_block1;
    SensingOutcome loc_block2;
    TrainingTrace training;
    std::vector<double> rates; ///< one per slot, length T

    double avg_block1 = 0.0;
    double avg_block2 = 0.0;
    double avg_isac = 0.0;
    double avg_pc = 0.0;
    double avg_total = 0.0;

    std::size_t probe_slots = 0;
    std::size_t exploit_slots = 0;

    /// PC rate of the trained beam and the triangle-inequality bound.
    double trained_pc_rate = 0.0;
    double upper_bound_pc_rate = 0.0;
};

/// One coherence block: block 1 (random passive beam, sensing over tau1),
/// block 2 (location-matched passive beam, sensing over T1 - tau1), then the
/// PC period with bisection-trained three-surface beams.
BlockResult run_coherence_block(const ScenarioConfig& scenario, const TimeBudget& budget, const RadioParams& radio,
                                RandomStream& rng, const BlockOptions& options = {});

struct RmseResult {
    double value = 0.0;
    std::size_t used = 0;
    std::size_t excluded = 0;
};

/// Root mean squared Euclidean error. Failed estimates are excluded or
/// charged `penalty_m` per the policy. Throws Error(InvalidInput) if empty.
RmseResult rmse(const std::vector<SensingOutcome>& estimates, const Position& truth,
                FailurePolicy policy = FailurePolicy::Exclude, double penalty_m = 0.0);
RmseResult rmse(const std::vector<Position>& estimates, const Position& truth);

enum class SweepAxis { TxPower, Tau1, MSemi, MPassive, UserDistance, T1OverT, Tau1OverT1 };

std::string_view to_string(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view name) noexcept;

/// Applies one axis value to a scenario copy. Throws Error(InvalidConfig)
/// when the value produces an invalid configuration.
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

struct MetricStats {
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct SweepPoint {
    double axis_value = 0.0;
    std::size_t trials = 0;
    RmseResult rmse_block1;
    RmseResult rmse_block2;
    std::size_t failures_block1 = 0;
    MetricStats rate_block1;
    MetricStats rate_block2;
    MetricStats rate_isac;
    MetricStats rate_pc;
    MetricStats rate_total;
    MetricStats rate_optimal_isac;
    MetricStats rate_random_isac;
    MetricStats rate_random_pc;
    MetricStats rate_upper_bound_pc;
    MetricStats rate_total_benchmark;
};

struct SweepOptions {
    BlockOptions block{};
    /// Also run each trial under the benchmark protocol with the same seed.
    bool compare_benchmark = false;
    /// Evaluate optimal / random / upper-bound reference rates per trial.
    bool reference_rates = false;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::TxPower;
    std::vector<SweepPoint> points;
};

/// Runs `trials` coherence blocks per axis value with seeds
/// derive_seed(base_seed, axis_index, trial_index); reduction is in trial order.
SweepResult monte_carlo_sweep(const ScenarioConfig& scenario, SweepAxis axis, const std::vector<double>& values,
                              std::size_t trials, std::uint64_t base_seed, const SweepOptions& options = {});

enum class BenchmarkMode { OptimalIsac, Random, RandomPc, UpperBoundPc };

/// Reference rates on one channel realisation. Random modes average over
/// 100 draws from `rng`.
double benchmark_rates(const ScenarioConfig& scenario, const ChannelSet& ch, const RadioParams& radio,
                       BenchmarkMode mode, RandomStream& rng);

/// |zeta_i| M_i summed over surfaces, zeta_i = sqrt(rho) alpha_I2B,i alpha_U2I,i w^H a_i.
double upper_bound_amplitude(const ChannelSet& ch, std::span<const cplx> w, const RadioParams& radio);

} // namespace irsisac
