// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "irsisac/channel.hpp"
#include "irsisac/geometry.hpp"
#include "irsisac/numerics.hpp"
#include "irsisac/signal.hpp"

namespace irsisac {

/// Power held in both dBm (as configured) and milliwatts (as used).
class PowerLevel {
public:
    PowerLevel() = default;
    static PowerLevel from_dbm(double dbm);

    double dbm() const noexcept { return dbm_; }
    double mw() const noexcept { return mw_; }

    bool operator==(const PowerLevel&) const = default;

private:
    double dbm_ = 0.0;
    double mw_ = 1.0;
};

double dbm_to_mw(double dbm) noexcept;

/// Slot allocation of one coherence block: ISAC period of T1 slots (first
/// block tau1, second block T1 - tau1) followed by a PC period of T - T1.
struct TimeBudget {
    std::size_t total = 1200;
    std::size_t isac = 120;
    std::size_t tau1 = 20;

    std::size_t tau2() const noexcept { return isac - tau1; }
    std::size_t pc() const noexcept { return total - isac; }

    /// Throws Error(InvalidConfig) naming the violated constraint.
    void validate() const;

    bool operator==(const TimeBudget&) const = default;
};

struct TrainingConfig {
    double epsilon_mw = 1e-8;
    int max_rounds = 8;
    std::size_t probes_per_tuple = 1;
    /// Stop on a non-improving round; false always spends max_rounds rounds.
    bool early_stop = true;

    bool operator==(const TrainingConfig&) const = default;
};

enum class FailurePolicy { Exclude, Penalty };

struct ScenarioConfig {
    Position bs{-50.0, 47.0, 20.0};
    std::array<Position, 3> irs{Position{0.0, 50.0, 5.0}, Position{0.0, 47.0, 7.0}, Position{0.0, 53.0, 8.0}};
    Position user{6.0, 47.0, 0.0};
    double spacing_over_lambda = kHalfWavelength;

    std::size_t bs_antennas = 8;
    std::array<ArraySpec, 3> irs_arrays{ArraySpec::ura(16, 16), ArraySpec::ura(4, 4), ArraySpec::ura(4, 4)};

    /// Micro-surface size; 0 selects n - 1 along that axis.
    std::size_t micro_q_y = 0;
    std::size_t micro_q_z = 0;

    PathGainModel loss_irs_bs{30.0, 2.3};
    PathGainModel loss_user_irs{30.0, 2.2};
    PathGainModel loss_irs_irs{30.0, 2.1};

    PowerLevel tx_power = PowerLevel::from_dbm(20.0);
    PowerLevel noise_power = PowerLevel::from_dbm(-80.0);

    TimeBudget time{};
    TrainingConfig training{};

    std::size_t trials = 200;
    std::uint64_t seed = 1;
    /// Worker threads for sweeps; 0 selects the hardware concurrency.
    std::size_t threads = 0;

    FailurePolicy rmse_failure = FailurePolicy::Exclude;
    double rmse_penalty_m = 100.0;

    JacobiOptions eig{};

    RadioParams radio() const noexcept { return {tx_power.mw(), noise_power.mw()}; }

    /// Micro-surface size actually used for semi-passive sub-IRS i (1 or 2).
    std::size_t micro_qy_for(std::size_t index) const noexcept;
    std::size_t micro_qz_for(std::size_t index) const noexcept;

    /// Sets sub-IRS 2 and 3 to n x n arrays.
    void set_semi_passive_side(std::size_t n);

    /// Cross-field validation. Throws Error(InvalidConfig) naming the field.
    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Horizontal (top-view) distance between two points.
double horizontal_distance(const Position& a, const Position& b) noexcept;

} // namespace irsisac
