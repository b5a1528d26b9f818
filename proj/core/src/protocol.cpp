// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "irsisac/error.hpp"

namespace irsisac {

namespace {

constexpr std::size_t kRandomDraws = 100;
// Salt separating reference-rate streams from the block stream of a trial.
constexpr std::uint64_t kReferenceSalt = 0x5EED0F5EED0F5EEDULL;

double mean_of(const std::vector<double>& v, std::size_t first, std::size_t last)
{
    if (last <= first) return 0.0;
    const double sum = std::accumulate(v.begin() + static_cast<std::ptrdiff_t>(first),
                                       v.begin() + static_cast<std::ptrdiff_t>(last), 0.0);
    return sum / static_cast<double>(last - first);
}

std::optional<Position> usable(const SensingOutcome& outcome, const std::optional<Position>& injected)
{
    if (injected) return injected;
    if (outcome.ok()) return outcome.estimate->position;
    return std::nullopt;
}

} // namespace

double upper_bound_amplitude(const ChannelSet& ch, std::span<const cplx> w, const RadioParams& radio)
{
    double total = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const cplx steer = vdot(w, ula_response(ch.true_angles.bs_arrival[i], ch.n_bs));
        const cplx zeta = std::sqrt(radio.tx_power_mw) * ch.gains.i2b[i] * ch.gains.u2i[i] * steer;
        total += std::abs(zeta) * static_cast<double>(ch.arrays[i].size());
    }
    return total;
}

BlockResult run_coherence_block(const ScenarioConfig& scenario, const TimeBudget& budget, const RadioParams& radio,
                                RandomStream& rng, const BlockOptions& options)
{
    budget.validate();
    BlockResult result;
    result.rates.assign(budget.total, 0.0);

    const ChannelSet ch = synth_channels(scenario, rng);
    const CVector w = isac_combiner(scenario.bs, scenario.irs[0], scenario.bs_antennas);
    const std::size_t m1 = scenario.irs_arrays[0].size();

    std::optional<Position> pc_location;
    if (options.mode == ProtocolMode::Isac) {
        const CVector xi_random = random_phase_beam(m1, rng);
        const double r1 = rate_isac(w, xi_random, ch, radio);
        std::fill(result.rates.begin(), result.rates.begin() + static_cast<std::ptrdiff_t>(budget.tau1), r1);
        const auto snaps1 = simulate_sensing_snapshots(ch, xi_random, radio, budget.tau1, rng);
        result.loc_block1 = sense_location(snaps1[0], snaps1[1], scenario);
        const auto loc1 = usable(result.loc_block1, options.injected_location);

        const CVector xi_block2 = loc1 ? isac_phase_beam(*loc1, scenario.irs[0], scenario.bs, scenario.irs_arrays[0],
                                                         scenario.spacing_over_lambda)
                                       : xi_random;
        const double r2 = rate_isac(w, xi_block2, ch, radio);
        std::fill(result.rates.begin() + static_cast<std::ptrdiff_t>(budget.tau1),
                  result.rates.begin() + static_cast<std::ptrdiff_t>(budget.isac), r2);
        const auto snaps2 = simulate_sensing_snapshots(ch, xi_block2, radio, budget.tau2(), rng);
        result.loc_block2 = sense_location(snaps2[0], snaps2[1], scenario);
        const auto loc2 = usable(result.loc_block2, options.injected_location);
        pc_location = loc2 ? loc2 : loc1;
    } else {
        // Sensing-only first period; sub-IRS 1 still reflects with an uninformed beam.
        const CVector xi_random = random_phase_beam(m1, rng);
        const auto snaps = simulate_sensing_snapshots(ch, xi_random, radio, budget.isac, rng);
        result.loc_block1 = sense_location(snaps[0], snaps[1], scenario);
        result.loc_block2 = result.loc_block1;
        pc_location = usable(result.loc_block1, options.injected_location);
    }

    std::array<CVector, 3> patterns;
    for (std::size_t i = 0; i < 3; ++i)
        patterns[i] = pc_location ? isac_phase_beam(*pc_location, scenario.irs[i], scenario.bs,
                                                    scenario.irs_arrays[i], scenario.spacing_over_lambda)
                                  : random_phase_beam(scenario.irs_arrays[i].size(), rng);

    const std::size_t per_probe = scenario.training.probes_per_tuple;
    const std::size_t affordable_rounds = budget.pc() / (5 * per_probe);
    const int rounds = static_cast<int>(std::min<std::size_t>(affordable_rounds, scenario.training.max_rounds));

    std::size_t slot = budget.isac;
    PhaseTuple final_tuple{};
    if (rounds >= 1) {
        auto probe = [&](const PhaseTuple& tuple) {
            const CVector xi = apply_tuple(patterns, tuple).stacked();
            const double rate = rate_pc(w, xi, ch, radio);
            for (std::size_t k = 0; k < per_probe; ++k) result.rates[slot++] = rate;
            if (options.noiseless_feedback) return radio.tx_power_mw * std::norm(effective_gain_pc(w, xi, ch));
            return received_power_pc(w, xi, ch, radio, per_probe, rng);
        };
        result.training = bisection_training(probe, scenario.training.epsilon_mw, rounds, per_probe,
                                             scenario.training.early_stop);
        final_tuple = result.training.final_tuple;
    }
    result.probe_slots = slot - budget.isac;
    result.exploit_slots = budget.total - slot;

    const CVector xi_final = apply_tuple(patterns, final_tuple).stacked();
    result.trained_pc_rate = rate_pc(w, xi_final, ch, radio);
    std::fill(result.rates.begin() + static_cast<std::ptrdiff_t>(slot), result.rates.end(), result.trained_pc_rate);

    const double bound = upper_bound_amplitude(ch, w, radio);
    result.upper_bound_pc_rate = std::log2(1.0 + bound * bound / radio.noise_power_mw);

    result.avg_block1 = mean_of(result.rates, 0, budget.tau1);
    result.avg_block2 = mean_of(result.rates, budget.tau1, budget.isac);
    result.avg_isac = mean_of(result.rates, 0, budget.isac);
    result.avg_pc = mean_of(result.rates, budget.isac, budget.total);
    result.avg_total = mean_of(result.rates, 0, budget.total);
    return result;
}

RmseResult rmse(const std::vector<SensingOutcome>& estimates, const Position& truth, FailurePolicy policy,
                double penalty_m)
{
    if (estimates.empty()) throw Error(ErrorKind::InvalidInput, "rmse of an empty estimate list");
    RmseResult out;
    double acc = 0.0;
    for (const auto& e : estimates) {
        if (e.ok()) {
            const double d = distance(e.estimate->position, truth);
            acc += d * d;
            ++out.used;
        } else if (policy == FailurePolicy::Penalty) {
            acc += penalty_m * penalty_m;
            ++out.used;
        } else {
            ++out.excluded;
        }
    }
    out.value = out.used > 0 ? std::sqrt(acc / static_cast<double>(out.used)) : std::nan("");
    return out;
}

RmseResult rmse(const std::vector<Position>& estimates, const Position& truth)
{
    if (estimates.empty()) throw Error(ErrorKind::InvalidInput, "rmse of an empty estimate list");
    double acc = 0.0;
    for (const auto& p : estimates) {
        const double d = distance(p, truth);
        acc += d * d;
    }
    return {std::sqrt(acc / static_cast<double>(estimates.size())), estimates.size(), 0};
}

std::string_view to_string(SweepAxis axis) noexcept
{
    switch (axis) {
    case SweepAxis::TxPower: return "tx_power";
    case SweepAxis::Tau1: return "tau1";
    case SweepAxis::MSemi: return "m_semi";
    case SweepAxis::MPassive: return "m_passive";
    case SweepAxis::UserDistance: return "user_distance";
    case SweepAxis::T1OverT: return "t1_over_t";
    case SweepAxis::Tau1OverT1: return "tau1_over_t1";
    }
    return "unknown";
}

std::optional<SweepAxis> parse_axis(std::string_view name) noexcept
{
    for (auto axis : {SweepAxis::TxPower, SweepAxis::Tau1, SweepAxis::MSemi, SweepAxis::MPassive,
                      SweepAxis::UserDistance, SweepAxis::T1OverT, SweepAxis::Tau1OverT1})
        if (to_string(axis) == name) return axis;
    return std::nullopt;
}

namespace {

std::size_t to_count(double value, std::string_view what)
{
    const double r = std::round(value);
    if (!(r >= 0.0) || std::abs(r - value) > 1e-9)
        throw Error(ErrorKind::InvalidConfig, std::string(what) + " must be a non-negative integer");
    return static_cast<std::size_t>(r);
}

std::size_t square_side(double value, std::string_view what)
{
    const std::size_t m = to_count(value, what);
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
    if (n * n != m || n < 1) throw Error(ErrorKind::InvalidConfig, std::string(what) + " must be a perfect square");
    return n;
}

} // namespace

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value)
{
    ScenarioConfig s = base;
    switch (axis) {
    case SweepAxis::TxPower: s.tx_power = PowerLevel::from_dbm(value); break;
    case SweepAxis::Tau1: s.time.tau1 = to_count(value, "tau1"); break;
    case SweepAxis::MSemi: s.set_semi_passive_side(square_side(value, "m_semi")); break;
    case SweepAxis::MPassive: {
        const std::size_t n = square_side(value, "m_passive");
        s.irs_arrays[0] = ArraySpec::ura(n, n);
        break;
    }
    case SweepAxis::UserDistance: {
        if (!(value > 0.0)) throw Error(ErrorKind::InvalidConfig, "user_distance must be positive");
        const Position& anchor = base.irs[1];
        double dx = base.user.x - anchor.x;
        double dy = base.user.y - anchor.y;
        const double h = std::hypot(dx, dy);
        if (h > 0.0) {
            dx /= h;
            dy /= h;
        } else {
            dx = 1.0;
            dy = 0.0;
        }
        s.user = {anchor.x + value * dx, anchor.y + value * dy, base.user.z};
        break;
    }
    case SweepAxis::T1OverT: {
        if (!(value > 0.0 && value < 1.0)) throw Error(ErrorKind::InvalidConfig, "t1_over_t must lie in (0, 1)");
        const double tau_share = static_cast<double>(base.time.tau1) / static_cast<double>(base.time.isac);
        s.time.isac = static_cast<std::size_t>(std::llround(value * static_cast<double>(base.time.total)));
        s.time.tau1 = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                   std::llround(tau_share * static_cast<double>(s.time.isac))));
        break;
    }
    case SweepAxis::Tau1OverT1: {
        if (!(value > 0.0 && value < 1.0)) throw Error(ErrorKind::InvalidConfig, "tau1_over_t1 must lie in (0, 1)");
        s.time.tau1 = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(value * static_cast<double>(base.time.isac))));
        break;
    }
    }
    s.validate();
    return s;
}

double benchmark_rates(const ScenarioConfig& scenario, const ChannelSet& ch, const RadioParams& radio,
                       BenchmarkMode mode, RandomStream& rng)
{
    const CVector w = isac_combiner(scenario.bs, scenario.irs[0], scenario.bs_antennas);
    switch (mode) {
    case BenchmarkMode::OptimalIsac: {
        const CVector xi = isac_phase_beam(scenario.user, scenario.irs[0], scenario.bs, scenario.irs_arrays[0],
                                           scenario.spacing_over_lambda);
        return rate_isac(w, xi, ch, radio);
    }
    case BenchmarkMode::Random: {
        double acc = 0.0;
        for (std::size_t k = 0; k < kRandomDraws; ++k)
            acc += rate_isac(w, random_phase_beam(ch.arrays[0].size(), rng), ch, radio);
        return acc / static_cast<double>(kRandomDraws);
    }
    case BenchmarkMode::RandomPc: {
        double acc = 0.0;
        for (std::size_t k = 0; k < kRandomDraws; ++k)
            acc += rate_pc(w, random_phase_beam(ch.total_elements(), rng), ch, radio);
        return acc / static_cast<double>(kRandomDraws);
    }
    case BenchmarkMode::UpperBoundPc: {
        const double a = upper_bound_amplitude(ch, w, radio);
        return std::log2(1.0 + a * a / radio.noise_power_mw);
    }
    }
    return 0.0;
}

namespace {

struct TrialRecord {
    SensingOutcome loc1;
    SensingOutcome loc2;
    double block1 = 0.0;
    double block2 = 0.0;
    double isac = 0.0;
    double pc = 0.0;
    double total = 0.0;
    double optimal_isac = 0.0;
    double random_isac = 0.0;
    double random_pc = 0.0;
    double upper_bound_pc = 0.0;
    double total_benchmark = 0.0;
};

MetricStats stats(const std::vector<TrialRecord>& records, double TrialRecord::*field)
{
    MetricStats s;
    const auto n = static_cast<double>(records.size());
    double sum = 0.0;
    for (const auto& r : records) sum += r.*field;
    s.mean = sum / n;
    if (records.size() > 1) {
        double ss = 0.0;
        for (const auto& r : records) ss += (r.*field - s.mean) * (r.*field - s.mean);
        s.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    }
    return s;
}

TrialRecord run_trial(const ScenarioConfig& s, std::uint64_t seed, const SweepOptions& options)
{
    TrialRecord rec;
    RandomStream rng(seed);
    const BlockResult block = run_coherence_block(s, s.time, s.radio(), rng, options.block);
    rec.loc1 = block.loc_block1;
    rec.loc2 = block.loc_block2;
    rec.block1 = block.avg_block1;
    rec.block2 = block.avg_block2;
    rec.isac = block.avg_isac;
    rec.pc = block.avg_pc;
    rec.total = block.avg_total;
    rec.upper_bound_pc = block.upper_bound_pc_rate;

    if (options.reference_rates) {
        // The block stream draws the channel first, so the same seed reproduces it.
        RandomStream channel_rng(seed);
        const ChannelSet ch = synth_channels(s, channel_rng);
        RandomStream ref_rng(seed ^ kReferenceSalt);
        rec.optimal_isac = benchmark_rates(s, ch, s.radio(), BenchmarkMode::OptimalIsac, ref_rng);
        rec.random_isac = benchmark_rates(s, ch, s.radio(), BenchmarkMode::Random, ref_rng);
        rec.random_pc = benchmark_rates(s, ch, s.radio(), BenchmarkMode::RandomPc, ref_rng);
    }
    if (options.compare_benchmark) {
        BlockOptions bench = options.block;
        bench.mode = ProtocolMode::Benchmark;
        RandomStream bench_rng(seed);
        rec.total_benchmark = run_coherence_block(s, s.time, s.radio(), bench_rng, bench).avg_total;
    }
    return rec;
}

} // namespace

SweepResult monte_carlo_sweep(const ScenarioConfig& scenario, SweepAxis axis, const std::vector<double>& values,
                              std::size_t trials, std::uint64_t base_seed, const SweepOptions& options)
{
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "sweep needs at least one axis value");
    if (trials < 1) throw Error(ErrorKind::InvalidInput, "sweep needs at least one trial");

    std::size_t workers = scenario.threads != 0 ? scenario.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, trials);

    SweepResult result;
    result.axis = axis;
    for (std::size_t ai = 0; ai < values.size(); ++ai) {
        const ScenarioConfig s = apply_axis(scenario, axis, values[ai]);
        std::vector<TrialRecord> records(trials);

        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t t = next++; t < trials; t = next++)
                records[t] = run_trial(s, derive_seed(base_seed, ai, t), options);
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
        }

        SweepPoint point;
        point.axis_value = values[ai];
        point.trials = trials;
        std::vector<SensingOutcome> loc1;
        std::vector<SensingOutcome> loc2;
        for (const auto& r : records) {
            loc1.push_back(r.loc1);
            loc2.push_back(r.loc2);
            if (!r.loc1.ok()) ++point.failures_block1;
        }
        point.rmse_block1 = rmse(loc1, s.user, s.rmse_failure, s.rmse_penalty_m);
        point.rmse_block2 = rmse(loc2, s.user, s.rmse_failure, s.rmse_penalty_m);
        point.rate_block1 = stats(records, &TrialRecord::block1);
        point.rate_block2 = stats(records, &TrialRecord::block2);
        point.rate_isac = stats(records, &TrialRecord::isac);
        point.rate_pc = stats(records, &TrialRecord::pc);
        point.rate_total = stats(records, &TrialRecord::total);
        point.rate_optimal_isac = stats(records, &TrialRecord::optimal_isac);
        point.rate_random_isac = stats(records, &TrialRecord::random_isac);
        point.rate_random_pc = stats(records, &TrialRecord::random_pc);
        point.rate_upper_bound_pc = stats(records, &TrialRecord::upper_bound_pc);
        point.rate_total_benchmark = stats(records, &TrialRecord::total_benchmark);
        result.points.push_back(point);
    }
    return result;
}

} // namespace irsisac
