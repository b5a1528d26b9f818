// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "irsisac/beamforming.hpp"
#include "irsisac/experiments.hpp"
#include "irsisac/protocol.hpp"
#include "irsisac/selftest.hpp"

using namespace irsisac;

namespace {

constexpr std::uint64_t kSeed = 20260601;

int g_failed = 0;

void report(int id, bool pass, const std::string& detail)
{
    if (!pass) ++g_failed;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double position_error(const Position& a, const Position& b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

ExperimentPreset preset(const char* name)
{
    auto p = find_preset(name);
    if (!p) throw Error(ErrorKind::InvalidInput, std::string("missing preset ") + name);
    return *p;
}

void noiseless_limit()
{
    ScenarioConfig s;
    s.noise_power = PowerLevel::from_dbm(-160.0);
    s.time.tau1 = 20;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t within = 0;
    double worst = 0.0;
    for (std::size_t t = 0; t < 100; ++t) {
        RandomStream rng(derive_seed(kSeed, 1, t));
        const BlockResult r = run_coherence_block(s, s.time, s.radio(), rng);
        const double err = r.loc_block1.ok() ? position_error(r.loc_block1.estimate->position, s.user) : INFINITY;
        worst = std::max(worst, err);
        within += err <= 1e-6;
    }
    const double elapsed = seconds_since(t0);
    report(1, within == 100 && elapsed < 10.0,
           fmt("%zu/100 trials within 1e-6 m, worst error %.3e m, %.2f s", within, worst, elapsed));
}

void power_trend()
{
    const ScenarioConfig base;
    const ExperimentRun run = run_experiment(preset("fig6"), base, 200, kSeed);
    const auto& small = run.results[0].points;
    const auto& large = run.results[1].points;
    bool monotone = true;
    bool ordered = true;
    std::ostringstream curve;
    for (std::size_t i = 0; i < small.size(); ++i) {
        const double a = small[i].rmse_block1.value;
        const double b = large[i].rmse_block1.value;
        if (i > 0) {
            monotone = monotone && a < small[i - 1].rmse_block1.value;
            monotone = monotone && b < large[i - 1].rmse_block1.value;
        }
        ordered = ordered && b < a;
        curve << fmt(" %g dBm: %.3e/%.3e", small[i].axis_value, a, b);
    }
    const double at22 = small.back().rmse_block1.value;
    const bool near = at22 >= 1e-2 / 3.0 && at22 <= 3e-2;
    report(2, monotone && ordered && near,
           fmt("monotone=%d ordered=%d rmse(22 dBm,16)=%.3e m;", monotone, ordered, at22) + curve.str() +
               " (m_semi 16/36)");
}

void millimetre_point()
{
    ScenarioConfig s;
    s.time.tau1 = 30;
    s.set_semi_passive_side(5);
    s.tx_power = PowerLevel::from_dbm(20.0);
    const SweepResult r = monte_carlo_sweep(s, SweepAxis::Tau1, {30}, 200, kSeed + 3);
    const auto& p = r.points.front();
    report(3, p.rmse_block1.value <= 5e-3,
           fmt("rmse %.3e m over %zu trials (%zu failed)", p.rmse_block1.value, p.rmse_block1.used,
               p.rmse_block1.excluded));
}

void interference_insensitivity()
{
    ScenarioConfig s;
    s.time.tau1 = 20;
    s.set_semi_passive_side(4);
    s.tx_power = PowerLevel::from_dbm(20.0);
    const double r64 = monte_carlo_sweep(s, SweepAxis::MPassive, {64}, 500, kSeed + 4).points[0].rmse_block1.value;
    const double r256 = monte_carlo_sweep(s, SweepAxis::MPassive, {256}, 500, kSeed + 4).points[0].rmse_block1.value;
    const double change = std::abs(r256 - r64) / r64;
    report(4, change < 0.10, fmt("rmse %.3e m (M1=64) vs %.3e m (M1=256), change %.1f%%", r64, r256, 100.0 * change));
}

void isac_optimality()
{
    ScenarioConfig s;
    double worst_rel = 0.0;
    for (std::size_t t = 0; t < 20; ++t) {
        const std::uint64_t seed = derive_seed(kSeed, 5, t);
        RandomStream rng(seed);
        BlockOptions opt;
        opt.injected_location = s.user;
        const BlockResult r = run_coherence_block(s, s.time, s.radio(), rng, opt);
        RandomStream channel_rng(seed);
        const ChannelSet ch = synth_channels(s, channel_rng);
        const double m1 = static_cast<double>(s.irs_arrays[0].size());
        const double gain = std::norm(ch.gains.i2b[0] * ch.gains.u2i[0]);
        const double closed = std::log2(1.0 + s.tx_power.mw() * static_cast<double>(s.bs_antennas) * m1 * m1 *
                                                  gain / s.noise_power.mw());
        worst_rel = std::max(worst_rel, std::abs(r.avg_block2 - closed) / closed);
    }

    ScenarioConfig e;
    e.set_semi_passive_side(6);
    e.tx_power = PowerLevel::from_dbm(20.0);
    SweepOptions ref;
    ref.reference_rates = true;
    const auto& p = monte_carlo_sweep(e, SweepAxis::TxPower, {20}, 200, kSeed + 5, ref).points[0];
    const double shortfall = (p.rate_optimal_isac.mean - p.rate_block2.mean) / p.rate_optimal_isac.mean;
    report(5, worst_rel <= 1e-9 && std::abs(shortfall) <= 0.02,
           fmt("injected worst relative error %.2e; estimated %.4f vs optimum %.4f bit/s/Hz (%.2f%% short)",
               worst_rel, p.rate_block2.mean, p.rate_optimal_isac.mean, 100.0 * shortfall));
}

void bisection_vs_grid()
{
    using std::numbers::pi;
    const ScenarioConfig s;
    const CVector w = isac_combiner(s.bs, s.irs[0], s.bs_antennas);
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t pass = 0;
    std::size_t pass_early = 0;
    double worst = 1.0;
    for (std::size_t t = 0; t < 100; ++t) {
        RandomStream rng(derive_seed(kSeed, 6, t));
        const ChannelSet ch = synth_channels(s, rng);
        const auto g = per_surface_gains(w, pc_phase_beams(s.user, s, {}).stacked(), ch);
        const auto power = [&](const PhaseTuple& x) {
            return std::norm(g[0] + g[1] * std::polar(1.0, x.phi2) + g[2] * std::polar(1.0, x.phi3));
        };
        double grid = 0.0;
        for (int i = 0; i < 256; ++i)
            for (int j = 0; j < 256; ++j) grid = std::max(grid, power({2.0 * pi * i / 256.0, 2.0 * pi * j / 256.0}));
        const double full = power(bisection_training(power, s.training.epsilon_mw, 8, 1, false).final_tuple) / grid;
        const double early = power(bisection_training(power, s.training.epsilon_mw, 8).final_tuple) / grid;
        worst = std::min(worst, full);
        pass += full >= 0.99;
        pass_early += early >= 0.99;
    }
    const double elapsed = seconds_since(t0);
    report(6, pass == 100 && elapsed < 60.0,
           fmt("%zu/100 draws reach 0.99 of the grid maximum in 8 rounds, worst %.4f, %.2f s "
               "(%zu/100 with early stop)",
               pass, worst, elapsed, pass_early));
}

void pc_upper_bound()
{
    ScenarioConfig s;
    s.tx_power = PowerLevel::from_dbm(20.0);
    BlockOptions opt;
    opt.noiseless_feedback = true;
    std::size_t bounded = 0;
    double worst_gap = 0.0;
    double mean_gap = 0.0;
    const std::size_t trials = 100;
    for (std::size_t t = 0; t < trials; ++t) {
        RandomStream rng(derive_seed(kSeed, 7, t));
        const BlockResult r = run_coherence_block(s, s.time, s.radio(), rng, opt);
        bounded += r.trained_pc_rate <= r.upper_bound_pc_rate * (1.0 + 1e-12);
        const double gap = (r.upper_bound_pc_rate - r.trained_pc_rate) / r.upper_bound_pc_rate;
        worst_gap = std::max(worst_gap, gap);
        mean_gap += gap / static_cast<double>(trials);
    }
    report(7, bounded == trials && mean_gap <= 0.01,
           fmt("%zu/%zu trials below the bound, gap mean %.3f%% (worst trial %.3f%%)", bounded, trials, 100.0 * mean_gap,
               100.0 * worst_gap));
}

std::size_t argmax_mean(const std::vector<SweepPoint>& points, const char* metric)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
        if (metric_of(points[i], metric).mean > metric_of(points[best], metric).mean) best = i;
    return best;
}

void protocol_tradeoff()
{
    const ScenarioConfig base;
    ExperimentPreset split = preset("fig11");
    split.series = {{SweepAxis::TxPower, 10}};
    const ExperimentRun a = run_experiment(split, base, 1000, kSeed + 8);
    const auto& pa = a.results[0].points;
    const double best_ratio = pa[argmax_mean(pa, "rate_total")].axis_value;
    const bool peak_ok = best_ratio >= 0.1 - 1e-12 && best_ratio <= 0.4 + 1e-12;

    const ExperimentRun b = run_experiment(preset("fig12"), base, 1000, kSeed + 9);
    bool decreasing = true;
    std::ostringstream detail;
    for (std::size_t k = 0; k < b.results.size(); ++k) {
        const auto& pb = b.results[k].points;
        detail << fmt(" %s: %.3f..%.3f", b.series_labels[k].c_str(), pb.front().rate_total.mean,
                      pb.back().rate_total.mean);
        for (std::size_t i = 1; i < pb.size(); ++i) {
            if (pb[i].rate_total.mean < pb[i - 1].rate_total.mean) continue;
            decreasing = false;
            detail << fmt(" rises %.1f->%.1f", pb[i - 1].axis_value, pb[i].axis_value);
        }
    }
    report(8, peak_ok && decreasing,
           fmt("T1/T argmax %.1f at 10 dBm (rate %.3f); tau1/T1 decreasing=%d;", best_ratio,
               pa[argmax_mean(pa, "rate_total")].rate_total.mean, decreasing) +
               detail.str());
}

void isac_vs_benchmark()
{
    const ScenarioConfig base;
    const ExperimentRun run = run_experiment(preset("fig13"), base, 200, kSeed + 10);
    const auto& p = run.results[0].points;
    bool dominates = true;
    double peak_isac = 0.0;
    double peak_bench = 0.0;
    for (const auto& q : p) {
        dominates = dominates && q.rate_total.mean >= q.rate_total_benchmark.mean;
        peak_isac = std::max(peak_isac, q.rate_total.mean);
        peak_bench = std::max(peak_bench, q.rate_total_benchmark.mean);
    }
    report(9, dominates && peak_isac > peak_bench,
           fmt("ISAC >= benchmark at every ratio: %d; peaks %.3f vs %.3f bit/s/Hz", dominates, peak_isac,
               peak_bench));
}

void invariants()
{
    std::ostringstream log;
    const bool ok = run_selftest(log);
    std::string failures;
    std::istringstream lines(log.str());
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line);) {
        ++count;
        if (line.rfind("FAIL", 0) == 0) failures += " [" + line + "]";
    }
    report(10, ok, fmt("%zu invariant checks", count) + (failures.empty() ? std::string{} : failures));
}

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    try {
        noiseless_limit();
        power_trend();
        millimetre_point();
        interference_insensitivity();
        isac_optimality();
        bisection_vs_grid();
        pc_upper_bound();
        protocol_tradeoff();
        isac_vs_benchmark();
        invariants();
    } catch (const std::exception& e) {
        std::cout << "FAIL aborted: " << e.what() << std::endl;
        return 1;
    }
    std::cout << fmt("%d of 10 criteria failed, %.1f s", g_failed, seconds_since(t0)) << std::endl;
    return g_failed == 0 ? 0 : 1;
}
