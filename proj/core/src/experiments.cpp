// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "irsisac/error.hpp"

namespace irsisac {

namespace {

const std::vector<std::string> kRmseMetrics{"rmse_block1", "rmse_block2", "failures_block1"};
const std::vector<std::string> kProtocolMetrics{"rate_block1", "rate_block2", "rate_isac", "rate_pc", "rate_total"};

std::vector<std::string> join(std::initializer_list<const std::vector<std::string>*> parts)
{
    std::vector<std::string> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

void long_block(ScenarioConfig& s)
{
    s.time.total = 2000;
    s.time.isac = 200;
    s.time.tau1 = 20;
}

std::vector<ExperimentPreset> build_presets()
{
    std::vector<ExperimentPreset> presets;
    const std::vector<double> powers{0, 5, 10, 15, 20, 22};
    const std::vector<double> ratios{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<SeriesSpec> power_series{{SweepAxis::TxPower, 0}, {SweepAxis::TxPower, 10}, {SweepAxis::TxPower, 20}};

    presets.push_back({"fig6", "RMSE versus transmit power", SweepAxis::TxPower, powers,
                       {{SweepAxis::MSemi, 16}, {SweepAxis::MSemi, 36}}, {}, {}, kRmseMetrics});
    presets.push_back({"fig7", "RMSE versus sensing time", SweepAxis::Tau1, {10, 20, 30, 40, 50},
                       {{SweepAxis::MPassive, 64}, {SweepAxis::MPassive, 256}}, {}, {}, kRmseMetrics});
    presets.push_back({"fig8", "RMSE versus semi-passive elements", SweepAxis::MSemi, {9, 16, 25, 36, 49},
                       {{SweepAxis::Tau1, 10}, {SweepAxis::Tau1, 20}, {SweepAxis::Tau1, 30}}, {}, {}, kRmseMetrics});

    SweepOptions with_refs;
    with_refs.reference_rates = true;
    presets.push_back({"fig9", "ISAC-period rate versus transmit power", SweepAxis::TxPower, powers,
                       {{SweepAxis::MSemi, 16}, {SweepAxis::MSemi, 36}}, with_refs, {},
                       {"rate_isac", "rate_optimal_isac", "rate_random_isac"}});
    presets.push_back({"fig10", "PC-period rate versus passive elements", SweepAxis::MPassive,
                       {64, 100, 144, 196, 256}, {{SweepAxis::MSemi, 16}, {SweepAxis::MSemi, 36}}, with_refs, {},
                       {"rate_pc", "rate_upper_bound_pc", "rate_random_pc"}});
    presets.push_back({"fig11", "average rate versus T1/T", SweepAxis::T1OverT, ratios, power_series, {}, long_block,
                       kProtocolMetrics});
    presets.push_back({"fig12", "average rate versus tau1/T1", SweepAxis::Tau1OverT1, ratios, power_series, {},
                       long_block, kProtocolMetrics});

    SweepOptions compare;
    compare.compare_benchmark = true;
    presets.push_back({"fig13", "ISAC protocol versus benchmark protocol", SweepAxis::T1OverT, ratios,
                       {{SweepAxis::TxPower, 10}}, compare, long_block, {"rate_total", "rate_total_benchmark"}});
    presets.push_back({"distance", "RMSE versus user distance", SweepAxis::UserDistance, {4, 6, 8, 10, 12, 14, 16},
                       {{SweepAxis::MSemi, 25}, {SweepAxis::MSemi, 36}}, {}, {}, kRmseMetrics});
    return presets;
}

} // namespace

std::string SeriesSpec::label() const { return std::string(to_string(axis)) + "=" + format_number(value); }

const std::vector<ExperimentPreset>& experiment_presets()
{
    static const std::vector<ExperimentPreset> presets = build_presets();
    return presets;
}

std::optional<ExperimentPreset> find_preset(std::string_view name)
{
    for (const auto& p : experiment_presets())
        if (p.name == name) return p;
    return std::nullopt;
}

ExperimentPreset custom_sweep(SweepAxis axis, std::vector<double> values)
{
    ExperimentPreset p;
    p.name = "sweep";
    p.title = "custom sweep";
    p.axis = axis;
    p.values = std::move(values);
    p.metrics = join({&kRmseMetrics, &kProtocolMetrics});
    return p;
}

const std::vector<std::string>& metric_names()
{
    static const std::vector<std::string> names{"rmse_block1",       "rmse_block2",      "failures_block1",
                                                "rate_block1",       "rate_block2",      "rate_isac",
                                                "rate_pc",           "rate_total",       "rate_optimal_isac",
                                                "rate_random_isac",  "rate_random_pc",   "rate_upper_bound_pc",
                                                "rate_total_benchmark"};
    return names;
}

MetricStats metric_of(const SweepPoint& p, std::string_view name)
{
    if (name == "rmse_block1") return {p.rmse_block1.value, 0.0};
    if (name == "rmse_block2") return {p.rmse_block2.value, 0.0};
    if (name == "failures_block1") return {static_cast<double>(p.failures_block1), 0.0};
    if (name == "rate_block1") return p.rate_block1;
    if (name == "rate_block2") return p.rate_block2;
    if (name == "rate_isac") return p.rate_isac;
    if (name == "rate_pc") return p.rate_pc;
    if (name == "rate_total") return p.rate_total;
    if (name == "rate_optimal_isac") return p.rate_optimal_isac;
    if (name == "rate_random_isac") return p.rate_random_isac;
    if (name == "rate_random_pc") return p.rate_random_pc;
    if (name == "rate_upper_bound_pc") return p.rate_upper_bound_pc;
    if (name == "rate_total_benchmark") return p.rate_total_benchmark;
    throw Error(ErrorKind::InvalidInput, "unknown metric '" + std::string(name) + "'");
}

ExperimentRun run_experiment(const ExperimentPreset& preset, const ScenarioConfig& base, std::size_t trials,
                             std::uint64_t seed)
{
    ScenarioConfig prepared = base;
    if (preset.prepare) preset.prepare(prepared);

    std::vector<std::optional<SeriesSpec>> series;
    if (preset.series.empty()) {
        series.emplace_back();
    } else {
        for (const auto& s : preset.series) series.emplace_back(s);
    }

    ExperimentRun run;
    for (const auto& s : series) {
        const ScenarioConfig scenario = s ? apply_axis(prepared, s->axis, s->value) : prepared;
        const std::string label = s ? s->label() : std::string{};
        const std::string experiment = label.empty() ? preset.name : preset.name + "/" + label;

        SweepResult result = monte_carlo_sweep(scenario, preset.axis, preset.values, trials, seed, preset.options);
        for (const auto& point : result.points) {
            for (const auto& metric : preset.metrics) {
                const MetricStats m = metric_of(point, metric);
                run.rows.push_back({experiment, std::string(to_string(preset.axis)), point.axis_value, metric, m.mean,
                                    point.trials, m.stderr_, seed});
            }
        }
        run.series_labels.push_back(label);
        run.results.push_back(std::move(result));
    }
    return run;
}

} // namespace irsisac
