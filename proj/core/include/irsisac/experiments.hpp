// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irsisac/csv.hpp"
#include "irsisac/protocol.hpp"
#include "irsisac/scenario.hpp"

namespace irsisac {

/// One curve of a figure: the swept axis is applied on top of this value.
struct SeriesSpec {
    SweepAxis axis = SweepAxis::MSemi;
    double value = 0.0;

    std::string label() const;
};

struct ExperimentPreset {
    std::string name;
    std::string title;
    SweepAxis axis = SweepAxis::TxPower;
    std::vector<double> values;
    std::vector<SeriesSpec> series;
    SweepOptions options{};
    /// Adjusts the base scenario before series and axis values are applied.
    std::function<void(ScenarioConfig&)> prepare;
    /// Metrics written to the CSV, by name.
    std::vector<std::string> metrics;
};

const std::vector<ExperimentPreset>& experiment_presets();
std::optional<ExperimentPreset> find_preset(std::string_view name);

/// Ad hoc single-series sweep with every protocol metric.
ExperimentPreset custom_sweep(SweepAxis axis, std::vector<double> values);

struct ExperimentRun {
    std::vector<std::string> series_labels;
    std::vector<SweepResult> results;
    std::vector<CsvRow> rows;
};

/// Runs every series of the preset. The experiment column of each row is
/// "<name>" or "<name>/<series label>".
ExperimentRun run_experiment(const ExperimentPreset& preset, const ScenarioConfig& base, std::size_t trials,
                             std::uint64_t seed);

/// Looks up a named metric on a sweep point. Throws Error(InvalidInput) if unknown.
MetricStats metric_of(const SweepPoint& point, std::string_view name);

/// Every metric name metric_of understands.
const std::vector<std::string>& metric_names();

} // namespace irsisac
