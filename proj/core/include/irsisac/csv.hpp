// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace irsisac {

struct CsvRow {
    std::string experiment;
    std::string axis;
    double axis_value = 0.0;
    std::string metric;
    double value = 0.0;
    std::size_t trials = 0;
    double stderr_ = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "experiment,axis,axis_value,metric,value,trials,stderr,seed";

/// Writes the header then one line per row. Numbers use %.12g, so output is
/// byte-identical for identical rows.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

std::string format_number(double value);

} // namespace irsisac
