// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/csv.hpp"

#include <cstdio>
#include <ostream>

namespace irsisac {

std::string format_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows)
{
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.experiment << ',' << r.axis << ',' << format_number(r.axis_value) << ',' << r.metric << ','
            << format_number(r.value) << ',' << r.trials << ',' << format_number(r.stderr_) << ',' << r.seed << '\n';
    }
}

} // namespace irsisac
