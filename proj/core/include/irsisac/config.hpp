// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "irsisac/scenario.hpp"

namespace irsisac {

/// Parses a JSON scenario document. Absent fields keep their defaults; an
/// empty document yields the default scenario. Throws Error(ParseError) with
/// line/column on malformed input or unknown keys, and Error(InvalidConfig)
/// naming the field on constraint violations.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file. A missing file is an Error(InvalidInput).
ScenarioConfig load_config(const std::filesystem::path& path);

/// Serialises every field; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

} // namespace irsisac
