// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irsisac {

/// Entry point of the command-line tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace irsisac
