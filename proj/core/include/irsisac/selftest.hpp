// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <iosfwd>

namespace irsisac {

/// Runs the built-in invariant checks, one line per check. Returns true when all pass.
bool run_selftest(std::ostream& out);

} // namespace irsisac
