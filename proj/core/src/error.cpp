// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/error.hpp"

namespace irsisac {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InvalidConfig: return "invalid config";
    case ErrorKind::DegenerateGeometry: return "degenerate geometry";
    case ErrorKind::SpatialAliasing: return "spatial aliasing";
    case ErrorKind::InvalidDirection: return "invalid direction";
    case ErrorKind::SubspaceDegenerate: return "subspace degenerate";
    case ErrorKind::AmbiguousDisambiguation: return "ambiguous disambiguation";
    case ErrorKind::ParallelBearings: return "parallel bearings";
    case ErrorKind::InconsistentGeometry: return "inconsistent geometry";
    case ErrorKind::ParseError: return "parse error";
    }
    return "unknown";
}

} // namespace irsisac
