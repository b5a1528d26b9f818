// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irsisac {

enum class ErrorKind {
    InvalidInput,
    InvalidConfig,
    DegenerateGeometry,
    SpatialAliasing,
    InvalidDirection,
    SubspaceDegenerate,
    AmbiguousDisambiguation,
    ParallelBearings,
    InconsistentGeometry,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace irsisac
