// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace irsisac {

/// SplitMix64 finaliser. Used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Trial seed = splitmix64(splitmix64(splitmix64(base) ^ axis) ^ trial).
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t axis_index,
                                    std::uint64_t trial_index) noexcept
{
    return splitmix64(splitmix64(splitmix64(base_seed) ^ axis_index) ^ trial_index);
}

/// Random stream with portable draws: uniforms from the top 53 bits of
/// mt19937_64 and normals via Box-Muller, so sequences do not depend on the
/// standard library's distribution implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform phase on [0, 2pi).
    double phase() noexcept { return 2.0 * std::numbers::pi * uniform(); }

    double normal() noexcept
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_normal(double variance = 1.0) noexcept
    {
        const double s = std::sqrt(variance / 2.0);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    std::complex<double> unit_phasor() noexcept { return std::polar(1.0, phase()); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace irsisac
