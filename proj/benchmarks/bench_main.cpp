// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include <benchmark/benchmark.h>

#include "irsisac/beamforming.hpp"
#include "irsisac/protocol.hpp"
#include "irsisac/sensing.hpp"

using namespace irsisac;

namespace {

CMatrix random_hermitian(std::size_t n, RandomStream& rng)
{
    CMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.complex_normal();
    return a * a.adjoint();
}

void BM_HermitianEig(benchmark::State& state)
{
    RandomStream rng(1);
    const CMatrix a = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_HermitianEig)->Arg(9)->Arg(16)->Arg(36);

void BM_SenseLocation(benchmark::State& state)
{
    ScenarioConfig s;
    s.set_semi_passive_side(static_cast<std::size_t>(state.range(0)));
    RandomStream rng(2);
    const ChannelSet ch = synth_channels(s, rng);
    const CVector theta = random_phase_beam(s.irs_arrays[0].size(), rng);
    const auto batches = simulate_sensing_snapshots(ch, theta, s.radio(), s.time.tau1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(sense_location(batches[0], batches[1], s));
}
BENCHMARK(BM_SenseLocation)->Arg(4)->Arg(6);

void BM_CoherenceBlock(benchmark::State& state)
{
    const ScenarioConfig s;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RandomStream rng(derive_seed(3, 0, seed++));
        benchmark::DoNotOptimize(run_coherence_block(s, s.time, s.radio(), rng));
    }
}
BENCHMARK(BM_CoherenceBlock);

void BM_BisectionTraining(benchmark::State& state)
{
    const PowerProbe probe = [](const PhaseTuple& t) {
        return std::norm(1.0 + std::polar(0.8, t.phi2 + 0.4) + std::polar(0.6, t.phi3 - 1.1));
    };
    for (auto _ : state) benchmark::DoNotOptimize(bisection_training(probe, 1e-12, 8));
}
BENCHMARK(BM_BisectionTraining);

} // namespace

BENCHMARK_MAIN();
