// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/channel.hpp"

#include <cmath>

#include "irsisac/error.hpp"
#include "irsisac/scenario.hpp"

namespace irsisac {

CVector ula_response(double u, std::size_t n)
{
    CVector a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = std::polar(1.0, static_cast<double>(k) * u);
    return a;
}

CVector ura_response(double u, double v, const ArraySpec& spec)
{
    return kron(ula_response(u, spec.n_y), ula_response(v, spec.n_z));
}

CVector ura_response(const EffectiveAngles& angles, const ArraySpec& spec)
{
    return ura_response(angles.u, angles.v, spec);
}

double path_amplitude(double d, const PathGainModel& model)
{
    if (!(d > 0.0)) throw Error(ErrorKind::InvalidInput, "path distance must be positive");
    const double loss_db = model.ref_loss_db + 10.0 * model.exponent * std::log10(d);
    return std::pow(10.0, -loss_db / 20.0);
}

cplx path_gain(double d, const PathGainModel& model, RandomStream& rng)
{
    const double amplitude = path_amplitude(d, model);
    return std::polar(amplitude, rng.phase());
}

ChannelSet synth_channels(const ScenarioConfig& scenario, RandomStream& rng)
{
    const double ratio = scenario.spacing_over_lambda;
    ChannelSet ch;
    ch.n_bs = scenario.bs_antennas;
    ch.arrays = scenario.irs_arrays;
    auto& angles = ch.true_angles;

    for (std::size_t i = 0; i < 3; ++i) {
        const Position& q = scenario.irs[i];
        angles.bs_arrival[i] = to_effective(direction_cosines(scenario.bs, q), ratio).u;
        angles.i2b_departure[i] = to_effective(departure_cosines(q, scenario.bs), ratio);
        angles.user_arrival[i] = to_effective(direction_cosines(q, scenario.user), ratio);
    }
    for (std::size_t k = 0; k < 2; ++k) {
        const Position& q = scenario.irs[k + 1];
        angles.i2i_arrival[k] = to_effective(direction_cosines(q, scenario.irs[0]), ratio);
        angles.i2i_departure[k] = to_effective(departure_cosines(scenario.irs[0], q), ratio);
    }

    for (std::size_t i = 0; i < 3; ++i)
        ch.gains.i2b[i] = path_gain(distance(scenario.irs[i], scenario.bs), scenario.loss_irs_bs, rng);
    for (std::size_t i = 0; i < 3; ++i)
        ch.gains.u2i[i] = path_gain(distance(scenario.irs[i], scenario.user), scenario.loss_user_irs, rng);
    for (std::size_t k = 0; k < 2; ++k)
        ch.gains.i2i[k] = path_gain(distance(scenario.irs[k + 1], scenario.irs[0]), scenario.loss_irs_irs, rng);

    for (std::size_t i = 0; i < 3; ++i) {
        const CVector a = scaled(ula_response(angles.bs_arrival[i], ch.n_bs), ch.gains.i2b[i]);
        ch.h_i2b[i] = CMatrix::outer(a, ura_response(angles.i2b_departure[i], ch.arrays[i]));
        ch.h_u2i[i] = scaled(ura_response(angles.user_arrival[i], ch.arrays[i]), ch.gains.u2i[i]);
    }
    for (std::size_t k = 0; k < 2; ++k) {
        const CVector b = scaled(ura_response(angles.i2i_arrival[k], ch.arrays[k + 1]), ch.gains.i2i[k]);
        ch.h_i2i[k] = CMatrix::outer(b, ura_response(angles.i2i_departure[k], ch.arrays[0]));
    }
    return ch;
}

} // namespace irsisac
