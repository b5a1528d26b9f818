// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/scenario.hpp"

#include <cmath>
#include <string>

#include "irsisac/error.hpp"

namespace irsisac {

double dbm_to_mw(double dbm) noexcept { return std::pow(10.0, dbm / 10.0); }

PowerLevel PowerLevel::from_dbm(double dbm)
{
    if (!std::isfinite(dbm)) throw Error(ErrorKind::InvalidConfig, "power level must be finite");
    PowerLevel p;
    p.dbm_ = dbm;
    p.mw_ = dbm_to_mw(dbm);
    return p;
}

void TimeBudget::validate() const
{
    if (tau1 < 1) throw Error(ErrorKind::InvalidConfig, "time: 1 <= tau1 violated");
    if (tau1 >= isac) throw Error(ErrorKind::InvalidConfig, "time: tau1 < T1 violated");
    if (isac >= total) throw Error(ErrorKind::InvalidConfig, "time: T1 < T violated");
}

std::size_t ScenarioConfig::micro_qy_for(std::size_t index) const noexcept
{
    return micro_q_y != 0 ? micro_q_y : irs_arrays[index].n_y - 1;
}

std::size_t ScenarioConfig::micro_qz_for(std::size_t index) const noexcept
{
    return micro_q_z != 0 ? micro_q_z : irs_arrays[index].n_z - 1;
}

void ScenarioConfig::set_semi_passive_side(std::size_t n)
{
    irs_arrays[1] = ArraySpec::ura(n, n);
    irs_arrays[2] = ArraySpec::ura(n, n);
}

double horizontal_distance(const Position& a, const Position& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorKind::InvalidConfig, what);
}

bool finite(const Position& p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

} // namespace

void ScenarioConfig::validate() const
{
    require(finite(bs) && finite(user) && finite(irs[0]) && finite(irs[1]) && finite(irs[2]),
            "geometry: positions must be finite");
    const std::array<Position, 5> points{bs, irs[0], irs[1], irs[2], user};
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            require(distance(points[i], points[j]) > 0.0, "geometry: positions must be distinct");
    require(spacing_over_lambda > 0.0, "geometry.spacing_over_lambda > 0 violated");
    require(bs_antennas >= 1, "arrays.bs_antennas >= 1 violated");
    for (std::size_t i = 0; i < 3; ++i)
        require(irs_arrays[i].n_y >= 1 && irs_arrays[i].n_z >= 1, "arrays.irs: element counts >= 1 violated");
    for (std::size_t i = 1; i < 3; ++i) {
        const std::size_t qy = micro_qy_for(i);
        const std::size_t qz = micro_qz_for(i);
        require(qy >= 2 && qy <= irs_arrays[i].n_y, "micro.q_y: 2 <= q_y <= n_y violated");
        require(qz >= 2 && qz <= irs_arrays[i].n_z, "micro.q_z: 2 <= q_z <= n_z violated");
        require(qy * qz >= 3, "micro: q_y * q_z >= 3 violated");
    }
    for (const auto* m : {&loss_irs_bs, &loss_user_irs, &loss_irs_irs})
        require(m->ref_loss_db >= 0.0 && m->exponent > 0.0, "path_loss: ref_loss_db >= 0 and exponent > 0 violated");
    time.validate();
    require(training.epsilon_mw > 0.0, "training.epsilon_mw > 0 violated");
    require(training.max_rounds >= 1, "training.max_rounds >= 1 violated");
    require(training.probes_per_tuple >= 1, "training.probes_per_tuple >= 1 violated");
    require(trials >= 1, "trials >= 1 violated");
    require(rmse_penalty_m >= 0.0, "policies.rmse_penalty_m >= 0 violated");
    require(eig.tolerance > 0.0 && eig.max_sweeps >= 1, "numerics: eig tolerance > 0 and max_sweeps >= 1 violated");
}

} // namespace irsisac
