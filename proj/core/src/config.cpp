// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "irsisac/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "irsisac/error.hpp"

namespace irsisac {

using nlohmann::json;

namespace {

void expect_keys(const json& j, std::string_view section, std::initializer_list<std::string_view> allowed)
{
    if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string(section) + ": expected an object");
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw Error(ErrorKind::ParseError, "unknown key '" + std::string(section) + "." + item.key() + "'");
    }
}

template <typename T>
void read(const json& j, const char* key, T& out, std::string_view section)
{
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorKind::ParseError, "field '" + std::string(section) + "." + key + "' has the wrong type");
    }
}

Position read_position(const json& j, std::string_view field)
{
    if (!j.is_array() || j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number(); }))
        throw Error(ErrorKind::ParseError, "field '" + std::string(field) + "' must be [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json write_position(const Position& p) { return json::array({p.x, p.y, p.z}); }

void read_loss(const json& j, const char* key, PathGainModel& model)
{
    if (!j.contains(key)) return;
    const std::string section = std::string("path_loss.") + key;
    expect_keys(j.at(key), section, {"ref_loss_db", "exponent"});
    read(j.at(key), "ref_loss_db", model.ref_loss_db, section);
    read(j.at(key), "exponent", model.exponent, section);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig c;
    if (std::all_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); })) {
        c.validate();
        return c;
    }

    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    expect_keys(root, "config",
                {"geometry", "arrays", "micro", "path_loss", "radio", "time", "training", "run", "policies", "numerics"});

    if (root.contains("geometry")) {
        const json& g = root.at("geometry");
        expect_keys(g, "geometry", {"bs", "irs", "user", "spacing_over_lambda"});
        if (g.contains("bs")) c.bs = read_position(g.at("bs"), "geometry.bs");
        if (g.contains("user")) c.user = read_position(g.at("user"), "geometry.user");
        if (g.contains("irs")) {
            const json& irs = g.at("irs");
            if (!irs.is_array() || irs.size() != 3)
                throw Error(ErrorKind::ParseError, "field 'geometry.irs' must list three positions");
            for (std::size_t i = 0; i < 3; ++i) c.irs[i] = read_position(irs[i], "geometry.irs");
        }
        read(g, "spacing_over_lambda", c.spacing_over_lambda, "geometry");
    }
    if (root.contains("arrays")) {
        const json& a = root.at("arrays");
        expect_keys(a, "arrays", {"bs_antennas", "irs"});
        read(a, "bs_antennas", c.bs_antennas, "arrays");
        if (a.contains("irs")) {
            const json& irs = a.at("irs");
            if (!irs.is_array() || irs.size() != 3)
                throw Error(ErrorKind::ParseError, "field 'arrays.irs' must list three [n_y, n_z] pairs");
            for (std::size_t i = 0; i < 3; ++i) {
                if (!irs[i].is_array() || irs[i].size() != 2 || !irs[i][0].is_number_unsigned() ||
                    !irs[i][1].is_number_unsigned())
                    throw Error(ErrorKind::ParseError, "field 'arrays.irs' entries must be [n_y, n_z]");
                c.irs_arrays[i] = ArraySpec::ura(irs[i][0].get<std::size_t>(), irs[i][1].get<std::size_t>());
            }
        }
    }
    if (root.contains("micro")) {
        const json& m = root.at("micro");
        expect_keys(m, "micro", {"q_y", "q_z"});
        read(m, "q_y", c.micro_q_y, "micro");
        read(m, "q_z", c.micro_q_z, "micro");
    }
    if (root.contains("path_loss")) {
        const json& p = root.at("path_loss");
        expect_keys(p, "path_loss", {"irs_bs", "user_irs", "irs_irs"});
        read_loss(p, "irs_bs", c.loss_irs_bs);
        read_loss(p, "user_irs", c.loss_user_irs);
        read_loss(p, "irs_irs", c.loss_irs_irs);
    }
    if (root.contains("radio")) {
        const json& r = root.at("radio");
        expect_keys(r, "radio", {"tx_power_dbm", "noise_power_dbm"});
        double tx = c.tx_power.dbm();
        double noise = c.noise_power.dbm();
        read(r, "tx_power_dbm", tx, "radio");
        read(r, "noise_power_dbm", noise, "radio");
        c.tx_power = PowerLevel::from_dbm(tx);
        c.noise_power = PowerLevel::from_dbm(noise);
    }
    if (root.contains("time")) {
        const json& t = root.at("time");
        expect_keys(t, "time", {"T", "T1", "tau1"});
        read(t, "T", c.time.total, "time");
        read(t, "T1", c.time.isac, "time");
        read(t, "tau1", c.time.tau1, "time");
    }
    if (root.contains("training")) {
        const json& t = root.at("training");
        expect_keys(t, "training", {"epsilon_mw", "max_rounds", "probes_per_tuple", "early_stop"});
        read(t, "epsilon_mw", c.training.epsilon_mw, "training");
        read(t, "max_rounds", c.training.max_rounds, "training");
        read(t, "probes_per_tuple", c.training.probes_per_tuple, "training");
        read(t, "early_stop", c.training.early_stop, "training");
    }
    if (root.contains("run")) {
        const json& r = root.at("run");
        expect_keys(r, "run", {"trials", "seed", "threads"});
        read(r, "trials", c.trials, "run");
        read(r, "seed", c.seed, "run");
        read(r, "threads", c.threads, "run");
    }
    if (root.contains("policies")) {
        const json& p = root.at("policies");
        expect_keys(p, "policies", {"rmse_failure", "rmse_penalty_m"});
        std::string policy = c.rmse_failure == FailurePolicy::Exclude ? "exclude" : "penalty";
        read(p, "rmse_failure", policy, "policies");
        if (policy == "exclude") {
            c.rmse_failure = FailurePolicy::Exclude;
        } else if (policy == "penalty") {
            c.rmse_failure = FailurePolicy::Penalty;
        } else {
            throw Error(ErrorKind::InvalidConfig, "policies.rmse_failure must be 'exclude' or 'penalty'");
        }
        read(p, "rmse_penalty_m", c.rmse_penalty_m, "policies");
    }
    if (root.contains("numerics")) {
        const json& n = root.at("numerics");
        expect_keys(n, "numerics", {"eig_tolerance", "eig_max_sweeps", "hermitian_tolerance"});
        read(n, "eig_tolerance", c.eig.tolerance, "numerics");
        read(n, "eig_max_sweeps", c.eig.max_sweeps, "numerics");
        read(n, "hermitian_tolerance", c.eig.hermitian_tolerance, "numerics");
    }

    c.validate();
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& c)
{
    auto loss = [](const PathGainModel& m) { return json{{"ref_loss_db", m.ref_loss_db}, {"exponent", m.exponent}}; };
    json arrays = json::array();
    for (const auto& a : c.irs_arrays) arrays.push_back(json::array({a.n_y, a.n_z}));

    json root{
        {"geometry",
         {{"bs", write_position(c.bs)},
          {"irs", json::array({write_position(c.irs[0]), write_position(c.irs[1]), write_position(c.irs[2])})},
          {"user", write_position(c.user)},
          {"spacing_over_lambda", c.spacing_over_lambda}}},
        {"arrays", {{"bs_antennas", c.bs_antennas}, {"irs", arrays}}},
        {"micro", {{"q_y", c.micro_q_y}, {"q_z", c.micro_q_z}}},
        {"path_loss",
         {{"irs_bs", loss(c.loss_irs_bs)}, {"user_irs", loss(c.loss_user_irs)}, {"irs_irs", loss(c.loss_irs_irs)}}},
        {"radio", {{"tx_power_dbm", c.tx_power.dbm()}, {"noise_power_dbm", c.noise_power.dbm()}}},
        {"time", {{"T", c.time.total}, {"T1", c.time.isac}, {"tau1", c.time.tau1}}},
        {"training",
         {{"epsilon_mw", c.training.epsilon_mw},
          {"max_rounds", c.training.max_rounds},
          {"probes_per_tuple", c.training.probes_per_tuple},
          {"early_stop", c.training.early_stop}}},
        {"run", {{"trials", c.trials}, {"seed", c.seed}, {"threads", c.threads}}},
        {"policies",
         {{"rmse_failure", c.rmse_failure == FailurePolicy::Exclude ? "exclude" : "penalty"},
          {"rmse_penalty_m", c.rmse_penalty_m}}},
        {"numerics",
         {{"eig_tolerance", c.eig.tolerance},
          {"eig_max_sweeps", c.eig.max_sweeps},
          {"hermitian_tolerance", c.eig.hermitian_tolerance}}},
    };
    return root.dump(2) + "\n";
}

} // namespace irsisac
