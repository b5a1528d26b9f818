// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irsisac Authors

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsisac/config.hpp"
#include "irsisac/csv.hpp"
#include "irsisac/error.hpp"
#include "irsisac/experiments.hpp"
#include "irsisac/protocol.hpp"
#include "irsisac/random.hpp"
#include "irsisac/selftest.hpp"

namespace irsisac {

namespace {

struct CommonFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> threads;
    std::string out;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& f)
{
    cmd->add_option("--config", f.config, "JSON scenario file");
    cmd->add_option("--seed", f.seed, "base seed");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per point");
    cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    cmd->add_option("--out", f.out, "output file");
    cmd->add_flag("--json", f.json, "structured output");
}

ScenarioConfig load_scenario(const CommonFlags& f)
{
    ScenarioConfig s = f.config.empty() ? ScenarioConfig{} : load_config(f.config);
    if (f.seed) s.seed = *f.seed;
    if (f.trials) s.trials = *f.trials;
    if (f.threads) s.threads = *f.threads;
    s.validate();
    return s;
}

std::vector<double> parse_values(const std::string& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw Error(ErrorKind::InvalidInput, "bad value '" + item + "' in --values");
        values.push_back(v);
    }
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "--values is empty");
    return values;
}

nlohmann::json outcome_json(const SensingOutcome& o)
{
    nlohmann::json j;
    j["ok"] = o.ok();
    if (o.estimate) {
        const auto& p = o.estimate->position;
        j["position"] = {p.x, p.y, p.z};
        j["distances"] = {o.estimate->distances[0], o.estimate->distances[1]};
        j["radicand_clamped"] = o.estimate->radicand_clamped;
    } else {
        j["failure"] = o.failure ? std::string(to_string(*o.failure)) : std::string("unknown");
        j["message"] = o.message;
    }
    return j;
}

nlohmann::json block_json(const BlockResult& r, const ScenarioConfig& s)
{
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& round : r.training.rounds) {
        nlohmann::json cands = nlohmann::json::array();
        for (std::size_t k = 0; k < round.candidates.size(); ++k)
            cands.push_back({{"phi2", round.candidates[k].phi2},
                             {"phi3", round.candidates[k].phi3},
                             {"power_mw", round.powers[k]}});
        rounds.push_back({{"candidates", cands}, {"winner", round.winner}});
    }
    return {
        {"seed", s.seed},
        {"time", {{"T", s.time.total}, {"T1", s.time.isac}, {"tau1", s.time.tau1}}},
        {"user", {s.user.x, s.user.y, s.user.z}},
        {"loc_block1", outcome_json(r.loc_block1)},
        {"loc_block2", outcome_json(r.loc_block2)},
        {"training",
         {{"rounds", rounds},
          {"final_tuple", {r.training.final_tuple.phi2, r.training.final_tuple.phi3}},
          {"slots_consumed", r.training.slots_consumed}}},
        {"avg_rate",
         {{"block1", r.avg_block1},
          {"block2", r.avg_block2},
          {"isac", r.avg_isac},
          {"pc", r.avg_pc},
          {"total", r.avg_total}}},
        {"probe_slots", r.probe_slots},
        {"exploit_slots", r.exploit_slots},
        {"trained_pc_rate", r.trained_pc_rate},
        {"upper_bound_pc_rate", r.upper_bound_pc_rate},
        {"rates", r.rates},
    };
}

void print_block_summary(std::ostream& out, const BlockResult& r, const ScenarioConfig& s)
{
    auto loc = [&](const SensingOutcome& o) {
        if (!o.ok()) return std::string("failed (") + o.message + ")";
        return "error " + format_number(distance(o.estimate->position, s.user)) + " m";
    };
    out << "block 1 location   " << loc(r.loc_block1) << '\n'
        << "block 2 location   " << loc(r.loc_block2) << '\n'
        << "rate block 1       " << format_number(r.avg_block1) << " bit/s/Hz\n"
        << "rate block 2       " << format_number(r.avg_block2) << " bit/s/Hz\n"
        << "rate PC            " << format_number(r.avg_pc) << " bit/s/Hz\n"
        << "rate total         " << format_number(r.avg_total) << " bit/s/Hz\n"
        << "training rounds    " << r.training.rounds.size() << " (" << r.probe_slots << " slots)\n"
        << "PC upper bound     " << format_number(r.upper_bound_pc_rate) << " bit/s/Hz\n";
}

void print_table(std::ostream& out, const ExperimentPreset& preset, const ExperimentRun& run)
{
    out << preset.name << ": " << preset.title << '\n';
    for (std::size_t s = 0; s < run.results.size(); ++s) {
        if (!run.series_labels[s].empty()) out << "  [" << run.series_labels[s] << "]\n";
        out << "  " << std::left << std::setw(14) << to_string(preset.axis);
        for (const auto& m : preset.metrics) out << std::setw(22) << m;
        out << '\n';
        for (const auto& p : run.results[s].points) {
            out << "  " << std::setw(14) << format_number(p.axis_value);
            for (const auto& m : preset.metrics) out << std::setw(22) << format_number(metric_of(p, m).mean);
            out << '\n';
        }
    }
    out << std::right;
}

int emit_experiment(const ExperimentPreset& preset, const CommonFlags& f, std::ostream& out)
{
    const ScenarioConfig s = load_scenario(f);
    const ExperimentRun run = run_experiment(preset, s, s.trials, s.seed);
    if (!f.out.empty()) {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + f.out);
        write_csv(file, run.rows);
    }
    if (f.json) {
        write_csv(out, run.rows);
    } else {
        print_table(out, preset, run);
        if (!f.out.empty()) out << "wrote " << run.rows.size() << " rows to " << f.out << '\n';
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Link-level simulator for a distributed semi-passive IRS ISAC system", "irsisac"};
    app.require_subcommand(1);

    CommonFlags block_flags;
    auto* block = app.add_subcommand("block", "simulate one coherence block");
    add_common(block, block_flags);

    CommonFlags sweep_flags;
    std::string axis_name;
    std::string values_text;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over one axis");
    add_common(sweep, sweep_flags);
    sweep->add_option("--axis", axis_name, "tx_power, tau1, m_semi, m_passive, user_distance, t1_over_t, tau1_over_t1")
        ->required();
    sweep->add_option("--values", values_text, "comma separated axis values")->required();

    std::map<std::string, CommonFlags> preset_flags;
    std::vector<std::pair<CLI::App*, const ExperimentPreset*>> preset_cmds;
    for (const auto& p : experiment_presets()) {
        auto* cmd = app.add_subcommand(p.name, p.title);
        add_common(cmd, preset_flags[p.name]);
        preset_cmds.emplace_back(cmd, &p);
    }

    auto* selftest = app.add_subcommand("selftest", "run the invariant checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*block) {
            const ScenarioConfig s = load_scenario(block_flags);
            RandomStream rng(s.seed);
            const BlockResult r = run_coherence_block(s, s.time, s.radio(), rng);
            if (block_flags.json || !block_flags.out.empty()) {
                const std::string doc = block_json(r, s).dump(2) + "\n";
                if (!block_flags.out.empty()) {
                    std::ofstream file(block_flags.out, std::ios::binary);
                    file << doc;
                }
                if (block_flags.json) out << doc;
            }
            if (!block_flags.json) print_block_summary(out, r, s);
            return 0;
        }
        if (*sweep) {
            const auto axis = parse_axis(axis_name);
            if (!axis) throw Error(ErrorKind::InvalidInput, "unknown axis '" + axis_name + "'");
            return emit_experiment(custom_sweep(*axis, parse_values(values_text)), sweep_flags, out);
        }
        for (const auto& [cmd, preset] : preset_cmds)
            if (*cmd) return emit_experiment(*preset, preset_flags[preset->name], out);
        if (*selftest) return run_selftest(out) ? 0 : 1;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace irsisac
