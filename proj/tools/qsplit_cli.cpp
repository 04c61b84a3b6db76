// Copyright 2026 The qsplit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// qsplit command line: chimera, translate, embed, predict, sweep, eval and
// simulate. Exit status 0 on success, 1 on runtime errors, 2 on usage errors.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "qsplit/aspen/evaluator.hpp"
#include "qsplit/aspen/linker.hpp"
#include "qsplit/aspen/machine_rates.hpp"
#include "qsplit/aspen/parser.hpp"
#include "qsplit/chimera.hpp"
#include "qsplit/embedding.hpp"
#include "qsplit/io.hpp"
#include "qsplit/key_value.hpp"
#include "qsplit/perf_models.hpp"
#include "qsplit/qubo_ising.hpp"
#include "qsplit/sampler_post.hpp"

namespace {

using nlohmann::json;
using namespace qsplit;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Thrown by command bodies for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        auto out = open_output(path);
        out << text;
    }
}

FaultMask load_faults(const std::string& path) {
    const json j = io::read_json_file(path);
    FaultMask mask;
    for (const auto& q : j.value("dead_qubits", json::array())) mask.dead_qubits.insert(q.get<QubitId>());
    for (const auto& c : j.value("dead_couplers", json::array())) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument(path + ": dead coupler must be a pair");
        mask.dead_couplers.insert(make_coupler(c[0].get<QubitId>(), c[1].get<QubitId>()));
    }
    return mask;
}

ChimeraGraph hardware(int m, int n, int l, const std::string& faults) {
    auto g = build_chimera(m, n, l);
    return faults.empty() ? g : apply_faults(g, load_faults(faults));
}

// ---------------------------------------------------------------- chimera

struct ChimeraOpts {
    int m = 12, n = 12, l = 4;
    std::string faults, out;
};

int run_chimera(const ChimeraOpts& o) {
    const auto g = hardware(o.m, o.n, o.l, o.faults);
    const auto stats = graph_stats(g);
    std::string hist;
    for (const auto& [degree, count] : stats.degree_histogram) {
        hist += fmt::format("{}{}:{}", hist.empty() ? "" : ",", degree, count);
    }
    fmt::print("chimera {}x{}x{}: nodes={} edges={} degrees={}\n", o.m, o.n, o.l, stats.nodes, stats.edges, hist);
    if (!o.out.empty()) emit(o.out, io::chimera_to_json(g).dump(2) + "\n");
    return 0;
}

// -------------------------------------------------------------- translate

struct TranslateOpts {
    std::string input, out;
    std::optional<int> bits;
};

int run_translate(const TranslateOpts& o) {
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot read " + o.input);
    auto model = qubo_to_ising(io::read_qubo_text(in));
    json meta = {{"source", o.input}};
    if (o.bits) {
        model = quantize_parameters(model, *o.bits);
        meta["quantized"] = true;
        meta["bits"] = *o.bits;
    } else {
        meta["quantized"] = false;
    }
    json j = io::ising_to_json(model);
    j["metadata"] = meta;
    emit(o.out, j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ embed

struct EmbedOpts {
    std::string input, faults, out;
    int m = 4, n = 4;
    CmrParams cmr;
};

int run_embed(const EmbedOpts& o) {
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot read " + o.input);
    const auto graph = io::read_edge_list(in);
    const auto hw = hardware(o.m, o.n, 4, o.faults);
    const auto found = find_embedding_cmr(graph, hw, o.cmr);
    json params = {{"seed", o.cmr.seed},
                   {"tries", o.cmr.max_tries},
                   {"passes", o.cmr.max_passes},
                   {"penalty", o.cmr.penalty_base},
                   {"m", o.m},
                   {"n", o.n}};
    if (!found) {
        fmt::print(std::cerr, "qsplit embed: no embedding found after {} tries (seed {})\n", o.cmr.max_tries,
                   o.cmr.seed);
        fmt::print("{}\n", json{{"found", false}, {"params", params}}.dump(2));
        return kExitRuntime;
    }
    const auto report = validate_embedding(graph, hw, *found);
    json j = io::embedding_to_json(*found);
    j["found"] = true;
    j["params"] = params;
    j["report"] = io::report_to_json(report);
    if (o.out.empty()) {
        fmt::print("{}\n", j.dump(2));
    } else {
        emit(o.out, io::embedding_to_json(*found).dump(2) + "\n");
        fmt::print("{}\n", json{{"found", true}, {"params", params}, {"report", j["report"]}}.dump(2));
    }
    return report.valid ? 0 : kExitRuntime;
}

// ----------------------------------------------------- predict and sweep

struct RateFlags {
    std::string file;
    std::optional<double> sp_flops, dp_factor, simd_factor, fmad_factor, memory_bandwidth, link_bandwidth,
        anneal_us;

    void add(CLI::App* cmd) {
        cmd->add_option("--rates", file, "Machine rates file (key=value); default $QSPLIT_RATES")
            ->check(CLI::ExistingFile);
        cmd->add_option("--sp_flops", sp_flops, "Scalar single precision flop rate, flops/s");
        cmd->add_option("--dp_factor", dp_factor, "Rate multiplier for dp");
        cmd->add_option("--simd_factor", simd_factor, "Rate multiplier for simd");
        cmd->add_option("--fmad_factor", fmad_factor, "Rate multiplier for fmad");
        cmd->add_option("--memory_bandwidth", memory_bandwidth, "Memory bandwidth, bytes/s");
        cmd->add_option("--link_bandwidth", link_bandwidth, "Link bandwidth, bytes/s");
        cmd->add_option("--anneal_us", anneal_us, "Anneal time per QuOp, microseconds");
    }

    aspen::MachineRates resolve() const {
        aspen::MachineRates r;
        if (!file.empty()) {
            r = aspen::load_rates_file(file);
        } else if (const char* env = std::getenv("QSPLIT_RATES"); env && *env) {
            r = aspen::load_rates_file(env);
        }
        auto set = [](double& field, const std::optional<double>& v) {
            if (v) field = *v;
        };
        set(r.sp_flops, sp_flops);
        set(r.dp_factor, dp_factor);
        set(r.simd_factor, simd_factor);
        set(r.fmad_factor, fmad_factor);
        set(r.memory_bandwidth, memory_bandwidth);
        set(r.link_bandwidth, link_bandwidth);
        set(r.anneal_us, anneal_us);
        r.validate();
        return r;
    }
};

void add_stage_flags(CLI::App* cmd, perf::StageParams& p) {
    cmd->add_option("--m", p.m, "Lattice cell rows")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--n", p.n, "Lattice cell columns")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--p_s", p.p_s, "Per-run success probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--readout_us", p.readout_us, "Readout time, microseconds")->capture_default_str();
    cmd->add_option("--therm_us", p.therm_us, "Thermalization time, microseconds")->capture_default_str();
    cmd->add_flag("--readout_per_repetition", p.readout_per_repetition, "Charge readout on every repetition");
}

struct PredictOpts {
    perf::StageParams p;
    RateFlags rates;
    bool json_out = false;
};

int run_predict(PredictOpts o) {
    const auto rates = o.rates.resolve();
    o.p.anneal_us = rates.anneal_us;
    const auto s1 = perf::stage1_time(o.p, rates);
    const auto s2 = perf::stage2_time(o.p);
    const auto s3 = perf::stage3_time(o.p, rates);
    const auto row = perf::predict(o.p, rates);
    if (o.json_out) {
        json j = {{"lps", o.p.lps},
                  {"p_a", o.p.p_a},
                  {"p_s", o.p.p_s},
                  {"repetitions", row.repetitions},
                  {"embedding_ops", row.embedding_ops},
                  {"stage1", s1.to_json()},
                  {"stage2", s2.to_json()},
                  {"stage3", s3.to_json()},
                  {"total_seconds", row.total_s}};
        fmt::print("{}\n", j.dump(2));
        return 0;
    }
    fmt::print("{}\n{}\n{}\n", s1.to_text(), s2.to_text(), s3.to_text());
    fmt::print("lps={} p_a={} p_s={} repetitions={}\n", o.p.lps, o.p.p_a, o.p.p_s, row.repetitions);
    fmt::print("stage1_s={:.9g} stage2_s={:.9g} stage3_s={:.9g} total_s={:.9g}\n", row.stage1_s, row.stage2_s,
               row.stage3_s, row.total_s);
    return 0;
}

struct SweepOpts {
    perf::StageParams p;
    RateFlags rates;
    int lps_min = 1, lps_max = 100;
    std::string out, dat;
};

int run_sweep(SweepOpts o) {
    if (o.lps_max < o.lps_min) {
        throw UsageError(fmt::format("--lps-max ({}) is below --lps-min ({})", o.lps_max, o.lps_min));
    }
    const auto rates = o.rates.resolve();
    o.p.anneal_us = rates.anneal_us;
    const auto rows = perf::sweep(o.lps_min, o.lps_max, o.p, rates);
    std::ostringstream csv;
    perf::write_csv(csv, rows);
    emit(o.out, csv.str());
    if (!o.dat.empty()) {
        auto out = open_output(o.dat);
        perf::write_dat(out, rows);
    }
    return 0;
}

// ------------------------------------------------------------------- eval

struct EvalOpts {
    std::vector<std::string> files;
    std::vector<std::string> params;
    std::vector<std::string> includes;
    std::string model, machine;
    std::optional<double> log_base;
    bool json_out = false;
};

int run_eval(const EvalOpts& o) {
    aspen::LinkOptions link_opts;
    for (const auto& dir : o.includes) link_opts.search_paths.emplace_back(dir);
    std::vector<std::filesystem::path> files(o.files.begin(), o.files.end());
    const auto program = aspen::load_and_link(files, link_opts);

    aspen::Environment overrides;
    for (const auto& kv : o.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects NAME=VALUE, got '" + kv + "'");
        const std::string name = kv.substr(0, eq);
        const std::string text = kv.substr(eq + 1);
        try {
            std::size_t used = 0;
            overrides[name] = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw UsageError("--param " + name + ": not a number '" + text + "'");
        }
    }

    std::string model = o.model;
    if (model.empty()) {
        if (program.models.size() != 1) {
            throw UsageError(fmt::format("{} models declared; choose one with --model", program.models.size()));
        }
        model = program.models.front().name;
    }
    aspen::EvalOptions eval_opts;
    eval_opts.log_base = o.log_base;
    const auto report = aspen::evaluate_model(program, model, o.machine, overrides, eval_opts);
    if (o.json_out) {
        fmt::print("{}\n", report.to_json().dump(2));
    } else {
        fmt::print("{}", report.to_text());
    }
    return 0;
}

// --------------------------------------------------------------- simulate

struct SimulateOpts {
    double p_s = 0.7, p_a = 0.99;
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateOpts& o) {
    const auto reps = perf::repetitions(o.p_a, o.p_s);
    const double empirical = post::simulate_repetitions(o.p_s, reps, o.trials, o.seed);
    const double target = 1.0 - std::pow(1.0 - o.p_s, static_cast<double>(reps));
    json j = {{"p_s", o.p_s},
              {"p_a", o.p_a},
              {"reps", reps},
              {"trials", o.trials},
              {"seed", o.seed},
              {"empirical", empirical},
              {"target", target},
              {"sigma", post::binomial_sigma(target, o.trials)}};
    fmt::print("{}\n", j.dump(2));
    return 0;
}

// ----------------------------------------------------------------- config

// Moves "--config FILE" out of argv and splices its key=value pairs in as
// "--key=value" right after the subcommand name, so later flags win.
std::vector<std::string> expand_config(std::vector<std::string> args, const std::vector<std::string>& commands) {
    std::string config;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (config.empty()) return args;
    std::size_t pos = 1;
    while (pos < args.size() && std::find(commands.begin(), commands.end(), args[pos]) == commands.end()) ++pos;
    if (pos == args.size()) throw CLI::ValidationError("--config", "requires a subcommand");
    std::vector<std::string> injected;
    KeyValues kv;
    try {
        kv = read_key_values_file(config);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    for (const auto& [key, value] : kv) injected.push_back("--" + key + "=" + value);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos + 1), injected.begin(), injected.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsplit: split-execution pipeline and time-to-solution models"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config", config_file,
                   "key=value file applied before the subcommand's own flags (keys are flag names)");

    std::function<int()> action;

    ChimeraOpts chimera;
    auto* c = app.add_subcommand("chimera", "Build a Chimera graph and print its statistics");
    c->add_option("--m", chimera.m, "Cell rows")->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--n", chimera.n, "Cell columns")->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--l", chimera.l, "Qubits per cell shore")->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--faults", chimera.faults, "Fault mask JSON {dead_qubits, dead_couplers}")
        ->check(CLI::ExistingFile);
    c->add_option("--out", chimera.out, "Write the graph JSON here");
    c->callback([&] { action = [&] { return run_chimera(chimera); }; });

    TranslateOpts translate;
    auto* t = app.add_subcommand("translate", "Translate a QUBO text file to an Ising model JSON");
    t->add_option("qubo_file", translate.input, "QUBO: 'n' then n*n entries, or 'i j value' lines")
        ->required()
        ->check(CLI::ExistingFile);
    t->add_option("--bits", translate.bits, "Quantize h and J to this many bits")->check(CLI::PositiveNumber);
    t->add_option("--out", translate.out, "Output path (default stdout)");
    t->callback([&] { action = [&] { return run_translate(translate); }; });

    EmbedOpts embed;
    auto* e = app.add_subcommand("embed", "Minor-embed an edge-list graph into Chimera");
    e->add_option("graph_file", embed.input, "Edge list, one 'u v' pair per line")
        ->required()
        ->check(CLI::ExistingFile);
    e->add_option("--m", embed.m, "Cell rows")->check(CLI::PositiveNumber)->capture_default_str();
    e->add_option("--n", embed.n, "Cell columns")->check(CLI::PositiveNumber)->capture_default_str();
    e->add_option("--seed", embed.cmr.seed, "Random seed")->capture_default_str();
    e->add_option("--tries", embed.cmr.max_tries, "Restarts")->check(CLI::PositiveNumber)->capture_default_str();
    e->add_option("--passes", embed.cmr.max_passes, "Improvement passes per try")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    e->add_option("--penalty", embed.cmr.penalty_base, "Qubit reuse penalty base (> 1)")
        ->check(CLI::Range(1.0 + 1e-9, 1e300))
        ->capture_default_str();
    e->add_option("--faults", embed.faults, "Fault mask JSON")->check(CLI::ExistingFile);
    e->add_option("--out", embed.out, "Write the embedding JSON here; the report goes to stdout");
    e->callback([&] { action = [&] { return run_embed(embed); }; });

    PredictOpts predict;
    auto* p = app.add_subcommand("predict", "Predict stage times for one problem size");
    p->add_option("--lps", predict.p.lps, "Logical problem size")->check(CLI::PositiveNumber)->capture_default_str();
    p->add_option("--p_a", predict.p.p_a, "Target accuracy")->required()->check(CLI::Range(0.0, 1.0));
    add_stage_flags(p, predict.p);
    predict.rates.add(p);
    p->add_flag("--json", predict.json_out, "Emit JSON");
    p->callback([&] { action = [&] { return run_predict(predict); }; });

    SweepOpts sweep;
    auto* s = app.add_subcommand("sweep", "Stage times over a range of problem sizes, as CSV");
    s->add_option("--lps-min,--lps_min", sweep.lps_min, "First problem size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--lps-max,--lps_max", sweep.lps_max, "Last problem size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--p_a", sweep.p.p_a, "Target accuracy")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    add_stage_flags(s, sweep.p);
    sweep.rates.add(s);
    s->add_option("--out", sweep.out, "CSV path (default stdout)");
    s->add_option("--dat", sweep.dat, "Also write gnuplot .dat here");
    s->callback([&] { action = [&] { return run_sweep(sweep); }; });

    EvalOpts eval;
    auto* v = app.add_subcommand("eval", "Evaluate an ASPEN application model on a machine model");
    v->add_option("files", eval.files, "Model file, then machine file(s)")
        ->required()
        ->check(CLI::ExistingFile)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    v->add_option("--param", eval.params, "Override a model param, NAME=VALUE (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    v->add_option("-I,--include", eval.includes, "Extra include search directory (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    v->add_option("--model", eval.model, "Model name (default: the only model)");
    v->add_option("--machine", eval.machine, "Machine name (default: the only machine)");
    v->add_option("--log-base", eval.log_base, "Base of log() (default e)")->check(CLI::PositiveNumber);
    v->add_flag("--json", eval.json_out, "Emit JSON");
    v->callback([&] { action = [&] { return run_eval(eval); }; });

    SimulateOpts simulate;
    auto* m = app.add_subcommand("simulate", "Monte Carlo check of the repetition formula");
    m->add_option("--p_s", simulate.p_s, "Per-run success probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    m->add_option("--p_a", simulate.p_a, "Target accuracy")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    m->add_option("--trials", simulate.trials, "Trials")->check(CLI::PositiveNumber)->capture_default_str();
    m->add_option("--seed", simulate.seed, "Random seed")->capture_default_str();
    m->callback([&] { action = [&] { return run_simulate(simulate); }; });

    std::vector<std::string> commands;
    for (const auto* sub : app.get_subcommands({})) commands.push_back(sub->get_name());

    try {
        std::vector<std::string> args(argv, argv + argc);
        args = expand_config(std::move(args), commands);
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& err) {
        fmt::print(std::cerr, "qsplit: {}\n", err.what());
        return kExitUsage;
    } catch (const std::exception& err) {
        fmt::print(std::cerr, "qsplit: {}\n", err.what());
        return kExitRuntime;
    }
}
