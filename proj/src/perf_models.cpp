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

#include "qsplit/perf_models.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qsplit/chimera.hpp"
#include "qsplit/embedding.hpp"

namespace qsplit::perf {

using aspen::Category;
using aspen::ResourceKind;
using aspen::TimingEntry;

namespace {

TimingEntry entry(std::string kernel, std::string block, ResourceKind kind, double amount, double bytes,
                  double us) {
    TimingEntry e;
    e.kernel = std::move(kernel);
    e.block = std::move(block);
    e.kind = kind;
    e.amount = amount;
    e.bytes = bytes;
    e.microseconds = us;
    e.category = aspen::category_of(kind);
    return e;
}

double us(double seconds) { return seconds * 1e6; }

}  // namespace

double StageParams::processor_initialize_us() const {
    return state_con + pmm_sw + pmm_elec + pmm_chip + pmm_therm + sw_run + elec_run;
}

void StageParams::validate() const {
    if (lps < 1) throw std::invalid_argument("lps must be >= 1");
    if (m < 1 || n < 1) throw std::invalid_argument("lattice dimensions must be >= 1");
    if (!(p_a > 0.0 && p_a < 1.0)) throw std::invalid_argument("p_a must lie in (0, 1)");
    if (!(p_s > 0.0 && p_s <= 1.0)) throw std::invalid_argument("p_s must lie in (0, 1]");
    for (double t : {anneal_us, readout_us, therm_us, state_con, pmm_sw, pmm_elec, pmm_chip, pmm_therm, sw_run,
                     elec_run}) {
        if (!(t >= 0.0)) throw std::invalid_argument("stage times must be >= 0");
    }
}

std::int64_t repetitions(double p_a, double p_s) {
    if (!(p_a > 0.0 && p_a < 1.0)) throw std::invalid_argument("p_a must lie in (0, 1)");
    if (!(p_s > 0.0 && p_s <= 1.0)) throw std::invalid_argument("p_s must lie in (0, 1]");
    if (p_s == 1.0) return 1;
    const double s = std::ceil(std::log(1.0 - p_a) / std::log(1.0 - p_s));
    return s < 1.0 ? 1 : static_cast<std::int64_t>(s);
}

double embedding_ops(int lps, int m, int n) {
    const double nh = lps;
    const double eh = nh * (nh - 1) / 2;
    return worst_case_embedding_ops(nh, eh, static_cast<double>(chimera_node_count(m, n, 4)),
                                    static_cast<double>(chimera_edge_count(m, n)));
}

TimingReport stage1_time(const StageParams& p, const MachineRates& rates) {
    p.validate();
    rates.validate();
    const double nh = p.lps;
    const double eh = nh * (nh - 1) / 2;
    const double eg = static_cast<double>(chimera_edge_count(p.m, p.n));
    const double ising = nh * nh;
    const double setting = nh * nh * nh;
    const double ops = embedding_ops(p.lps, p.m, p.n);
    const double full_rate = rates.flop_rate({"sp", "fmad", "simd"});
    const double embed_rate = rates.flop_rate({"sp", "simd"});
    const double bw = rates.memory_bandwidth;

    TimingReport r;
    r.model = "Stage1";
    r.entries.push_back(entry("main/InitializeData", "#0", ResourceKind::Flops, ising, 0, us(ising / full_rate)));
    r.entries.push_back(entry("main/InitializeData", "#0", ResourceKind::Stores, nh * 4, nh * 4, us(nh * 4 / bw)));
    r.entries.push_back(
        entry("main/InitializeData", "#1", ResourceKind::Flops, setting, 0, us(setting / full_rate)));
    r.entries.push_back(entry("main/EmbedData", "embed", ResourceKind::Loads, eh * 4, eh * 4, us(eh * 4 / bw)));
    r.entries.push_back(entry("main/EmbedData", "embed", ResourceKind::Flops, ops, 0, us(ops / embed_rate)));
    r.entries.push_back(entry("main/EmbedData", "embed", ResourceKind::Stores, eg * 4, eg * 4, us(eg * 4 / bw)));
    r.entries.push_back(entry("main/EmbedData", "embed", ResourceKind::Intracomm, eg * 4, eg * 4,
                              us(eg * 4 / rates.link_bandwidth)));
    r.entries.push_back(entry("main/InitializeProcessor", "#0", ResourceKind::Microseconds,
                              p.processor_initialize_us(), 0, p.processor_initialize_us()));
    return r;
}

TimingReport stage2_time(const StageParams& p) {
    p.validate();
    const double reps = static_cast<double>(repetitions(p.p_a, p.p_s));
    const double readout_count = p.readout_per_repetition ? reps : 1.0;

    TimingReport r;
    r.model = "Stage2";
    r.entries.push_back(entry("main/Stage2Processing", "mainblock2", ResourceKind::QuOps, reps, 0,
                              reps * p.anneal_us));
    auto readout = entry("main/Stage2Processing", "mainblock3", ResourceKind::Microseconds, p.readout_us, 0,
                         readout_count * p.readout_us);
    readout.count = readout_count;
    r.entries.push_back(readout);
    r.entries.push_back(
        entry("main/Stage2Processing", "mainblock4", ResourceKind::Microseconds, p.therm_us, 0, p.therm_us));
    return r;
}

TimingReport stage3_time(const StageParams& p, const MachineRates& rates) {
    p.validate();
    rates.validate();
    const double results = static_cast<double>(repetitions(p.p_a, p.p_s));
    const double sort_ops = std::log(results) * results;
    const double load_bytes = results * (4.0 * p.lps);
    const double bw = rates.memory_bandwidth;

    TimingReport r;
    r.model = "Stage3";
    r.entries.push_back(
        entry("main/FindSolution", "sort", ResourceKind::Loads, results, load_bytes, us(load_bytes / bw)));
    r.entries.push_back(entry("main/FindSolution", "sort", ResourceKind::Flops, sort_ops, 0,
                              us(sort_ops / rates.flop_rate({"sp"}))));
    r.entries.push_back(entry("main/FindSolution", "sort", ResourceKind::Stores, results, results, us(results / bw)));
    return r;
}

SweepRow predict(const StageParams& p, const MachineRates& rates) {
    SweepRow row;
    row.lps = p.lps;
    row.p_a = p.p_a;
    row.p_s = p.p_s;
    row.stage1_s = stage1_time(p, rates).total_seconds();
    row.stage2_s = stage2_time(p).total_seconds();
    row.stage3_s = stage3_time(p, rates).total_seconds();
    row.total_s = row.stage1_s + row.stage2_s + row.stage3_s;
    row.repetitions = repetitions(p.p_a, p.p_s);
    row.embedding_ops = embedding_ops(p.lps, p.m, p.n);
    return row;
}

std::vector<SweepRow> sweep(int lps_min, int lps_max, const StageParams& base, const MachineRates& rates) {
    if (lps_min < 1 || lps_max < lps_min) {
        throw std::invalid_argument(fmt::format("empty lps range [{}, {}]", lps_min, lps_max));
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(lps_max - lps_min + 1));
    for (int lps = lps_min; lps <= lps_max; ++lps) {
        StageParams p = base;
        p.lps = lps;
        rows.push_back(predict(p, rates));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "lps,p_a,p_s,stage1_s,stage2_s,stage3_s,total_s,repetitions,embedding_ops\n";
    for (const auto& r : rows) {
        fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", r.lps, r.p_a, r.p_s, r.stage1_s, r.stage2_s, r.stage3_s,
                   r.total_s, r.repetitions, r.embedding_ops);
    }
}

void write_dat(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "# lps p_a p_s stage1_s stage2_s stage3_s total_s repetitions embedding_ops\n";
    for (const auto& r : rows) {
        fmt::print(out, "{} {} {} {} {} {} {} {} {}\n", r.lps, r.p_a, r.p_s, r.stage1_s, r.stage2_s, r.stage3_s,
                   r.total_s, r.repetitions, r.embedding_ops);
    }
}

}  // namespace qsplit::perf
