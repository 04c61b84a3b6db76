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

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "qsplit/aspen/machine_rates.hpp"
#include "qsplit/aspen/timing_report.hpp"

namespace qsplit::perf {

using aspen::MachineRates;
using aspen::TimingReport;

// Inputs of the three stage models. Times are microseconds.
struct StageParams {
    int lps = 1;
    int m = 12;
    int n = 12;
    double p_a = 0.99;
    double p_s = 0.7;
    double anneal_us = 20.0;
    double readout_us = 320.0;
    double therm_us = 5.0;

    double state_con = 252162;
    double pmm_sw = 33095;
    double pmm_elec = 0;
    double pmm_chip = 11264;
    double pmm_therm = 10000;
    double sw_run = 4000;
    double elec_run = 9052;

    // Charge readout once per repetition instead of once per call.
    bool readout_per_repetition = false;

    double processor_initialize_us() const;
    // Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

// ceil(ln(1 - p_a) / ln(1 - p_s)), at least 1; 1 when p_s == 1.
// Requires 0 < p_a < 1 and 0 < p_s <= 1.
std::int64_t repetitions(double p_a, double p_s);

// Natural-log worst case of the embedding heuristic for lps logical
// variables (complete graph) on an m x n lattice.
double embedding_ops(int lps, int m, int n);

TimingReport stage1_time(const StageParams& p, const MachineRates& rates = {});
TimingReport stage2_time(const StageParams& p);
TimingReport stage3_time(const StageParams& p, const MachineRates& rates = {});

struct SweepRow {
    int lps = 0;
    double p_a = 0.0;
    double p_s = 0.0;
    double stage1_s = 0.0;
    double stage2_s = 0.0;
    double stage3_s = 0.0;
    double total_s = 0.0;
    std::int64_t repetitions = 0;
    double embedding_ops = 0.0;
};

SweepRow predict(const StageParams& p, const MachineRates& rates = {});

// One row per lps in [lps_min, lps_max]; throws on an empty range.
std::vector<SweepRow> sweep(int lps_min, int lps_max, const StageParams& base, const MachineRates& rates = {});

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
// Whitespace separated columns with a '#' header line, for gnuplot.
void write_dat(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qsplit::perf
