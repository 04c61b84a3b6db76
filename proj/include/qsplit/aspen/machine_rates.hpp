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

#include <string>
#include <vector>

#include "qsplit/key_value.hpp"

namespace qsplit::aspen {

// Scalar machine rates used by the closed-form stage models. The defaults
// match the bundled catalog (intel_xeon_e5_2680, ddr3_1066, pcie and the
// 20 us annealer core).
struct MachineRates {
    double sp_flops = 21.6e9;          // socket scalar single precision, flops/s
    double dp_factor = 0.5;            // rate multiplier for dp
    double simd_factor = 8.0;          // rate multiplier for simd
    double fmad_factor = 2.0;          // rate multiplier for fmad
    double memory_bandwidth = 34.1e9;  // bytes/s
    double link_bandwidth = 8e9;       // bytes/s, intracomm
    double anneal_us = 20.0;           // seconds per QuOp = anneal_us * 1e-6

    // Flop rate after applying the multipliers of the listed traits
    // (sp, dp, simd, fmad); other traits are ignored.
    double flop_rate(const std::vector<std::string>& traits) const;

    // Throws std::invalid_argument unless every rate is > 0.
    void validate() const;

    bool operator==(const MachineRates&) const = default;
};

// Keys: sp_flops, dp_factor, simd_factor, fmad_factor, memory_bandwidth,
// link_bandwidth, anneal_us. Unknown keys are rejected.
MachineRates rates_from_key_values(const KeyValues& kv, MachineRates base = {});
MachineRates load_rates_file(const std::string& path);
KeyValues to_key_values(const MachineRates& rates);

}  // namespace qsplit::aspen
