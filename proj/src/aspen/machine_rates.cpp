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

#include "qsplit/aspen/machine_rates.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace qsplit::aspen {

namespace {

struct Field {
    const char* key;
    double MachineRates::*member;
};

constexpr Field kFields[] = {
    {"sp_flops", &MachineRates::sp_flops},
    {"dp_factor", &MachineRates::dp_factor},
    {"simd_factor", &MachineRates::simd_factor},
    {"fmad_factor", &MachineRates::fmad_factor},
    {"memory_bandwidth", &MachineRates::memory_bandwidth},
    {"link_bandwidth", &MachineRates::link_bandwidth},
    {"anneal_us", &MachineRates::anneal_us},
};

}  // namespace

double MachineRates::flop_rate(const std::vector<std::string>& traits) const {
    double rate = sp_flops;
    for (const auto& t : traits) {
        if (t == "dp") rate *= dp_factor;
        if (t == "simd") rate *= simd_factor;
        if (t == "fmad") rate *= fmad_factor;
    }
    return rate;
}

void MachineRates::validate() const {
    for (const auto& f : kFields) {
        if (!(this->*f.member > 0.0)) throw std::invalid_argument(fmt::format("machine rate {} must be > 0", f.key));
    }
}

MachineRates rates_from_key_values(const KeyValues& kv, MachineRates base) {
    for (const auto& [key, value] : kv) {
        const Field* field = nullptr;
        for (const auto& f : kFields) {
            if (key == f.key) field = &f;
        }
        if (!field) throw std::invalid_argument("unknown machine rate key '" + key + "'");
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw std::invalid_argument("machine rate " + key + ": not a number '" + value + "'");
        }
        base.*(field->member) = v;
    }
    base.validate();
    return base;
}

MachineRates load_rates_file(const std::string& path) { return rates_from_key_values(read_key_values_file(path)); }

KeyValues to_key_values(const MachineRates& rates) {
    KeyValues out;
    for (const auto& f : kFields) out.emplace_back(f.key, fmt::format("{}", rates.*f.member));
    return out;
}

}  // namespace qsplit::aspen
