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

#include <json.hpp>

#include "qsplit/aspen/ast.hpp"

namespace qsplit::aspen {

enum class Category { Compute, Memory, Fixed, Quantum };

const char* to_string(Category c);
Category category_of(ResourceKind kind);

// One resource statement as executed: amount per block execution, the
// block's repeat count and the attributed time for all executions.
struct TimingEntry {
    std::string kernel;  // call path, e.g. "main/EmbedData"
    std::string block;   // execute label or "#<index>"
    ResourceKind kind = ResourceKind::Flops;
    double count = 1.0;
    double amount = 0.0;
    double bytes = 0.0;  // loads, stores, intracomm
    double microseconds = 0.0;
    Category category = Category::Compute;
};

// Times are kept in microseconds; seconds are derived.
struct TimingReport {
    std::string model;
    std::string machine;
    std::vector<TimingEntry> entries;

    double category_us(Category c) const;
    // compute + memory + fixed + quantum
    double total_us() const;

    double category_seconds(Category c) const { return category_us(c) / 1e6; }
    double total_seconds() const { return total_us() / 1e6; }

    nlohmann::json to_json() const;
    // Aligned columns, one row per entry plus category totals.
    std::string to_text() const;
};

}  // namespace qsplit::aspen
