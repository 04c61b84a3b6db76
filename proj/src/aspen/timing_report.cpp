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

#include "qsplit/aspen/timing_report.hpp"

#include <fmt/format.h>

namespace qsplit::aspen {

const char* to_string(Category c) {
    switch (c) {
        case Category::Compute: return "compute";
        case Category::Memory: return "memory";
        case Category::Fixed: return "fixed";
        case Category::Quantum: return "quantum";
    }
    return "?";
}

Category category_of(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::Flops: return Category::Compute;
        case ResourceKind::Loads:
        case ResourceKind::Stores:
        case ResourceKind::Intracomm: return Category::Memory;
        case ResourceKind::Microseconds: return Category::Fixed;
        case ResourceKind::QuOps: return Category::Quantum;
    }
    return Category::Compute;
}

double TimingReport::category_us(Category c) const {
    double total = 0.0;
    for (const auto& e : entries) {
        if (e.category == c) total += e.microseconds;
    }
    return total;
}

double TimingReport::total_us() const {
    return category_us(Category::Compute) + category_us(Category::Memory) + category_us(Category::Fixed) +
           category_us(Category::Quantum);
}

nlohmann::json TimingReport::to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& e : entries) {
        items.push_back({{"kernel", e.kernel},
                         {"block", e.block},
                         {"kind", aspen::to_string(e.kind)},
                         {"category", aspen::to_string(e.category)},
                         {"count", e.count},
                         {"amount", e.amount},
                         {"bytes", e.bytes},
                         {"seconds", e.microseconds / 1e6}});
    }
    nlohmann::json totals = nlohmann::json::object();
    for (auto c : {Category::Compute, Category::Memory, Category::Fixed, Category::Quantum}) {
        totals[aspen::to_string(c)] = category_seconds(c);
    }
    return {{"model", model},
            {"machine", machine},
            {"entries", items},
            {"totals_seconds", totals},
            {"total_seconds", total_seconds()}};
}

std::string TimingReport::to_text() const {
    std::size_t kernel_width = 6;
    for (const auto& e : entries) kernel_width = std::max(kernel_width, e.kernel.size() + e.block.size() + 1);

    std::string out = fmt::format("model {} on {}\n", model, machine.empty() ? "<built-in rates>" : machine);
    out += fmt::format("{:<{}}  {:<12}  {:<8}  {:>14}  {:>14}\n", "kernel", kernel_width, "resource", "category",
                       "amount", "seconds");
    for (const auto& e : entries) {
        out += fmt::format("{:<{}}  {:<12}  {:<8}  {:>14.6g}  {:>14.6e}\n", e.kernel + ":" + e.block, kernel_width,
                           aspen::to_string(e.kind), aspen::to_string(e.category), e.amount * e.count,
                           e.microseconds / 1e6);
    }
    for (auto c : {Category::Compute, Category::Memory, Category::Fixed, Category::Quantum}) {
        out += fmt::format("{:<{}}  {:>14.6e}\n", std::string("total ") + aspen::to_string(c),
                           kernel_width + 40, category_seconds(c));
    }
    out += fmt::format("{:<{}}  {:>14.6e}\n", "total", kernel_width + 40, total_seconds());
    return out;
}

}  // namespace qsplit::aspen
