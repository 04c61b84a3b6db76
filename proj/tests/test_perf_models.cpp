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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qsplit/aspen/evaluator.hpp"
#include "qsplit/aspen/linker.hpp"
#include "qsplit/perf_models.hpp"

using namespace qsplit;
using namespace qsplit::perf;
using aspen::Category;

namespace {

const std::filesystem::path kFixtures = QSPLIT_FIXTURE_DIR;

StageParams params(int lps, double p_a, double p_s) {
    StageParams p;
    p.lps = lps;
    p.p_a = p_a;
    p.p_s = p_s;
    return p;
}

aspen::Program program_for(const std::string& stage) {
    return aspen::load_and_link({kFixtures / stage, kFixtures / "simple_node.aspen"});
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Repetitions, Examples) {
    EXPECT_EQ(repetitions(0.5, 0.5), 1);
    EXPECT_EQ(repetitions(0.99, 0.7), 4);
    EXPECT_EQ(repetitions(0.9999, 0.7), 8);
    EXPECT_EQ(repetitions(0.99, 0.75), 4);
    EXPECT_EQ(repetitions(0.9, 1.0), 1);
    EXPECT_EQ(repetitions(0.01, 0.9), 1);
}

TEST(Repetitions, MatchesSmallestSufficientCount) {
    for (double p_s : {0.05, 0.3, 0.5, 0.7, 0.9}) {
        for (double p_a : {0.5, 0.9, 0.99, 0.999}) {
            // Oracle: smallest s with 1 - (1 - p_s)^s >= p_a, by counting.
            std::int64_t s = 1;
            while (1.0 - std::pow(1.0 - p_s, static_cast<double>(s)) < p_a) ++s;
            EXPECT_EQ(repetitions(p_a, p_s), s) << p_a << " " << p_s;
        }
    }
}

TEST(Repetitions, RejectsOutOfRange) {
    EXPECT_THROW(repetitions(1.0, 0.5), std::invalid_argument);
    EXPECT_THROW(repetitions(0.0, 0.5), std::invalid_argument);
    EXPECT_THROW(repetitions(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(repetitions(0.5, 1.5), std::invalid_argument);
}

TEST(Stage1, FixedComponentIsInitializationSum) {
    for (int lps : {1, 10, 100, 1000}) {
        EXPECT_EQ(stage1_time(params(lps, 0.99, 0.7)).category_us(Category::Fixed), 319573.0);
    }
}

TEST(Stage1, LpsOneHasNoEmbeddingWork) {
    const auto r = stage1_time(params(1, 0.99, 0.7));
    EXPECT_EQ(embedding_ops(1, 12, 12), 0.0);
    EXPECT_NEAR(r.total_seconds(), 0.319573, 1e-5);
}

TEST(Stage1, ComputeAtThirtyFrozen) {
    const auto r = stage1_time(params(30, 0.99, 0.7));
    const double expected = (900.0 + 27000.0) / (21.6e9 * 16) + 345193753147.78467 / (21.6e9 * 8);
    EXPECT_NEAR(r.category_seconds(Category::Compute) / expected, 1.0, 1e-12);
}

TEST(Stage2, Examples) {
    EXPECT_EQ(stage2_time(params(1, 0.99, 0.7)).total_us(), 405.0);
    EXPECT_EQ(stage2_time(params(1, 0.5, 0.5)).total_us(), 345.0);
    EXPECT_EQ(stage2_time(params(1, 0.9999, 0.7)).total_us(), 485.0);
}

TEST(Stage2, ReadoutPerRepetitionFlag) {
    auto p = params(1, 0.99, 0.7);
    p.readout_per_repetition = true;
    EXPECT_EQ(stage2_time(p).total_us(), 4 * 20.0 + 4 * 320.0 + 5.0);
}

TEST(Stage3, Examples) {
    const auto one = stage3_time(params(10, 0.5, 0.5));
    EXPECT_EQ(one.category_us(Category::Compute), 0.0);
    EXPECT_GT(one.category_us(Category::Memory), 0.0);
    const auto r = stage3_time(params(10, 0.99, 0.75));
    // Results = 4: SortOps = 4 ln 4 at 21.6e9; 160 loaded bytes and 4 stored.
    EXPECT_NEAR(r.category_seconds(Category::Compute), 4 * std::log(4.0) / 21.6e9, 1e-24);
    EXPECT_NEAR(r.category_seconds(Category::Memory), 164.0 / 34.1e9, 1e-24);
}

TEST(BuiltinVsDsl, RandomParameterSets) {
    const auto s1 = program_for("stage1.aspen");
    const auto s2 = program_for("stage2.aspen");
    const auto s3 = program_for("stage3.aspen");
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> lps(1, 300);
    std::uniform_real_distribution<double> pa(0.5, 0.9999);
    std::uniform_real_distribution<double> ps(0.3, 0.95);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = params(lps(rng), pa(rng), ps(rng));
        const double l = p.lps;
        const auto d1 = aspen::evaluate_model(s1, "Stage1", "", {{"LPS", l}});
        const auto d2 = aspen::evaluate_model(s2, "Stage2", "", {{"Accuracy", 100 * p.p_a}, {"Success", p.p_s}});
        const auto d3 = aspen::evaluate_model(s3, "Stage3", "", {{"LPS", l}, {"Accuracy", p.p_a}, {"Success", p.p_s}});
        EXPECT_LE(rel(stage1_time(p).total_us(), d1.total_us()), 1e-9);
        EXPECT_LE(rel(stage2_time(p).total_us(), d2.total_us()), 1e-9);
        EXPECT_LE(rel(stage3_time(p).total_us(), d3.total_us()), 1e-9);
        for (auto c : {Category::Compute, Category::Memory, Category::Fixed, Category::Quantum}) {
            EXPECT_NEAR(stage1_time(p).category_us(c), d1.category_us(c), 1e-9 * d1.total_us());
        }
    }
}

TEST(Sweep, RowsAndMonotonicity) {
    const auto rows = sweep(1, 100, params(1, 0.99, 0.7));
    ASSERT_EQ(rows.size(), 100u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].lps, static_cast<int>(i + 1));
        EXPECT_EQ(rows[i].total_s, rows[i].stage1_s + rows[i].stage2_s + rows[i].stage3_s);
        EXPECT_GE(rows[i].stage1_s / (rows[i].stage2_s + rows[i].stage3_s), 100.0);
        if (i > 0) {
            EXPECT_GT(rows[i].stage1_s, rows[i - 1].stage1_s);
        }
    }
    EXPECT_THROW(sweep(5, 4, params(1, 0.99, 0.7)), std::invalid_argument);
}

TEST(Sweep, StageTwoAcrossAccuracies) {
    const double expected[] = {365, 405, 445, 485};
    const double accuracies[] = {0.9, 0.99, 0.999, 0.9999};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(stage2_time(params(50, accuracies[i], 0.7)).total_us(), expected[i]);
    }
}

TEST(Sweep, CsvAndDat) {
    const auto rows = sweep(1, 3, params(1, 0.99, 0.7));
    std::ostringstream csv, dat;
    write_csv(csv, rows);
    write_dat(dat, rows);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lps,p_a,p_s,stage1_s,stage2_s,stage3_s,total_s,repetitions,embedding_ops");
    int count = 0;
    while (std::getline(in, line)) {
        ++count;
        std::vector<double> cols;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cols.push_back(std::stod(cell));
        ASSERT_EQ(cols.size(), 9u);
        EXPECT_NEAR(cols[6], cols[3] + cols[4] + cols[5], 1e-12);
        EXPECT_EQ(cols[7], 4.0);
    }
    EXPECT_EQ(count, 3);
    EXPECT_EQ(dat.str().front(), '#');
}

TEST(Rates, ScalingFlopRateHalvesComputeOnly) {
    MachineRates fast;
    fast.sp_flops *= 2;
    const auto p = params(40, 0.99, 0.7);
    const auto a = stage1_time(p);
    const auto b = stage1_time(p, fast);
    EXPECT_NEAR(b.category_us(Category::Compute) * 2, a.category_us(Category::Compute),
                1e-15 * a.category_us(Category::Compute));
    EXPECT_EQ(b.category_us(Category::Memory), a.category_us(Category::Memory));
    EXPECT_EQ(b.category_us(Category::Fixed), a.category_us(Category::Fixed));
}

TEST(Rates, KeyValues) {
    const auto r = aspen::rates_from_key_values({{"sp_flops", "1e9"}, {"anneal_us", "10"}});
    EXPECT_EQ(r.sp_flops, 1e9);
    EXPECT_EQ(r.anneal_us, 10.0);
    EXPECT_EQ(r.memory_bandwidth, 34.1e9);
    EXPECT_THROW(aspen::rates_from_key_values({{"bogus", "1"}}), std::invalid_argument);
    EXPECT_THROW(aspen::rates_from_key_values({{"sp_flops", "0"}}), std::invalid_argument);
    EXPECT_THROW(aspen::rates_from_key_values({{"sp_flops", "abc"}}), std::invalid_argument);
    EXPECT_EQ(aspen::rates_from_key_values(aspen::to_key_values(MachineRates{})), MachineRates{});
}
