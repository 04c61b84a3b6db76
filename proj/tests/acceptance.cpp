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

// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances are fixed here.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "oracles.hpp"
#include "qsplit/aspen/evaluator.hpp"
#include "qsplit/aspen/linker.hpp"
#include "qsplit/aspen/parser.hpp"
#include "qsplit/chimera.hpp"
#include "qsplit/embedding.hpp"
#include "qsplit/perf_models.hpp"
#include "qsplit/qubo_ising.hpp"
#include "qsplit/sampler_post.hpp"

using namespace qsplit;
using aspen::Category;

namespace {

constexpr double kEnergyTol = 1e-9;      // criteria 6 and 8
constexpr double kAgreementTol = 1e-9;   // criterion 9, relative
constexpr double kSlopeLo = 2.85;        // criterion 5
constexpr double kSlopeHi = 3.01;
constexpr double kDominance = 100.0;     // criterion 4
constexpr double kStage2LoUs = 345.0;
constexpr double kStage2HiUs = 545.0;
constexpr double kFootprintShare = 0.9;  // criterion 7, soft part
constexpr double kSigmas = 3.0;          // criterion 10
constexpr std::int64_t kTrials = 100000;

const std::filesystem::path kFixtures = QSPLIT_FIXTURE_DIR;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    fmt::print("{} [{}] {}: {}\n", o.pass ? "PASS" : "FAIL", id, title, o.detail);
    std::fflush(stdout);
}

perf::StageParams stage(int lps, double p_a, double p_s) {
    perf::StageParams p;
    p.lps = lps;
    p.p_a = p_a;
    p.p_s = p_s;
    return p;
}

std::vector<int> spins(std::uint32_t mask, int n) {
    auto z = oracle::bits_of(mask, n);
    for (auto& x : z) x = 2 * x - 1;
    return z;
}

std::vector<oracle::Coupling> couplings(const IsingModel& m) {
    std::vector<oracle::Coupling> out;
    for (const auto& [k, v] : m.j) out.push_back({k.first, k.second, v});
    return out;
}

bool oracle_valid(const LogicalGraph& g, const ChimeraGraph& hw, const Embedding& e) {
    std::map<int, std::vector<int>> models;
    for (const auto& [v, chain] : e.vertex_models) models[v] = {chain.begin(), chain.end()};
    std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    return oracle::is_minor_embedding(
        g.num_vertices(), edges, models, [&](int a, int b) { return hw.has_edge(a, b); },
        [&](int q) { return hw.is_active(q); });
}

Outcome hardware_counts() {
    Outcome o;
    const auto g8 = build_chimera(8, 8, 4);
    const auto g12 = build_chimera(12, 12, 4);
    std::size_t degree_sum = 0;
    for (QubitId q : g12.active_nodes()) degree_sum += g12.neighbors(q).size();
    if (g8.num_nodes() != 512) o.fail(fmt::format("8x8 nodes {}", g8.num_nodes()));
    if (g12.num_nodes() != 1152) o.fail(fmt::format("12x12 nodes {}", g12.num_nodes()));
    if (g12.num_edges() != 3360) o.fail(fmt::format("12x12 edges {}", g12.num_edges()));
    if (degree_sum != 2 * 3360) o.fail(fmt::format("degree sum {}", degree_sum));
    if (o.pass) o.detail = "512 / 1152 nodes, 3360 edges, degree sum 6720";
    return o;
}

Outcome initialization_constant() {
    Outcome o;
    for (int lps = 1; lps <= 300; ++lps) {
        const double us = perf::stage1_time(stage(lps, 0.99, 0.7)).category_us(Category::Fixed);
        if (us != 319573.0) o.fail(fmt::format("built-in lps={} fixed={} us", lps, us));
    }
    const auto program = aspen::load_and_link({kFixtures / "stage1.aspen", kFixtures / "simple_node.aspen"});
    for (double lps : {1.0, 30.0, 100.0, 300.0}) {
        const double us = aspen::evaluate_model(program, "Stage1", "", {{"LPS", lps}}).category_us(Category::Fixed);
        if (us != 319573.0) o.fail(fmt::format("model file lps={} fixed={} us", lps, us));
    }
    if (o.pass) o.detail = "fixed = 319573 us for lps 1..300";
    return o;
}

Outcome repetition_formula() {
    Outcome o;
    const auto r1 = perf::repetitions(0.99, 0.7);
    const auto r2 = perf::repetitions(0.9999, 0.7);
    const double s2 = perf::stage2_time(stage(1, 0.99, 0.7)).total_us();
    if (r1 != 4) o.fail(fmt::format("repetitions(0.99,0.7)={}", r1));
    if (r2 != 8) o.fail(fmt::format("repetitions(0.9999,0.7)={}", r2));
    if (s2 != 405.0) o.fail(fmt::format("stage2={} us", s2));
    if (o.pass) o.detail = fmt::format("reps {} and {}, stage2 {} us", r1, r2, s2);
    return o;
}

Outcome bottleneck() {
    Outcome o;
    double worst_ratio = INFINITY;
    for (int lps = 1; lps <= 100; ++lps) {
        const auto p = stage(lps, 0.99, 0.7);
        const double s1 = perf::stage1_time(p).total_us();
        const double rest = perf::stage2_time(p).total_us() + perf::stage3_time(p).total_us();
        worst_ratio = std::min(worst_ratio, s1 / rest);
        if (s1 < kDominance * rest) o.fail(fmt::format("lps={} stage1/(stage2+stage3)={}", lps, s1 / rest));
    }
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i <= 35; ++i) {
        const double p_s = 0.6 + 0.01 * i;
        for (int k = 0; k <= 40; ++k) {
            // p_a from 0.9 to 0.9999, log-spaced in 1 - p_a
            const double p_a = 1.0 - std::pow(10.0, -1.0 - 3.0 * k / 40.0);
            const double us = perf::stage2_time(stage(10, p_a, p_s)).total_us();
            lo = std::min(lo, us);
            hi = std::max(hi, us);
        }
    }
    if (lo < kStage2LoUs || hi > kStage2HiUs) o.fail(fmt::format("stage2 range [{}, {}] us", lo, hi));
    if (o.pass) o.detail = fmt::format("min ratio {:.1f}, stage2 in [{}, {}] us", worst_ratio, lo, hi);
    return o;
}

Outcome scaling_shape() {
    Outcome o;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int lps = 100; lps <= 300; ++lps) {
        const double x = std::log(static_cast<double>(lps));
        const double y = std::log(perf::stage1_time(stage(lps, 0.99, 0.7)).category_us(Category::Compute));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (!(slope >= kSlopeLo && slope <= kSlopeHi)) o.fail(fmt::format("slope {}", slope));
    double prev = 0;
    for (int lps = 1; lps <= 100; ++lps) {
        const double t = perf::stage1_time(stage(lps, 0.99, 0.7)).total_us();
        if (t < prev) o.fail(fmt::format("stage1 decreases at lps={}", lps));
        prev = t;
    }
    if (o.pass) o.detail = fmt::format("log-log slope {:.4f}, monotone over 1..100", slope);
    return o;
}

Outcome translation() {
    Outcome o;
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        std::vector<double> q(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) q[static_cast<std::size_t>(i * n + j)] = q[static_cast<std::size_t>(j * n + i)] = u(rng);
        }
        const QuboInstance qi(n, q);
        const auto m = qubo_to_ising(qi);
        const auto jj = couplings(m);
        double best_q = INFINITY, best_z = INFINITY;
        std::vector<std::uint32_t> arg_q, arg_z;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const double eq = oracle::qubo_energy(n, q, oracle::bits_of(mask, n));
            const double ez = oracle::ising_energy(m.h, jj, m.offset, spins(mask, n));
            worst = std::max(worst, std::abs(eq - ez));
            if (std::abs(eq - ez) > kEnergyTol) o.fail(fmt::format("trial {} mask {} diff {}", trial, mask, eq - ez));
            if (eq < best_q - kEnergyTol) { best_q = eq; arg_q.clear(); }
            if (eq <= best_q + kEnergyTol) arg_q.push_back(mask);
            if (ez < best_z - kEnergyTol) { best_z = ez; arg_z.clear(); }
            if (ez <= best_z + kEnergyTol) arg_z.push_back(mask);
        }
        if (arg_q != arg_z) o.fail(fmt::format("trial {}: argmin sets differ", trial));
        const auto lib = brute_force_argmin(m);
        if (lib.multiplicity() != arg_z.size()) o.fail(fmt::format("trial {}: library multiplicity", trial));
        for (std::size_t k = 0; k < std::min(lib.multiplicity(), arg_z.size()); ++k) {
            const auto z = spins(arg_z[k], n);
            if (std::vector<int>(lib.minimizers[k].begin(), lib.minimizers[k].end()) != z) {
                o.fail(fmt::format("trial {}: library minimizer {}", trial, k));
            }
        }
    }
    if (o.pass) o.detail = fmt::format("100 instances, max |dE| {:.2e}, argmin sets equal", worst);
    return o;
}

Outcome embedding_soundness() {
    Outcome o;
    const auto hw = build_chimera(4, 4, 4);
    std::mt19937 rng(7);
    int valid = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        const auto edges = oracle::random_connected_graph(n, 0.35, rng);
        const LogicalGraph g(n, {edges.begin(), edges.end()});
        const auto e = find_embedding_cmr(g, hw, {static_cast<std::uint64_t>(trial)});
        if (!e) {
            o.fail(fmt::format("graph {} (n={}) not embedded", trial, n));
            continue;
        }
        if (!validate_embedding(g, hw, *e).valid || !oracle_valid(g, hw, *e)) {
            o.fail(fmt::format("graph {} invalid embedding", trial));
            continue;
        }
        ++valid;
    }

    int fault_runs = 0;
    for (int trial = 0; trial < 30; ++trial) {
        FaultMask mask;
        std::uniform_int_distribution<int> pick(0, hw.num_ids() - 1);
        for (int k = 0; k < 12; ++k) mask.dead_qubits.insert(pick(rng));
        std::uniform_int_distribution<std::size_t> pick_edge(0, hw.edges().size() - 1);
        for (int k = 0; k < 12; ++k) mask.dead_couplers.insert(hw.edges()[pick_edge(rng)]);
        const auto faulty = apply_faults(hw, mask);
        const int n = 2 + trial % 9;
        const auto edges = oracle::random_connected_graph(n, 0.35, rng);
        const LogicalGraph g(n, {edges.begin(), edges.end()});
        const auto e = find_embedding_cmr(g, faulty, {static_cast<std::uint64_t>(1000 + trial)});
        if (!e) continue;
        ++fault_runs;
        for (const auto& [v, chain] : e->vertex_models) {
            for (QubitId q : chain) {
                if (mask.dead_qubits.count(q)) o.fail(fmt::format("fault run {} uses dead qubit {}", trial, q));
            }
        }
        // Couplers: every edge the embedding relies on must be live.
        if (!oracle_valid(g, faulty, *e)) o.fail(fmt::format("fault run {} relies on a dead coupler", trial));
    }
    if (fault_runs == 0) o.fail("no fault-mask run produced an embedding");

    const auto big = build_chimera(8, 8, 4);
    std::string shares;
    for (int n = 3; n <= 8; ++n) {
        int within = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto g = LogicalGraph::complete(n);
            const auto e = find_embedding_cmr(g, big, {seed});
            if (!e || !oracle_valid(g, big, *e)) {
                o.fail(fmt::format("K{} seed {} not embedded", n, seed));
                continue;
            }
            if (e->qubits_used() <= static_cast<std::size_t>(n * n)) ++within;
        }
        shares += fmt::format(" K{}:{}/50", n, within);
        if (within < kFootprintShare * 50) o.fail(fmt::format("K{} within n^2 in {}/50 seeds", n, within));
    }
    if (o.pass) o.detail = fmt::format("{}/100 valid, {} fault runs clean, footprint{}", valid, fault_runs, shares);
    return o;
}

Outcome embedded_parameters() {
    Outcome o;
    const auto hw = build_chimera(2, 2, 4);
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 6;
        IsingModel m;
        for (int i = 0; i < n; ++i) m.h.push_back(u(rng));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) m.j[{i, j}] = u(rng);
        }
        m.offset = u(rng);
        const auto e = find_embedding_cmr(logical_graph(m), hw, {static_cast<std::uint64_t>(trial)});
        if (!e) {
            o.fail(fmt::format("trial {} not embedded", trial));
            continue;
        }
        const double cs = default_chain_strength(m);
        const auto hwm = embed_parameters(m, *e, hw, cs);
        const double chain_edges = static_cast<double>(count_chain_edges(hw, *e));
        const auto mj = couplings(m);
        const auto hj = couplings(hwm);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto z = spins(mask, n);
            const auto ext = extend_to_hardware(SpinConfig(z.begin(), z.end()), *e, hw);
            const double logical = oracle::ising_energy(m.h, mj, m.offset, z);
            const double physical = oracle::ising_energy(hwm.h, hj, hwm.offset, std::vector<int>(ext.begin(), ext.end()));
            const double diff = std::abs(physical - (logical - cs * chain_edges));
            worst = std::max(worst, diff);
            if (diff > kEnergyTol) o.fail(fmt::format("trial {} mask {} diff {}", trial, mask, diff));
        }
    }
    if (o.pass) o.detail = fmt::format("30 models, max deviation {:.2e}", worst);
    return o;
}

Outcome dsl_fidelity() {
    Outcome o;
    for (const char* f : {"simple_node.aspen", "stage1.aspen", "stage2.aspen", "stage3.aspen"}) {
        aspen::parse_file(kFixtures / f);
    }
    auto prog = [](const char* f) {
        return aspen::load_and_link({kFixtures / f, kFixtures / "simple_node.aspen"});
    };
    const auto s1 = prog("stage1.aspen");
    const auto s2 = prog("stage2.aspen");
    const auto s3 = prog("stage3.aspen");
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> lps(1, 300);
    std::uniform_real_distribution<double> pa(0.5, 0.9999);
    std::uniform_real_distribution<double> ps(0.3, 0.95);
    double worst = 0;
    auto check = [&](const char* what, int trial, double builtin, double dsl) {
        const double rel = std::abs(builtin - dsl) / std::abs(dsl);
        worst = std::max(worst, rel);
        if (rel > kAgreementTol) o.fail(fmt::format("{} set {}: {} vs {}", what, trial, builtin, dsl));
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = stage(lps(rng), pa(rng), ps(rng));
        const double l = p.lps;
        check("stage1", trial, perf::stage1_time(p).total_us(),
              aspen::evaluate_model(s1, "Stage1", "", {{"LPS", l}}).total_us());
        check("stage2", trial, perf::stage2_time(p).total_us(),
              aspen::evaluate_model(s2, "Stage2", "", {{"Accuracy", 100 * p.p_a}, {"Success", p.p_s}}).total_us());
        check("stage3", trial, perf::stage3_time(p).total_us(),
              aspen::evaluate_model(s3, "Stage3", "", {{"LPS", l}, {"Accuracy", p.p_a}, {"Success", p.p_s}})
                  .total_us());
    }
    if (o.pass) o.detail = fmt::format("4 listings parse, 20 sets agree, max rel diff {:.2e}", worst);
    return o;
}

Outcome stochastic_model() {
    Outcome o;
    double worst_margin = INFINITY;
    std::uint64_t seed = 100;
    for (double p_s : {0.3, 0.5, 0.7, 0.9}) {
        for (double p_a : {0.9, 0.99, 0.999}) {
            const auto s = perf::repetitions(p_a, p_s);
            const double got = post::simulate_repetitions(p_s, s, kTrials, seed++);
            const double floor = p_a - kSigmas * post::binomial_sigma(p_a, kTrials);
            worst_margin = std::min(worst_margin, got - floor);
            if (got < floor) o.fail(fmt::format("p_s={} p_a={} s={} empirical {}", p_s, p_a, s, got));
        }
    }
    if (o.pass) o.detail = fmt::format("12 grid points, smallest margin {:.5f}", worst_margin);
    return o;
}

Outcome post_processing() {
    Outcome o;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> energy(-50, 50);
    std::bernoulli_distribution coin(0.5);
    post::ReadoutSet readouts;
    for (int i = 0; i < 1000; ++i) {
        SpinConfig z(6);
        for (auto& x : z) x = coin(rng) ? 1 : -1;
        readouts.push_back({z, energy(rng) / 8.0});
    }
    auto reference = readouts;
    oracle::insertion_sort(reference, [](const post::Readout& a, const post::Readout& b) {
        return a.energy < b.energy || (a.energy == b.energy && a.config < b.config);
    });
    const auto summary = post::heapsort_readouts(readouts);
    std::size_t k = 0;
    for (const auto& e : summary.entries) {
        for (std::size_t m = 0; m < e.multiplicity; ++m, ++k) {
            if (k >= reference.size() || reference[k].config != e.config || reference[k].energy != e.energy) {
                o.fail(fmt::format("mismatch at position {}", k));
            }
        }
    }
    if (k != reference.size()) o.fail(fmt::format("summary covers {} of 1000 readouts", k));

    const auto hw = build_chimera(4, 4, 4);
    int configs = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto e = find_embedding_cmr(LogicalGraph::complete(n), hw, {static_cast<std::uint64_t>(n)});
        if (!e) {
            o.fail(fmt::format("K{} not embedded", n));
            continue;
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto z = spins(mask, n);
            const SpinConfig zs(z.begin(), z.end());
            if (post::unembed_readout(extend_to_hardware(zs, *e, hw), *e) != zs) {
                o.fail(fmt::format("K{} config {} not recovered", n, mask));
            }
            ++configs;
        }
    }
    if (o.pass) o.detail = fmt::format("1000 readouts sorted as reference, {} configs round-trip", configs);
    return o;
}

}  // namespace

int main() {
    report(1, "hardware counts", hardware_counts);
    report(2, "initialization constant", initialization_constant);
    report(3, "repetition formula", repetition_formula);
    report(4, "bottleneck and stage-2 flatness", bottleneck);
    report(5, "stage-1 scaling shape", scaling_shape);
    report(6, "QUBO to Ising translation", translation);
    report(7, "embedding soundness", embedding_soundness);
    report(8, "embedded parameter faithfulness", embedded_parameters);
    report(9, "model language fidelity", dsl_fidelity);
    report(10, "stochastic repetition model", stochastic_model);
    report(11, "post-processing", post_processing);
    fmt::print("{} of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
