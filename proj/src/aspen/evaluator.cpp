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

#include "qsplit/aspen/evaluator.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <fmt/format.h>

#include "qsplit/aspen/printer.hpp"

namespace qsplit::aspen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double checked(double v, const Expr& e) {
    if (!std::isfinite(v)) throw EvalError(fmt::format("non-finite value from '{}'", to_string(e)));
    return v;
}

double apply_call(const CallOp& call, const Expr& whole, const Environment& env, const EvalOptions& options) {
    if (call.args.size() != 1) {
        throw EvalError(fmt::format("{}() takes 1 argument, got {} in '{}'", call.fn, call.args.size(),
                                    to_string(whole)));
    }
    const double x = eval_expr(call.args[0], env, options);
    if (call.fn == "log") {
        if (!(x > 0.0)) {
            throw EvalError(fmt::format("log of non-positive value {} in '{}'", x, to_string(whole)));
        }
        return options.log_base ? std::log(x) / std::log(*options.log_base) : std::log(x);
    }
    if (call.fn == "ceil") return std::ceil(x);
    if (call.fn == "floor") return std::floor(x);
    if (call.fn == "exp") return checked(std::exp(x), whole);
    if (call.fn == "sqrt") {
        if (x < 0.0) throw EvalError(fmt::format("sqrt of negative value {} in '{}'", x, to_string(whole)));
        return std::sqrt(x);
    }
    throw EvalError(fmt::format("unknown function '{}'", call.fn));
}

// One provider (core, memory or interconnect) as seen from a socket.
struct Binding {
    const ProviderDecl* provider = nullptr;
    double cores = 1.0;  // core formulas are divided by this
    std::string socket;
};

class ModelRunner {
  public:
    ModelRunner(const Program& program, const ModelDecl& model, const MachineDecl* machine, Environment params,
                const EvalOptions& options)
        : program_(program), model_(model), params_(std::move(params)), options_(options) {
        if (machine) collect_bindings(*machine);
    }

    void run(TimingReport& report) {
        const Kernel* main = model_.find_kernel("main");
        if (!main) throw EvalError(fmt::format("model {} has no kernel main", model_.name));
        run_kernel(*main, "main", report);
    }

  private:
    void collect_bindings(const MachineDecl& machine) {
        // Walk machine -> nodes -> sockets. The first socket whose core
        // provides flops is the compute socket and is searched first.
        std::vector<std::vector<Binding>> per_socket;
        std::size_t compute = SIZE_MAX;
        for (const auto& nq : machine.nodes) {
            const NodeDecl* node = program_.find_node(nq.name);
            if (!node) throw EvalError(fmt::format("machine {} references unknown node {}", machine.name, nq.name));
            for (const auto& sq : node->sockets) {
                const SocketDecl* socket = program_.find_socket(sq.name);
                if (!socket) {
                    throw EvalError(fmt::format("node {} references unknown socket {}", node->name, sq.name));
                }
                std::vector<Binding> bindings;
                for (const auto& cq : socket->cores) {
                    if (const auto* core = program_.find_provider(ProviderKind::Core, cq.name)) {
                        const double count = eval_expr(cq.count, {}, options_);
                        if (!(count > 0.0)) {
                            throw EvalError(fmt::format("socket {}: core count must be > 0", socket->name));
                        }
                        bindings.push_back({core, count, socket->name});
                        if (compute == SIZE_MAX && core->find_resource("flops")) compute = per_socket.size();
                    } else {
                        unresolved_.insert("core " + cq.name);
                    }
                }
                if (socket->memory) {
                    if (const auto* mem = program_.find_provider(ProviderKind::Memory, *socket->memory)) {
                        bindings.push_back({mem, 1.0, socket->name});
                    } else {
                        unresolved_.insert("memory " + *socket->memory);
                    }
                }
                if (socket->link) {
                    if (const auto* link = program_.find_provider(ProviderKind::Interconnect, *socket->link)) {
                        bindings.push_back({link, 1.0, socket->name});
                    } else {
                        unresolved_.insert("interconnect " + *socket->link);
                    }
                }
                per_socket.push_back(std::move(bindings));
            }
        }
        if (compute != SIZE_MAX) bindings_ = per_socket[compute];
        for (std::size_t i = 0; i < per_socket.size(); ++i) {
            if (i == compute) continue;
            bindings_.insert(bindings_.end(), per_socket[i].begin(), per_socket[i].end());
        }
    }

    // Seconds consumed by `amount` of `resource`, after trait rules.
    double resource_seconds(const std::string& resource, double amount, const std::vector<std::string>& traits) {
        for (const auto& b : bindings_) {
            const ResourceDef* def = b.provider->find_resource(resource);
            if (!def) continue;
            Environment env = provider_env(*b.provider);
            env[def->arg] = amount;
            double t = eval_expr(def->formula, env, options_);
            for (const auto& trait : traits) {
                for (const auto& rule : def->traits) {
                    if (rule.name != trait) continue;
                    Environment tenv = env;
                    tenv["base"] = t;
                    t = eval_expr(rule.formula, tenv, options_);
                }
            }
            if (b.provider->kind == ProviderKind::Core) t /= b.cores;
            return t;
        }
        std::string hint;
        for (const auto& u : unresolved_) hint += (hint.empty() ? " (unresolved: " : ", ") + u;
        if (!hint.empty()) hint += ")";
        throw EvalError(fmt::format("no machine resource provides {}{}", resource, hint));
    }

    Environment provider_env(const ProviderDecl& p) {
        auto it = provider_envs_.find(&p);
        if (it != provider_envs_.end()) return it->second;
        Environment env;
        for (const auto& param : p.params) env[param.name] = eval_expr(param.value, env, options_);
        return provider_envs_.emplace(&p, std::move(env)).first->second;
    }

    void run_kernel(const Kernel& kernel, const std::string& path, TimingReport& report) {
        if (!active_.insert(kernel.name).second) {
            throw EvalError(fmt::format("kernel call cycle through {}", kernel.name));
        }
        std::size_t index = 0;
        for (const auto& item : kernel.body) {
            std::visit(Overloaded{
                           [&](const ExecuteBlock& block) {
                               run_block(block, path, index, report);
                               ++index;
                           },
                           [&](const KernelCall& call) {
                               const Kernel* callee = model_.find_kernel(call.name);
                               if (!callee) {
                                   throw EvalError(fmt::format("kernel {} calls unknown kernel {}", kernel.name,
                                                               call.name));
                               }
                               run_kernel(*callee, path + "/" + call.name, report);
                           },
                       },
                       item);
        }
        active_.erase(kernel.name);
    }

    void run_block(const ExecuteBlock& block, const std::string& path, std::size_t index, TimingReport& report) {
        const double count = eval_expr(block.count, params_, options_);
        if (count < 0.0) throw EvalError(fmt::format("{}: negative execute count {}", path, count));
        const std::string label = block.label.empty() ? fmt::format("#{}", index) : block.label;
        for (const auto& st : block.statements) {
            TimingEntry entry;
            entry.kernel = path;
            entry.block = label;
            entry.kind = st.kind;
            entry.count = count;
            entry.category = category_of(st.kind);
            entry.amount = eval_expr(st.amount, params_, options_);
            if (!st.data.empty() && !model_.find_data(st.data)) {
                throw EvalError(fmt::format("{}:{}: {} references undeclared data {}", path, label,
                                            to_string(st.kind), st.data));
            }
            double seconds = 0.0;
            switch (st.kind) {
                case ResourceKind::Microseconds:
                    entry.microseconds = count * entry.amount;
                    break;
                case ResourceKind::Flops:
                    seconds = resource_seconds("flops", entry.amount, st.traits);
                    break;
                case ResourceKind::QuOps:
                    seconds = resource_seconds("QuOps", entry.amount, st.traits);
                    break;
                case ResourceKind::Loads:
                case ResourceKind::Stores:
                case ResourceKind::Intracomm:
                    entry.bytes = entry.amount;
                    if (st.size) entry.bytes *= eval_expr(*st.size, params_, options_);
                    seconds = resource_seconds(to_string(st.kind), entry.bytes, st.traits);
                    break;
            }
            if (st.kind != ResourceKind::Microseconds) entry.microseconds = count * seconds * 1e6;
            if (!(entry.microseconds >= 0.0) || !std::isfinite(entry.microseconds)) {
                throw EvalError(fmt::format("{}:{}: {} yields invalid time {} us", path, label, to_string(st.kind),
                                            entry.microseconds));
            }
            report.entries.push_back(std::move(entry));
        }
    }

    const Program& program_;
    const ModelDecl& model_;
    Environment params_;
    const EvalOptions& options_;
    std::vector<Binding> bindings_;
    std::set<std::string> unresolved_;
    std::map<const ProviderDecl*, Environment> provider_envs_;
    std::set<std::string> active_;
};

}  // namespace

double eval_expr(const Expr& e, const Environment& env, const EvalOptions& options) {
    return std::visit(
        Overloaded{
            [](const NumberLit& n) { return n.value; },
            [&](const Identifier& id) {
                auto it = env.find(id.name);
                if (it == env.end()) throw EvalError(fmt::format("unbound identifier '{}'", id.name));
                return it->second;
            },
            [&](const UnaryOp& u) { return -eval_expr(u.operand, env, options); },
            [&](const BinaryOp& b) {
                const double l = eval_expr(b.lhs, env, options);
                const double r = eval_expr(b.rhs, env, options);
                switch (b.op) {
                    case '+': return l + r;
                    case '-': return l - r;
                    case '*': return l * r;
                    case '/':
                        if (r == 0.0) throw EvalError(fmt::format("division by zero in '{}'", to_string(e)));
                        return l / r;
                    case '^': return checked(std::pow(l, r), e);
                }
                throw EvalError(fmt::format("unknown operator '{}'", b.op));
            },
            [&](const CallOp& c) { return apply_call(c, e, env, options); },
        },
        e.node().value);
}

Environment evaluate_params(const ModelDecl& model, const Environment& overrides, const EvalOptions& options) {
    for (const auto& [name, value] : overrides) {
        bool found = false;
        for (const auto& p : model.params) found = found || p.name == name;
        if (!found) throw EvalError(fmt::format("model {} has no param {}", model.name, name));
    }
    Environment env;
    for (const auto& p : model.params) {
        auto it = overrides.find(p.name);
        env[p.name] = it != overrides.end() ? it->second : eval_expr(p.value, env, options);
    }
    return env;
}

TimingReport evaluate_model(const Program& program, const std::string& model_name, const std::string& machine_name,
                            const Environment& overrides, const EvalOptions& options) {
    const ModelDecl* model = program.find_model(model_name);
    if (!model) throw EvalError(fmt::format("unknown model {}", model_name));
    const MachineDecl* machine = nullptr;
    if (!machine_name.empty()) {
        machine = program.find_machine(machine_name);
        if (!machine) throw EvalError(fmt::format("unknown machine {}", machine_name));
    } else if (program.machines.size() == 1) {
        machine = &program.machines.front();
    } else if (program.machines.size() > 1) {
        throw EvalError("several machines declared; name one explicitly");
    }

    TimingReport report;
    report.model = model->name;
    report.machine = machine ? machine->name : std::string();
    ModelRunner runner(program, *model, machine, evaluate_params(*model, overrides, options), options);
    runner.run(report);
    return report;
}

}  // namespace qsplit::aspen
