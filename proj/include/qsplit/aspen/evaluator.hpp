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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qsplit/aspen/ast.hpp"
#include "qsplit/aspen/timing_report.hpp"

namespace qsplit::aspen {

class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Environment = std::map<std::string, double>;

struct EvalOptions {
    // Base of log(); natural log when unset.
    std::optional<double> log_base;
};

// Builtins: log(x), ceil(x), floor(x), sqrt(x), exp(x).
double eval_expr(const Expr& e, const Environment& env, const EvalOptions& options = {});

// Evaluates the params of `model` in declaration order. An override replaces
// the declared value of an existing param; unknown override names throw.
Environment evaluate_params(const ModelDecl& model, const Environment& overrides = {},
                            const EvalOptions& options = {});

// Runs kernel "main" of `model_name` against `machine_name`. An empty machine
// name selects the only machine in the program, if there is exactly one; a
// program without machines can still evaluate models that only consume
// microseconds.
TimingReport evaluate_model(const Program& program, const std::string& model_name,
                            const std::string& machine_name = {}, const Environment& overrides = {},
                            const EvalOptions& options = {});

}  // namespace qsplit::aspen
