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

#include "qsplit/aspen/ast.hpp"

namespace qsplit::aspen {

// Canonical source text. parse(print(p)) == p for every parsed program.
std::string print(const Program& program);

// Minimal-parenthesis rendering; numbers use the shortest round-trip form.
std::string to_string(const Expr& e);

}  // namespace qsplit::aspen
