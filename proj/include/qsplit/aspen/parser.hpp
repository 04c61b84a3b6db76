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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qsplit/aspen/ast.hpp"

namespace qsplit::aspen {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string source, int line, int column, const std::string& message);

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    std::string source_;
    int line_;
    int column_;
};

// Parses a model or machine file. Reports the first syntax error with its
// 1-based line and column.
Program parse(std::string_view text, const std::string& source = "<input>");
Program parse_file(const std::filesystem::path& path);

// Parses a standalone expression (used for overrides and tests).
Expr parse_expression(std::string_view text);

}  // namespace qsplit::aspen
