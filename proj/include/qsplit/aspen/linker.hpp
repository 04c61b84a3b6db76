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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsplit/aspen/ast.hpp"

namespace qsplit::aspen {

class LinkError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Catalog files compiled into the library, keyed by include path
// (e.g. "sockets/intel_xeon_e5_2680.aspen").
const std::map<std::string, std::string>& bundled_catalog();

struct LinkOptions {
    std::vector<std::filesystem::path> search_paths;
    bool use_bundled_catalog = true;
};

struct SourceUnit {
    Program program;
    std::string name;                  // for diagnostics
    std::filesystem::path directory;   // includes are tried here first; may be empty
};

// Resolves includes (each file at most once) and merges every declaration
// into one program with no includes left. Include paths are looked up in the
// including file's directory, then each search path, then the bundled
// catalog. Throws LinkError for missing includes or duplicate names within a
// declaration category; ParseError propagates from included files.
Program link(const std::vector<SourceUnit>& units, const LinkOptions& options = {});
Program link(const Program& program, const LinkOptions& options = {});

// Parses and links files given on disk.
Program load_and_link(const std::vector<std::filesystem::path>& files, const LinkOptions& options = {});

}  // namespace qsplit::aspen
