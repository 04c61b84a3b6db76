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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qsplit {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat "key = value" text. '#' starts a comment; blank lines are skipped.
// Throws std::runtime_error naming the line for malformed or duplicate keys.
KeyValues parse_key_values(std::istream& in, const std::string& source = "<input>");
KeyValues read_key_values_file(const std::string& path);

}  // namespace qsplit
