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

#include "qsplit/aspen/linker.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qsplit/aspen/parser.hpp"

namespace qsplit::aspen {

namespace {

struct Resolved {
    std::string key;  // identity for include-once
    std::string name;
    std::string text;
    std::filesystem::path directory;
};

class Linker {
  public:
    explicit Linker(const LinkOptions& options) : options_(options) {}

    void add(const SourceUnit& unit) {
        for (const auto& inc : unit.program.includes) include(inc, unit.directory, unit.name);
        merge(unit.program, unit.name);
    }

    Program result() { return std::move(merged_); }

  private:
    void include(const std::string& path, const std::filesystem::path& from_dir, const std::string& from_name) {
        Resolved r = resolve(path, from_dir, from_name);
        if (!seen_.insert(r.key).second) return;
        const Program p = parse(r.text, r.name);
        for (const auto& inc : p.includes) include(inc, r.directory, r.name);
        merge(p, r.name);
    }

    Resolved resolve(const std::string& path, const std::filesystem::path& from_dir, const std::string& from_name) {
        std::vector<std::filesystem::path> dirs;
        if (!from_dir.empty()) dirs.push_back(from_dir);
        dirs.insert(dirs.end(), options_.search_paths.begin(), options_.search_paths.end());

        std::vector<std::string> searched;
        for (const auto& dir : dirs) {
            const auto candidate = dir / path;
            searched.push_back(candidate.generic_string());
            std::error_code ec;
            if (std::filesystem::is_regular_file(candidate, ec)) {
                std::ifstream in(candidate, std::ios::binary);
                std::ostringstream ss;
                ss << in.rdbuf();
                const auto canonical = std::filesystem::weakly_canonical(candidate, ec);
                return {"file:" + canonical.generic_string(), candidate.generic_string(), ss.str(),
                        candidate.parent_path()};
            }
        }
        if (options_.use_bundled_catalog) {
            searched.push_back("<bundled catalog>");
            const auto& catalog = bundled_catalog();
            if (auto it = catalog.find(path); it != catalog.end()) {
                return {"bundled:" + path, "<bundled>/" + path, it->second, {}};
            }
        }
        std::string list;
        for (const auto& s : searched) list += (list.empty() ? "" : ", ") + s;
        throw LinkError(from_name + ": cannot find include '" + path + "' (searched: " + list + ")");
    }

    template <typename T>
    void merge_category(std::vector<T>& into, const std::vector<T>& from, const char* category, const std::string& origin,
                        std::map<std::string, std::string>& owners) {
        for (const auto& item : from) {
            auto [it, fresh] = owners.emplace(item.name, origin);
            if (!fresh) {
                throw LinkError(std::string("duplicate definition of ") + category + " '" + item.name + "' in " +
                                origin + " (first defined in " + it->second + ")");
            }
            into.push_back(item);
        }
    }

    void merge(const Program& p, const std::string& origin) {
        merge_category(merged_.machines, p.machines, "machine", origin, owners_["machine"]);
        merge_category(merged_.nodes, p.nodes, "node", origin, owners_["node"]);
        merge_category(merged_.sockets, p.sockets, "socket", origin, owners_["socket"]);
        for (const auto& d : p.providers) {
            const char* category = d.kind == ProviderKind::Core     ? "core"
                                   : d.kind == ProviderKind::Memory ? "memory"
                                                                    : "interconnect";
            merge_category(merged_.providers, std::vector<ProviderDecl>{d}, category, origin, owners_[category]);
        }
        merge_category(merged_.models, p.models, "model", origin, owners_["model"]);
    }

    const LinkOptions& options_;
    Program merged_;
    std::set<std::string> seen_;
    std::map<std::string, std::map<std::string, std::string>> owners_;
};

}  // namespace

Program link(const std::vector<SourceUnit>& units, const LinkOptions& options) {
    Linker linker(options);
    for (const auto& u : units) linker.add(u);
    return linker.result();
}

Program link(const Program& program, const LinkOptions& options) {
    return link(std::vector<SourceUnit>{{program, "<input>", {}}}, options);
}

Program load_and_link(const std::vector<std::filesystem::path>& files, const LinkOptions& options) {
    std::vector<SourceUnit> units;
    for (const auto& f : files) units.push_back({parse_file(f), f.generic_string(), f.has_parent_path() ? f.parent_path() : std::filesystem::path(".")});
    return link(units, options);
}

}  // namespace qsplit::aspen
