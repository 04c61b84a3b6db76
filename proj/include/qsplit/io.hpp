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

// File formats shared by the library and the command line tool.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "qsplit/chimera.hpp"
#include "qsplit/embedding.hpp"
#include "qsplit/qubo_ising.hpp"
#include "qsplit/sampler_post.hpp"

namespace qsplit::io {

using nlohmann::json;

// {"m":..,"n":..,"l":..,"dead_qubits":[..],"dead_couplers":[[a,b],..]}
json chimera_to_json(const ChimeraGraph& g);
ChimeraGraph chimera_from_json(const json& j);

// {"n":..,"h":[..],"j":[[i,j,v],..],"offset":..}
json ising_to_json(const IsingModel& m);
IsingModel ising_from_json(const json& j);

// {"vertex_models":{"0":[q,..],..}}
json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const json& j);

json report_to_json(const EmbeddingReport& r);

// First token is n. The rest is either n*n row-major entries laid out as n
// lines of n values, or "i j value" triplet lines accumulated into the
// symmetric entry. "n triplets" on the first line forces the triplet form.
QuboInstance read_qubo_text(std::istream& in);

// One "u v" pair per line, '#' comments allowed. A line holding a single
// integer declares the vertex count (otherwise max id + 1).
LogicalGraph read_edge_list(std::istream& in);

// JSON lines: {"config":[+-1,..],"energy":..}
post::ReadoutSet read_readouts(std::istream& in);
void write_readouts(std::ostream& out, const post::ReadoutSet& readouts);
json summary_to_json(const post::SolutionSummary& s);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace qsplit::io
