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

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qsplit::aspen {

struct ExprNode;

// Immutable arithmetic expression tree. Copies share structure.
class Expr {
  public:
    Expr();  // literal 0
    explicit Expr(ExprNode node);

    static Expr number(double v);
    static Expr ident(std::string name);
    static Expr unary(char op, Expr operand);
    static Expr binary(char op, Expr lhs, Expr rhs);
    static Expr call(std::string fn, std::vector<Expr> args);

    const ExprNode& node() const { return *node_; }

    friend bool operator==(const Expr& a, const Expr& b);

  private:
    std::shared_ptr<const ExprNode> node_;
};

struct NumberLit {
    double value;
    bool operator==(const NumberLit&) const = default;
};
struct Identifier {
    std::string name;
    bool operator==(const Identifier&) const = default;
};
struct UnaryOp {
    char op;  // '-'
    Expr operand;
    bool operator==(const UnaryOp&) const = default;
};
struct BinaryOp {
    char op;  // + - * / ^
    Expr lhs, rhs;
    bool operator==(const BinaryOp&) const = default;
};
struct CallOp {
    std::string fn;
    std::vector<Expr> args;
    bool operator==(const CallOp&) const = default;
};

struct ExprNode {
    std::variant<NumberLit, Identifier, UnaryOp, BinaryOp, CallOp> value;
    bool operator==(const ExprNode&) const = default;
};

// ---- machine side --------------------------------------------------------

struct Param {
    std::string name;
    Expr value;
    bool operator==(const Param&) const = default;
};

// "[count] name kind", e.g. "[8] xeon_core cores".
struct Quantity {
    Expr count;
    std::string name;
    bool operator==(const Quantity&) const = default;
};

// Trait adjustment of a resource time; the formula sees the unadjusted time
// as `base`.
struct TraitRule {
    std::string name;
    Expr formula;
    bool operator==(const TraitRule&) const = default;
};

// "resource QuOps(number) [number * 20/1000000] with ..." yielding seconds.
struct ResourceDef {
    std::string name;
    std::string arg;
    Expr formula;
    std::vector<TraitRule> traits;
    bool operator==(const ResourceDef&) const = default;
};

enum class ProviderKind { Core, Memory, Interconnect };

// core / memory / interconnect declarations: parameters plus resources.
struct ProviderDecl {
    ProviderKind kind = ProviderKind::Core;
    std::string name;
    std::vector<Param> params;
    std::vector<ResourceDef> resources;
    bool operator==(const ProviderDecl&) const = default;

    const ResourceDef* find_resource(const std::string& resource) const;
};

struct MachineDecl {
    std::string name;
    std::vector<Quantity> nodes;
    bool operator==(const MachineDecl&) const = default;
};

struct NodeDecl {
    std::string name;
    std::vector<Quantity> sockets;
    bool operator==(const NodeDecl&) const = default;
};

struct SocketDecl {
    std::string name;
    std::vector<Quantity> cores;
    std::optional<std::string> memory;
    std::optional<std::string> link;
    bool operator==(const SocketDecl&) const = default;
};

// ---- application side ----------------------------------------------------

enum class ResourceKind { Flops, Loads, Stores, Microseconds, QuOps, Intracomm };

const char* to_string(ResourceKind kind);
std::optional<ResourceKind> resource_kind_from(const std::string& word);

enum class DataDirection { None, From, To };

struct ResourceStatement {
    ResourceKind kind = ResourceKind::Flops;
    Expr amount;
    std::vector<std::string> traits;
    DataDirection direction = DataDirection::None;
    std::string data;            // set with From/To
    std::optional<Expr> size;    // "of size [expr]"
    bool operator==(const ResourceStatement&) const = default;
};

struct ExecuteBlock {
    std::string label;  // may be empty
    Expr count;
    std::vector<ResourceStatement> statements;
    bool operator==(const ExecuteBlock&) const = default;
};

struct KernelCall {
    std::string name;
    bool operator==(const KernelCall&) const = default;
};

using KernelItem = std::variant<ExecuteBlock, KernelCall>;

struct Kernel {
    std::string name;
    std::vector<KernelItem> body;
    bool operator==(const Kernel&) const = default;
};

// "data Input as Array(count, element_bytes)"
struct DataDecl {
    std::string name;
    std::string type;
    std::vector<Expr> args;
    bool operator==(const DataDecl&) const = default;
};

struct ModelDecl {
    std::string name;
    std::vector<Param> params;
    std::vector<DataDecl> data;
    std::vector<Kernel> kernels;
    bool operator==(const ModelDecl&) const = default;

    const Kernel* find_kernel(const std::string& kernel) const;
    const DataDecl* find_data(const std::string& data_name) const;
};

// A parsed file, or after linking the merge of a file and its includes.
struct Program {
    std::vector<std::string> includes;
    std::vector<MachineDecl> machines;
    std::vector<NodeDecl> nodes;
    std::vector<SocketDecl> sockets;
    std::vector<ProviderDecl> providers;
    std::vector<ModelDecl> models;
    bool operator==(const Program&) const = default;

    const MachineDecl* find_machine(const std::string& name) const;
    const NodeDecl* find_node(const std::string& name) const;
    const SocketDecl* find_socket(const std::string& name) const;
    const ProviderDecl* find_provider(ProviderKind kind, const std::string& name) const;
    const ModelDecl* find_model(const std::string& name) const;
};

}  // namespace qsplit::aspen
