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

#include "qsplit/aspen/ast.hpp"

#include <algorithm>

namespace qsplit::aspen {

Expr::Expr() : Expr(ExprNode{NumberLit{0.0}}) {}

Expr::Expr(ExprNode node) : node_(std::make_shared<const ExprNode>(std::move(node))) {}

Expr Expr::number(double v) { return Expr(ExprNode{NumberLit{v}}); }
Expr Expr::ident(std::string name) { return Expr(ExprNode{Identifier{std::move(name)}}); }
Expr Expr::unary(char op, Expr operand) { return Expr(ExprNode{UnaryOp{op, std::move(operand)}}); }
Expr Expr::binary(char op, Expr lhs, Expr rhs) {
    return Expr(ExprNode{BinaryOp{op, std::move(lhs), std::move(rhs)}});
}
Expr Expr::call(std::string fn, std::vector<Expr> args) {
    return Expr(ExprNode{CallOp{std::move(fn), std::move(args)}});
}

bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

const char* to_string(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::Flops: return "flops";
        case ResourceKind::Loads: return "loads";
        case ResourceKind::Stores: return "stores";
        case ResourceKind::Microseconds: return "microseconds";
        case ResourceKind::QuOps: return "QuOps";
        case ResourceKind::Intracomm: return "intracomm";
    }
    return "?";
}

std::optional<ResourceKind> resource_kind_from(const std::string& word) {
    for (auto k : {ResourceKind::Flops, ResourceKind::Loads, ResourceKind::Stores, ResourceKind::Microseconds,
                   ResourceKind::QuOps, ResourceKind::Intracomm}) {
        if (word == to_string(k)) return k;
    }
    return std::nullopt;
}

namespace {

template <typename T>
const T* find_named(const std::vector<T>& items, const std::string& name) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& t) { return t.name == name; });
    return it == items.end() ? nullptr : &*it;
}

}  // namespace

const ResourceDef* ProviderDecl::find_resource(const std::string& resource) const {
    return find_named(resources, resource);
}

const Kernel* ModelDecl::find_kernel(const std::string& kernel) const { return find_named(kernels, kernel); }
const DataDecl* ModelDecl::find_data(const std::string& data_name) const { return find_named(data, data_name); }

const MachineDecl* Program::find_machine(const std::string& name) const { return find_named(machines, name); }
const NodeDecl* Program::find_node(const std::string& name) const { return find_named(nodes, name); }
const SocketDecl* Program::find_socket(const std::string& name) const { return find_named(sockets, name); }
const ModelDecl* Program::find_model(const std::string& name) const { return find_named(models, name); }

const ProviderDecl* Program::find_provider(ProviderKind kind, const std::string& name) const {
    auto it = std::find_if(providers.begin(), providers.end(),
                           [&](const ProviderDecl& p) { return p.kind == kind && p.name == name; });
    return it == providers.end() ? nullptr : &*it;
}

}  // namespace qsplit::aspen
