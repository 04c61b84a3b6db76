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

#include "qsplit/aspen/printer.hpp"

#include <charconv>
#include <sstream>

namespace qsplit::aspen {

namespace {

// Binding strength: additive 1, multiplicative 2, unary 3, power 4, atom 5.
int precedence(const Expr& e) {
    const auto& v = e.node().value;
    if (const auto* b = std::get_if<BinaryOp>(&v)) {
        switch (b->op) {
            case '+':
            case '-': return 1;
            case '*':
            case '/': return 2;
            default: return 4;
        }
    }
    if (std::holds_alternative<UnaryOp>(v)) return 3;
    return 5;
}

std::string number_text(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

void render(std::ostream& os, const Expr& e);

void render_wrapped(std::ostream& os, const Expr& e, bool wrap) {
    if (wrap) os << '(';
    render(os, e);
    if (wrap) os << ')';
}

void render(std::ostream& os, const Expr& e) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NumberLit>) {
                os << number_text(n.value);
            } else if constexpr (std::is_same_v<T, Identifier>) {
                os << n.name;
            } else if constexpr (std::is_same_v<T, UnaryOp>) {
                os << n.op;
                render_wrapped(os, n.operand, precedence(n.operand) < 3);
            } else if constexpr (std::is_same_v<T, BinaryOp>) {
                if (n.op == '^') {
                    render_wrapped(os, n.lhs, precedence(n.lhs) < 5);
                    os << '^';
                    render_wrapped(os, n.rhs, precedence(n.rhs) < 3);
                } else {
                    const int p = n.op == '+' || n.op == '-' ? 1 : 2;
                    render_wrapped(os, n.lhs, precedence(n.lhs) < p);
                    os << ' ' << n.op << ' ';
                    render_wrapped(os, n.rhs, precedence(n.rhs) <= p);
                }
            } else {
                os << n.fn << '(';
                for (std::size_t i = 0; i < n.args.size(); ++i) {
                    if (i) os << ", ";
                    render(os, n.args[i]);
                }
                os << ')';
            }
        },
        e.node().value);
}

const char* provider_keyword(ProviderKind k) {
    switch (k) {
        case ProviderKind::Core: return "core";
        case ProviderKind::Memory: return "memory";
        case ProviderKind::Interconnect: return "interconnect";
    }
    return "core";
}

void print_params(std::ostream& os, const std::vector<Param>& params) {
    for (const auto& p : params) os << "  param " << p.name << " = " << to_string(p.value) << '\n';
}

void print_statement(std::ostream& os, const ResourceStatement& s) {
    os << "      " << to_string(s.kind) << " [" << to_string(s.amount) << ']';
    if (s.direction == DataDirection::From) os << " from " << s.data;
    if (s.direction == DataDirection::To) os << " to " << s.data;
    if (s.size) os << " of size [" << to_string(*s.size) << ']';
    if (!s.traits.empty()) {
        os << " as ";
        for (std::size_t i = 0; i < s.traits.size(); ++i) os << (i ? ", " : "") << s.traits[i];
    }
    os << '\n';
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    render(os, e);
    return os.str();
}

std::string print(const Program& p) {
    std::ostringstream os;
    for (const auto& inc : p.includes) os << "include " << inc << '\n';
    if (!p.includes.empty()) os << '\n';

    for (const auto& m : p.machines) {
        os << "machine " << m.name << "\n{\n";
        for (const auto& q : m.nodes) os << "  [" << to_string(q.count) << "] " << q.name << " nodes\n";
        os << "}\n\n";
    }
    for (const auto& n : p.nodes) {
        os << "node " << n.name << "\n{\n";
        for (const auto& q : n.sockets) os << "  [" << to_string(q.count) << "] " << q.name << " sockets\n";
        os << "}\n\n";
    }
    for (const auto& s : p.sockets) {
        os << "socket " << s.name << "\n{\n";
        for (const auto& q : s.cores) os << "  [" << to_string(q.count) << "] " << q.name << " cores\n";
        if (s.memory) os << "  " << *s.memory << " memory\n";
        if (s.link) os << "  linked with " << *s.link << '\n';
        os << "}\n\n";
    }
    for (const auto& d : p.providers) {
        os << provider_keyword(d.kind) << ' ' << d.name << "\n{\n";
        print_params(os, d.params);
        for (const auto& r : d.resources) {
            os << "  resource " << r.name << '(' << r.arg << ") [" << to_string(r.formula) << ']';
            for (std::size_t i = 0; i < r.traits.size(); ++i) {
                os << (i ? ", " : "\n    with ") << r.traits[i].name << " [" << to_string(r.traits[i].formula) << ']';
            }
            os << '\n';
        }
        os << "}\n\n";
    }
    for (const auto& m : p.models) {
        os << "model " << m.name << "\n{\n";
        print_params(os, m.params);
        for (const auto& d : m.data) {
            os << "  data " << d.name << " as " << d.type << '(';
            for (std::size_t i = 0; i < d.args.size(); ++i) os << (i ? ", " : "") << to_string(d.args[i]);
            os << ")\n";
        }
        for (const auto& k : m.kernels) {
            os << "\n  kernel " << k.name << "\n  {\n";
            for (const auto& item : k.body) {
                if (const auto* call = std::get_if<KernelCall>(&item)) {
                    os << "    " << call->name << '\n';
                    continue;
                }
                const auto& b = std::get<ExecuteBlock>(item);
                os << "    execute " << (b.label.empty() ? "" : b.label + " ") << '[' << to_string(b.count) << "]\n    {\n";
                for (const auto& s : b.statements) print_statement(os, s);
                os << "    }\n";
            }
            os << "  }\n";
        }
        os << "}\n\n";
    }
    return os.str();
}

}  // namespace qsplit::aspen
