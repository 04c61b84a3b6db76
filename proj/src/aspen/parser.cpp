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

#include "qsplit/aspen/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qsplit::aspen {

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, Path, End } kind = End;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;

    bool is(char p) const { return kind == Punct && text.size() == 1 && text[0] == p; }
    bool is_word(std::string_view w) const { return kind == Ident && text == w; }

    std::string describe() const {
        switch (kind) {
            case Ident: return "identifier '" + text + "'";
            case Number: return "number " + text;
            case Punct: return "'" + text + "'";
            case Path: return "path '" + text + "'";
            case End: return "end of input";
        }
        return "?";
    }
};

class Lexer {
  public:
    Lexer(std::string_view text, const std::string& source) : text_(text), source_(source) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Token::Ident;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    t.text += advance();
                }
                const bool include = t.text == "include";
                out.push_back(std::move(t));
                if (include) out.push_back(read_path());
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
                out.push_back(read_number(t));
                continue;
            }
            if (std::string_view("{}[](),+-*/^=").find(c) != std::string_view::npos) {
                t.kind = Token::Punct;
                t.text = std::string(1, advance());
                out.push_back(std::move(t));
                continue;
            }
            throw ParseError(source_, line_, column_, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    Token read_path() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
        Token t;
        t.kind = Token::Path;
        t.line = line_;
        t.column = column_;
        while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r') {
            if (text_[pos_] == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') break;
            t.text += advance();
        }
        while (!t.text.empty() && std::isspace(static_cast<unsigned char>(t.text.back()))) t.text.pop_back();
        if (t.text.empty()) throw ParseError(source_, t.line, t.column, "expected include path");
        return t;
    }

    Token read_number(Token t) {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            advance();
            digits();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                while (pos_ < look) advance();
                digits();
            }
        }
        t.kind = Token::Number;
        t.text = std::string(text_.substr(start, pos_ - start));
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw ParseError(source_, t.line, t.column, "malformed number '" + t.text + "'");
        }
        return t;
    }

    std::string_view text_;
    const std::string& source_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
  public:
    Parser(std::vector<Token> tokens, std::string source) : tokens_(std::move(tokens)), source_(std::move(source)) {}

    Program program() {
        Program p;
        while (peek().kind != Token::End) {
            const Token& t = peek();
            if (t.is_word("include")) {
                next();
                p.includes.push_back(next().text);
            } else if (t.is_word("machine")) {
                p.machines.push_back(machine());
            } else if (t.is_word("node")) {
                p.nodes.push_back(node());
            } else if (t.is_word("socket")) {
                p.sockets.push_back(socket());
            } else if (t.is_word("core")) {
                p.providers.push_back(provider(ProviderKind::Core));
            } else if (t.is_word("memory")) {
                p.providers.push_back(provider(ProviderKind::Memory));
            } else if (t.is_word("interconnect")) {
                p.providers.push_back(provider(ProviderKind::Interconnect));
            } else if (t.is_word("model")) {
                p.models.push_back(model());
            } else {
                fail(t, "expected declaration (include, machine, node, socket, core, memory, interconnect, model)");
            }
        }
        return p;
    }

    Expr standalone_expression() {
        Expr e = expression();
        if (peek().kind != Token::End) fail(peek(), "unexpected trailing input after expression");
        return e;
    }

  private:
    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError(source_, t.line, t.column, message + ", found " + t.describe());
    }

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < tokens_.size() - 1) ++pos_;
        return t;
    }

    void expect(char p) {
        if (!peek().is(p)) fail(peek(), std::string("expected '") + p + "'");
        next();
    }

    void expect_word(std::string_view w) {
        if (!peek().is_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
        next();
    }

    std::string name(const char* what) {
        if (peek().kind != Token::Ident) fail(peek(), std::string("expected ") + what);
        return next().text;
    }

    Expr bracketed() {
        expect('[');
        Expr e = expression();
        expect(']');
        return e;
    }

    Quantity quantity(std::string_view kind_word) {
        Quantity q;
        q.count = bracketed();
        q.name = name("component name");
        expect_word(kind_word);
        return q;
    }

    MachineDecl machine() {
        expect_word("machine");
        MachineDecl m;
        m.name = name("machine name");
        expect('{');
        while (!peek().is('}')) m.nodes.push_back(quantity("nodes"));
        expect('}');
        return m;
    }

    NodeDecl node() {
        expect_word("node");
        NodeDecl n;
        n.name = name("node name");
        expect('{');
        while (!peek().is('}')) n.sockets.push_back(quantity("sockets"));
        expect('}');
        return n;
    }

    SocketDecl socket() {
        expect_word("socket");
        SocketDecl s;
        s.name = name("socket name");
        expect('{');
        while (!peek().is('}')) {
            if (peek().is('[')) {
                s.cores.push_back(quantity("cores"));
            } else if (peek().is_word("linked")) {
                next();
                expect_word("with");
                s.link = name("interconnect name");
            } else if (peek().kind == Token::Ident) {
                s.memory = next().text;
                expect_word("memory");
            } else {
                fail(peek(), "expected socket member ('[n] core cores', 'name memory' or 'linked with name')");
            }
        }
        expect('}');
        return s;
    }

    Param param() {
        expect_word("param");
        Param p;
        p.name = name("parameter name");
        expect('=');
        p.value = expression();
        return p;
    }

    ProviderDecl provider(ProviderKind kind) {
        ProviderDecl d;
        d.kind = kind;
        next();
        d.name = name("component name");
        expect('{');
        while (!peek().is('}')) {
            if (peek().is_word("param")) {
                d.params.push_back(param());
            } else if (peek().is_word("resource")) {
                next();
                ResourceDef r;
                r.name = name("resource name");
                expect('(');
                r.arg = name("resource argument name");
                expect(')');
                r.formula = bracketed();
                if (peek().is_word("with")) {
                    next();
                    do {
                        TraitRule rule;
                        rule.name = name("trait name");
                        rule.formula = bracketed();
                        r.traits.push_back(std::move(rule));
                    } while (peek().is(',') && (next(), true));
                }
                d.resources.push_back(std::move(r));
            } else {
                fail(peek(), "expected 'param' or 'resource'");
            }
        }
        expect('}');
        return d;
    }

    ModelDecl model() {
        expect_word("model");
        ModelDecl m;
        m.name = name("model name");
        expect('{');
        while (!peek().is('}')) {
            if (peek().is_word("param")) {
                m.params.push_back(param());
            } else if (peek().is_word("data")) {
                next();
                DataDecl d;
                d.name = name("data name");
                expect_word("as");
                d.type = name("data type");
                expect('(');
                d.args.push_back(expression());
                while (peek().is(',')) {
                    next();
                    d.args.push_back(expression());
                }
                expect(')');
                m.data.push_back(std::move(d));
            } else if (peek().is_word("kernel")) {
                m.kernels.push_back(kernel());
            } else {
                fail(peek(), "expected 'param', 'data' or 'kernel'");
            }
        }
        expect('}');
        return m;
    }

    Kernel kernel() {
        expect_word("kernel");
        Kernel k;
        k.name = name("kernel name");
        expect('{');
        while (!peek().is('}')) {
            if (peek().is_word("execute")) {
                k.body.emplace_back(execute());
            } else if (peek().kind == Token::Ident) {
                k.body.emplace_back(KernelCall{next().text});
            } else {
                fail(peek(), "expected 'execute' block or kernel call");
            }
        }
        expect('}');
        return k;
    }

    ExecuteBlock execute() {
        expect_word("execute");
        ExecuteBlock b;
        if (peek().kind == Token::Ident) b.label = next().text;
        b.count = bracketed();
        expect('{');
        while (!peek().is('}')) b.statements.push_back(statement());
        expect('}');
        return b;
    }

    ResourceStatement statement() {
        const Token start = peek();
        if (start.kind != Token::Ident) fail(start, "expected resource statement");
        const auto kind = resource_kind_from(start.text);
        if (!kind) fail(start, "expected resource kind (flops, loads, stores, intracomm, microseconds, QuOps)");
        next();

        ResourceStatement s;
        s.kind = *kind;
        s.amount = bracketed();
        for (;;) {
            const Token t = peek();
            if (t.is_word("as")) {
                next();
                s.traits.push_back(name("trait name"));
                while (peek().is(',')) {
                    next();
                    s.traits.push_back(name("trait name"));
                }
            } else if (t.is_word("from") || t.is_word("to")) {
                next();
                if (s.direction != DataDirection::None) fail(t, "data direction given twice");
                s.direction = t.text == "from" ? DataDirection::From : DataDirection::To;
                s.data = name("data name");
            } else if (t.is_word("of")) {
                next();
                expect_word("size");
                if (s.size) fail(t, "size given twice");
                s.size = bracketed();
            } else {
                break;
            }
        }
        check_statement(start, s);
        return s;
    }

    void check_statement(const Token& at, const ResourceStatement& s) const {
        const std::string kind = to_string(s.kind);
        switch (s.kind) {
            case ResourceKind::Flops:
            case ResourceKind::Intracomm:
                if (s.direction != DataDirection::None || s.size) fail(at, kind + " takes only 'as' traits");
                break;
            case ResourceKind::Loads:
            case ResourceKind::Stores: {
                const auto allowed = s.kind == ResourceKind::Loads ? DataDirection::From : DataDirection::To;
                const char* word = s.kind == ResourceKind::Loads ? "from" : "to";
                if (!s.traits.empty()) fail(at, kind + " does not take traits");
                if (s.direction != DataDirection::None && s.direction != allowed) {
                    fail(at, kind + " must use '" + word + "'");
                }
                if ((s.direction == DataDirection::None) == !s.size) {
                    fail(at, kind + " needs exactly one of '" + word + " data' or 'of size [expr]'");
                }
                break;
            }
            case ResourceKind::Microseconds:
            case ResourceKind::QuOps:
                if (s.direction != DataDirection::None || s.size || !s.traits.empty()) {
                    fail(at, kind + " takes no modifiers");
                }
                break;
        }
    }

    // expr   := term (('+' | '-') term)*
    // term   := factor (('*' | '/') factor)*
    // factor := '-' factor | power
    // power  := primary ('^' factor)?
    Expr expression() {
        Expr e = term();
        while (peek().is('+') || peek().is('-')) {
            const char op = next().text[0];
            e = Expr::binary(op, std::move(e), term());
        }
        return e;
    }

    Expr term() {
        Expr e = factor();
        while (peek().is('*') || peek().is('/')) {
            const char op = next().text[0];
            e = Expr::binary(op, std::move(e), factor());
        }
        return e;
    }

    Expr factor() {
        if (peek().is('-')) {
            next();
            return Expr::unary('-', factor());
        }
        Expr base = primary();
        if (peek().is('^')) {
            next();
            return Expr::binary('^', std::move(base), factor());
        }
        return base;
    }

    Expr primary() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            next();
            return Expr::number(t.number);
        }
        if (t.kind == Token::Ident) {
            std::string id = next().text;
            if (!peek().is('(')) return Expr::ident(std::move(id));
            next();
            std::vector<Expr> args;
            if (!peek().is(')')) {
                args.push_back(expression());
                while (peek().is(',')) {
                    next();
                    args.push_back(expression());
                }
            }
            expect(')');
            return Expr::call(std::move(id), std::move(args));
        }
        if (t.is('(')) {
            next();
            Expr e = expression();
            expect(')');
            return e;
        }
        fail(t, "expected expression");
    }

    std::vector<Token> tokens_;
    std::string source_;
    std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view text, const std::string& source) {
    Parser parser(Lexer(text, source).run(), source);
    return parser.program();
}

Program parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

Expr parse_expression(std::string_view text) {
    const std::string source = "<expression>";
    Parser parser(Lexer(text, source).run(), source);
    return parser.standalone_expression();
}

}  // namespace qsplit::aspen
