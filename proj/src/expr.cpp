#include "av/expr.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "av/errors.hpp"

namespace av {

namespace {

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
    enum Kind { Add, Scale, Graph, TransposeEndo, TransposeExpr, Compose, Power, Name };
    Kind kind;
    Rat coeff = 0;
    std::string name;
    int exponent = 0;
    std::vector<NodePtr> kids;
};

struct Token {
    enum Kind { Ident, Number, Sym, End } kind = End;
    std::string text;
    size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& cur() const { return cur_; }

    void advance() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
        cur_.pos = i_;
        if (i_ >= s_.size()) {
            cur_.kind = Token::End;
            cur_.text.clear();
            return;
        }
        char c = s_[i_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum((unsigned char)s_[j]) || s_[j] == '_'))
                ++j;
            cur_.kind = Token::Ident;
            cur_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
            cur_.kind = Token::Number;
            cur_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        cur_.kind = Token::Sym;
        cur_.text = std::string(1, c);
        ++i_;
    }

  private:
    std::string s_;
    size_t i_ = 0;
    Token cur_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text), lex_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (lex_.cur().kind != Token::End) fail("trailing input");
        return e;
    }

  private:
    std::string text_;
    Lexer lex_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("expression '" + text_ + "' at offset " +
                         std::to_string(lex_.cur().pos) + ": " + msg);
    }

    bool sym(const char* s) const {
        return lex_.cur().kind == Token::Sym && lex_.cur().text == s;
    }

    void expect_sym(const char* s) {
        if (!sym(s)) fail(std::string("expected '") + s + "'");
        lex_.advance();
    }

    Int number() {
        if (lex_.cur().kind != Token::Number) fail("expected a number");
        Int n(lex_.cur().text);
        lex_.advance();
        return n;
    }

    NodePtr expr() {
        NodePtr first = term();
        if (!sym("+")) return first;
        NodePtr add = std::make_shared<Node>();
        add->kind = Node::Add;
        add->kids.push_back(first);
        while (sym("+")) {
            lex_.advance();
            add->kids.push_back(term());
        }
        return add;
    }

    NodePtr term() {
        if (lex_.cur().kind == Token::Number) {
            Int num = number();
            Int den = 1;
            if (sym("/")) {
                lex_.advance();
                den = number();
                if (den == 0) fail("zero denominator");
            }
            expect_sym("*");
            NodePtr scale = std::make_shared<Node>();
            scale->kind = Node::Scale;
            scale->coeff = Rat(num, den);
            scale->coeff.canonicalize();
            scale->kids.push_back(factor());
            return scale;
        }
        return factor();
    }

    NodePtr factor() {
        if (sym("(")) {
            lex_.advance();
            NodePtr e = expr();
            expect_sym(")");
            return e;
        }
        if (lex_.cur().kind != Token::Ident) fail("expected a name or '('");
        std::string id = lex_.cur().text;
        lex_.advance();
        if (!sym("(")) {
            NodePtr n = std::make_shared<Node>();
            n->kind = Node::Name;
            n->name = id;
            return n;
        }
        lex_.advance();
        NodePtr n = std::make_shared<Node>();
        if (id == "graph") {
            n->kind = Node::Graph;
            n->name = ident_arg();
            expect_sym(")");
        } else if (id == "transpose") {
            // decided at resolution time: an endomorphism name stays a
            // transposed graph, anything else transposes a correspondence
            NodePtr inner = expr();
            expect_sym(")");
            if (inner->kind == Node::Name) {
                n->kind = Node::TransposeEndo;
                n->name = inner->name;
            } else {
                n->kind = Node::TransposeExpr;
                n->kids.push_back(inner);
            }
        } else if (id == "compose") {
            n->kind = Node::Compose;
            n->kids.push_back(expr());
            expect_sym(",");
            n->kids.push_back(expr());
            expect_sym(")");
        } else if (id == "power") {
            n->kind = Node::Power;
            n->kids.push_back(expr());
            expect_sym(",");
            Int m = number();
            if (m < 1 || m > 1000) fail("power exponent out of range");
            n->exponent = (int)m.get_si();
            expect_sym(")");
        } else {
            fail("unknown function '" + id + "'");
        }
        return n;
    }

    std::string ident_arg() {
        if (lex_.cur().kind != Token::Ident) fail("expected an endomorphism name");
        std::string id = lex_.cur().text;
        lex_.advance();
        return id;
    }
};

struct Resolver {
    const VarietyConfig* cfg;
    const VarietyModel* vm;  // null for the reference-only pass
    std::set<std::string> in_progress;
    std::map<std::string, Correspondence> memo;

    Correspondence resolve_name(const std::string& name) {
        if (cfg->endomorphisms.count(name))
            throw InputError("'" + name +
                             "' names an endomorphism; write graph(" + name + ")");
        auto it = cfg->correspondences.find(name);
        if (it == cfg->correspondences.end())
            throw InputError("unknown correspondence '" + name + "'");
        if (in_progress.count(name))
            throw InputError("cyclic correspondence definition involving '" + name + "'");
        if (vm) {
            auto m = memo.find(name);
            if (m != memo.end()) return m->second;
        }
        in_progress.insert(name);
        Correspondence c = eval(Parser(it->second).parse());
        in_progress.erase(name);
        if (vm) memo[name] = c;
        return c;
    }

    const EndMatrix& endo(const std::string& name) const {
        auto it = cfg->endomorphisms.find(name);
        if (it == cfg->endomorphisms.end())
            throw InputError("unknown endomorphism '" + name + "'");
        return it->second;
    }

    Correspondence eval(const NodePtr& n) {
        switch (n->kind) {
            case Node::Name:
                return resolve_name(n->name);
            case Node::Graph: {
                const EndMatrix& f = endo(n->name);
                if (!vm) return {};
                return graph(f, *vm);
            }
            case Node::TransposeEndo: {
                if (cfg->endomorphisms.count(n->name)) {
                    if (!vm) return {};
                    return transpose_graph(endo(n->name), *vm);
                }
                Correspondence c = resolve_name(n->name);
                if (!vm) return {};
                return transpose(c, *vm);
            }
            case Node::TransposeExpr: {
                Correspondence c = eval(n->kids[0]);
                if (!vm) return {};
                return transpose(c, *vm);
            }
            case Node::Compose: {
                Correspondence a = eval(n->kids[0]);
                Correspondence b = eval(n->kids[1]);
                if (!vm) return {};
                return compose(a, b, *vm);
            }
            case Node::Power: {
                Correspondence a = eval(n->kids[0]);
                if (!vm) return {};
                return corr_power(a, n->exponent, *vm);
            }
            case Node::Scale: {
                Correspondence a = eval(n->kids[0]);
                if (!vm) return {};
                return corr_scale(n->coeff, a, *vm);
            }
            case Node::Add: {
                Correspondence acc = eval(n->kids[0]);
                for (size_t i = 1; i < n->kids.size(); ++i) {
                    Correspondence b = eval(n->kids[i]);
                    if (vm) acc = corr_add(acc, b, *vm);
                }
                return acc;
            }
        }
        throw InputError("unreachable expression node");
    }
};

}  // namespace

void check_corr_references(const VarietyConfig& cfg) {
    Resolver r{&cfg, nullptr, {}, {}};
    for (const auto& [name, text] : cfg.correspondences) {
        (void)text;
        try {
            r.resolve_name(name);
        } catch (const InputError& e) {
            throw InputError("correspondences." + name + ": " + e.what());
        }
    }
}

Correspondence eval_corr_expr(const std::string& text, const VarietyConfig& cfg,
                              const VarietyModel& vm) {
    Resolver r{&cfg, &vm, {}, {}};
    auto it = cfg.correspondences.find(text);
    if (it != cfg.correspondences.end()) return r.resolve_name(text);
    return r.eval(Parser(text).parse());
}

}  // namespace av
