#include "gbx/expr.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace gbx {

namespace detail {

// Node kinds.  Binary operators store two children; calls store one or two
// argument children and the callee name; leaves store either a literal value
// or an identifier name.
enum class Op { add, sub, mul, div, pow, neg, call, number, ident };

struct ExprNode {
    Op op;
    real50 value;                                  // number
    std::string name;                              // ident, call
    std::vector<std::shared_ptr<const ExprNode>> kids;
};

} // namespace detail

namespace {

using detail::ExprNode;
using detail::Op;
using NodePtr = std::shared_ptr<const ExprNode>;

[[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
    throw format_error("expression: " + what + " at position " + std::to_string(pos));
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

// Hand-rolled tokenizer-free parser: one pass over the text with explicit
// positions so error messages can point at the offending character.
class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail_at(pos_, "unexpected trailing input");
        return root;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, std::vector<NodePtr> kids) {
        auto node = std::make_shared<ExprNode>();
        node->op = op;
        node->kids = std::move(kids);
        return node;
    }

    NodePtr parse_expr() {
        NodePtr left = parse_term();
        for (;;) {
            if (eat('+')) left = make(Op::add, {left, parse_term()});
            else if (eat('-')) left = make(Op::sub, {left, parse_term()});
            else return left;
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_factor();
        for (;;) {
            if (eat('*')) left = make(Op::mul, {left, parse_factor()});
            else if (eat('/')) left = make(Op::div, {left, parse_factor()});
            else return left;
        }
    }

    NodePtr parse_factor() {
        if (eat('-')) return make(Op::neg, {parse_factor()});
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        // Right-associative: a^b^c parses as a^(b^c).  The exponent is a
        // factor so that 2^-3 works without parentheses.
        if (eat('^')) return make(Op::pow, {base, parse_factor()});
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail_at(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!eat(')')) fail_at(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (ident_start(c)) return parse_ident_or_call();
        fail_at(pos_, std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                // "2e" followed by something else: the 'e' was not an exponent.
                pos_ = mark;
            }
        }
        std::string token = text_.substr(start, pos_ - start);
        if (token == ".") fail_at(start, "malformed number");
        auto node = std::make_shared<ExprNode>();
        node->op = Op::number;
        // real50 construction from the decimal string keeps all 50 digits.
        node->value = real50(token);
        return node;
    }

    NodePtr parse_ident_or_call() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (eat('(')) {
            std::vector<NodePtr> args;
            args.push_back(parse_expr());
            while (eat(',')) args.push_back(parse_expr());
            if (!eat(')')) fail_at(pos_, "expected ')' after arguments");
            auto node = std::make_shared<ExprNode>();
            node->op = Op::call;
            node->name = std::move(name);
            node->kids = std::move(args);
            return node;
        }
        auto node = std::make_shared<ExprNode>();
        node->op = Op::ident;
        node->name = std::move(name);
        return node;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void eval_fail(const std::string& what) { throw domain_error("expression: " + what); }

real50 call_builtin(const std::string& name, const std::vector<real50>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            eval_fail("function '" + name + "' takes " + std::to_string(n) + " argument" +
                      (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
    };
    if (name == "log") {
        need(1);
        if (args[0] <= 0) eval_fail("log of nonpositive value");
        return log(args[0]);
    }
    if (name == "loglog") {
        need(1);
        if (args[0] <= 1) eval_fail("loglog needs an argument > 1");
        return log(log(args[0]));
    }
    if (name == "sqrt") {
        need(1);
        if (args[0] < 0) eval_fail("sqrt of negative value");
        return sqrt(args[0]);
    }
    if (name == "exp") {
        need(1);
        return exp(args[0]);
    }
    if (name == "abs") {
        need(1);
        return abs(args[0]);
    }
    if (name == "min") {
        need(2);
        return args[0] < args[1] ? args[0] : args[1];
    }
    if (name == "max") {
        need(2);
        return args[0] > args[1] ? args[0] : args[1];
    }
    eval_fail("unknown function '" + name + "'");
}

real50 eval_node(const ExprNode& node, const ExprEnv& env) {
    switch (node.op) {
        case Op::number: return node.value;
        case Op::ident: {
            if (node.name == "pi") return r50::pi();
            if (node.name == "e") return r50::e();
            auto it = env.find(node.name);
            if (it == env.end()) eval_fail("unbound variable '" + node.name + "'");
            return it->second;
        }
        case Op::neg: return -eval_node(*node.kids[0], env);
        case Op::add: return eval_node(*node.kids[0], env) + eval_node(*node.kids[1], env);
        case Op::sub: return eval_node(*node.kids[0], env) - eval_node(*node.kids[1], env);
        case Op::mul: return eval_node(*node.kids[0], env) * eval_node(*node.kids[1], env);
        case Op::div: {
            real50 denom = eval_node(*node.kids[1], env);
            if (denom == 0) eval_fail("division by zero");
            return eval_node(*node.kids[0], env) / denom;
        }
        case Op::pow: {
            real50 base = eval_node(*node.kids[0], env);
            real50 expo = eval_node(*node.kids[1], env);
            if (base < 0 && expo != floor(expo)) eval_fail("negative base with non-integer exponent");
            if (base == 0 && expo < 0) eval_fail("zero base with negative exponent");
            return pow(base, expo);
        }
        case Op::call: {
            std::vector<real50> args;
            args.reserve(node.kids.size());
            for (const auto& kid : node.kids) args.push_back(eval_node(*kid, env));
            return call_builtin(node.name, args);
        }
    }
    eval_fail("corrupt expression tree");
}

void collect_variables(const ExprNode& node, std::set<std::string>& out) {
    if (node.op == Op::ident && node.name != "pi" && node.name != "e") out.insert(node.name);
    for (const auto& kid : node.kids) collect_variables(*kid, out);
}

} // namespace

Expr Expr::parse(const std::string& text) {
    Expr result;
    result.root_ = Parser(text).run();
    result.text_ = text;
    return result;
}

real50 Expr::eval(const ExprEnv& env) const {
    if (!root_) throw domain_error("expression: eval on default-constructed Expr");
    return eval_node(*root_, env);
}

std::vector<std::string> Expr::variables() const {
    std::set<std::string> names;
    if (root_) collect_variables(*root_, names);
    return {names.begin(), names.end()};
}

} // namespace gbx
