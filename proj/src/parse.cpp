#include "gaquot/parse.hpp"

#include <cctype>
#include <algorithm>
#include <memory>

namespace gaquot {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

// Builds an expression tree first so that declare-on-use can settle the
// variable table before any polynomial is formed.
struct Node {
    enum Kind { Number, Var, Add, Sub, Mul, Neg, Pow } kind;
    Rational value;
    std::string name;
    unsigned exponent = 0;
    std::size_t position = 0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all() {
        NodePtr n = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

    std::vector<std::string> identifiers_in_order;

private:
    [[noreturn]] void fail(const std::string& msg) const {
        if (pos_ >= text_.size()) throw ParseError(text_.size(), msg + " at end of input");
        throw ParseError(pos_, msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expr() {
        NodePtr n = term();
        while (true) {
            if (accept('+')) n = binary(Node::Add, std::move(n), term());
            else if (accept('-')) n = binary(Node::Sub, std::move(n), term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        while (accept('*')) n = binary(Node::Mul, std::move(n), unary());
        return n;
    }

    NodePtr unary() {
        if (accept('-')) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Neg;
            n->lhs = unary();
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (!accept('^')) return base;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected non-negative integer exponent");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) {
            pos_ = start;
            fail("exponent too large");
        }
        auto n = std::make_unique<Node>();
        n->kind = Node::Pow;
        n->exponent = static_cast<unsigned>(std::stoul(digits));
        n->lhs = std::move(base);
        return n;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected operand");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = expr();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator digits");
                std::size_t den_start = pos_;
                den = digits();
                if (mpz_class(den) == 0) {
                    pos_ = den_start;
                    fail("zero denominator");
                }
            }
            auto n = std::make_unique<Node>();
            n->kind = Node::Number;
            n->value = Rational(mpz_class(num), mpz_class(den));
            n->value.canonicalize();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto n = std::make_unique<Node>();
            n->kind = Node::Var;
            n->name = std::string(text_.substr(start, pos_ - start));
            n->position = start;
            if (std::find(identifiers_in_order.begin(), identifiers_in_order.end(), n->name) ==
                identifiers_in_order.end())
                identifiers_in_order.push_back(n->name);
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Poly evaluate(const Node& n, const VarTable& vars) {
    switch (n.kind) {
        case Node::Number: return Poly::constant(vars, n.value);
        case Node::Var: {
            auto idx = vars.find(n.name);
            if (!idx)
                throw ParseError(n.position, "unknown variable '" + n.name + "'");
            return Poly::variable(vars, *idx);
        }
        case Node::Add: return evaluate(*n.lhs, vars) + evaluate(*n.rhs, vars);
        case Node::Sub: return evaluate(*n.lhs, vars) - evaluate(*n.rhs, vars);
        case Node::Mul: return evaluate(*n.lhs, vars) * evaluate(*n.rhs, vars);
        case Node::Neg: return -evaluate(*n.lhs, vars);
        case Node::Pow: return evaluate(*n.lhs, vars).pow(n.exponent);
    }
    throw Error("unreachable");
}

}  // namespace

Poly parse(std::string_view text, const VarTable& vars, UnknownVariables policy) {
    Parser parser(text);
    NodePtr tree = parser.parse_all();
    VarTable table = vars;
    if (policy == UnknownVariables::DeclareOnUse) {
        std::vector<std::string> names = vars.names();
        for (const auto& id : parser.identifiers_in_order)
            if (!vars.contains(id)) names.push_back(id);
        if (names.size() != vars.size()) table = VarTable(std::move(names));
    }
    return evaluate(*tree, table);
}

Poly parse(std::string_view text) {
    return parse(text, VarTable(), UnknownVariables::DeclareOnUse);
}

}  // namespace gaquot
