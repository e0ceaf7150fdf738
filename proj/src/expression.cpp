#include "fdwave/expression.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace fdw {

struct Expression::Node {
    enum class Kind { Const, VarX, VarT, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp };
    Kind kind;
    double value = 0.0;  // Const
    std::shared_ptr<const Node> a, b;

    double eval(double x, double t) const {
        switch (kind) {
            case Kind::Const: return value;
            case Kind::VarX: return x;
            case Kind::VarT: return t;
            case Kind::Add: return a->eval(x, t) + b->eval(x, t);
            case Kind::Sub: return a->eval(x, t) - b->eval(x, t);
            case Kind::Mul: return a->eval(x, t) * b->eval(x, t);
            case Kind::Div: return a->eval(x, t) / b->eval(x, t);
            case Kind::Pow: return std::pow(a->eval(x, t), b->eval(x, t));
            case Kind::Neg: return -a->eval(x, t);
            case Kind::Sin: return std::sin(a->eval(x, t));
            case Kind::Cos: return std::cos(a->eval(x, t));
            case Kind::Exp: return std::exp(a->eval(x, t));
        }
        return 0.0;
    }

    bool uses(Kind var) const {
        if (kind == var) return true;
        if (a && a->uses(var)) return true;
        if (b && b->uses(var)) return true;
        return false;
    }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_const(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = v;
    return n;
}

class Parser {
public:
    Parser(const std::string& s, double l, int line0, int col0)
        : s_(s), l_(l), line_(line0), col_(col0) {}

    NodePtr parse() {
        skip_ws();
        NodePtr e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    double l_;
    std::size_t pos_ = 0;
    int line_, col_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    char take() {
        const char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(peek()))) take();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            take();
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (accept('+'))
                e = make(Node::Kind::Add, e, term());
            else if (accept('-'))
                e = make(Node::Kind::Sub, e, term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (accept('*'))
                e = make(Node::Kind::Mul, e, unary());
            else if (accept('/'))
                e = make(Node::Kind::Div, e, unary());
            else
                return e;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Node::Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) return make(Node::Kind::Pow, base, unary());  // right-assoc
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = peek();
        if (c == '(') {
            take();
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        std::string num;
        while (pos_ < s_.size()) {
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' ||
                c == 'E' ||
                ((c == '+' || c == '-') && !num.empty() &&
                 (num.back() == 'e' || num.back() == 'E'))) {
                num += take();
            } else {
                break;
            }
        }
        try {
            return make_const(std::stod(num));
        } catch (const std::exception&) {
            fail("malformed number '" + num + "'");
        }
    }

    NodePtr ident() {
        std::string id;
        while (pos_ < s_.size() &&
               std::isalpha(static_cast<unsigned char>(peek())))
            id += take();
        if (id == "x") return make(Node::Kind::VarX);
        if (id == "t") return make(Node::Kind::VarT);
        if (id == "pi") return make_const(M_PI);
        if (id == "l") return make_const(l_);
        if (id == "sin" || id == "cos" || id == "exp") {
            if (!accept('(')) fail("expected '(' after " + id);
            NodePtr arg = expr();
            if (!accept(')')) fail("expected ')'");
            if (id == "sin") return make(Node::Kind::Sin, arg);
            if (id == "cos") return make(Node::Kind::Cos, arg);
            return make(Node::Kind::Exp, arg);
        }
        fail("unknown identifier '" + id + "'");
    }
};

}  // namespace

Expression Expression::parse(const std::string& text, double l, int line0, int col0) {
    Parser p(text, l, line0, col0);
    Expression e;
    e.root_ = p.parse();
    e.text_ = text;
    return e;
}

double Expression::eval(double x, double t) const { return root_->eval(x, t); }

bool Expression::uses_x() const { return root_->uses(Node::Kind::VarX); }
bool Expression::uses_t() const { return root_->uses(Node::Kind::VarT); }

}  // namespace fdw
