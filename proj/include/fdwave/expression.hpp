#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace fdw {

// Parse error with 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) +
                             ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    int line;
    int col;
};

// A compiled arithmetic expression in the variables x and t with the
// constants pi and l.  Grammar: + - * / ^ (right-assoc), unary minus,
// parentheses, and the functions sin, cos, exp.
class Expression {
public:
    // line0/col0 locate the expression inside a larger file so errors point
    // at file coordinates.
    static Expression parse(const std::string& text, double l, int line0 = 1,
                            int col0 = 1);

    double eval(double x, double t) const;

    // true if the variable occurs anywhere in the expression
    bool uses_x() const;
    bool uses_t() const;

    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace fdw
