#pragma once

#include "srm/types.hpp"

#include <memory>

namespace srm {

/// Compiled arithmetic expression over variables x1..xn.
/// Grammar: + - * / ^, unary -, parentheses, numeric literals,
/// functions sin, cos, sqrt. Throws ParseError with line/column on bad input.
class Expr {
public:
    static Expr parse(const std::string& text, int n_vars);

    double eval(const Vec& x) const;
    int n_vars() const { return n_vars_; }
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    int n_vars_ = 0;
    std::string text_;
};

} // namespace srm
