#pragma once

#include <memory>
#include <string>
#include <vector>

namespace koenigs {

/// Closed interval of extended reals; empty intervals are not represented.
struct Ival {
    double lo, hi;
};

/// Expression over the single variable y.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'y' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///   func    := log | exp | sin | cos | abs | sqrt | atan
class Expr {
public:
    Expr() = default;
    static Expr parse(const std::string& text);

    double eval(double y) const;
    /// Natural interval extension; an enclosure of {f(y) : y in [lo, hi]}.
    Ival eval(Ival y) const;

    bool depends_on_y() const;
    const std::string& text() const { return text_; }
    bool empty() const { return nodes_.empty(); }

    struct Node {
        enum Op { num, var, add, sub, mul, div, pow, neg, fn } op;
        double value = 0;
        int a = -1, b = -1;
        int fn_id = 0;
    };

private:
    std::string text_;
    std::vector<Node> nodes_;
    int root_ = -1;

    double eval_node(int i, double y) const;
    Ival eval_node(int i, Ival y) const;
    friend class ExprParser;
};

namespace ival {
Ival add(Ival a, Ival b);
Ival sub(Ival a, Ival b);
Ival mul(Ival a, Ival b);
Ival div(Ival a, Ival b);
Ival sin(Ival a);
Ival cos(Ival a);
} // namespace ival

} // namespace koenigs
