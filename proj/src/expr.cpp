#include "koenigs/expr.hpp"

#include "koenigs/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace koenigs {

namespace {

enum Fn { f_log, f_exp, f_sin, f_cos, f_abs, f_sqrt, f_atan };

struct FnName {
    const char* name;
    Fn id;
};

constexpr FnName kFns[] = {{"log", f_log}, {"exp", f_exp},   {"sin", f_sin}, {"cos", f_cos},
                           {"abs", f_abs}, {"sqrt", f_sqrt}, {"atan", f_atan}};

// [lo, hi]^k for a positive integer k
Ival int_pow(Ival b, double k) {
    double pl = std::pow(b.lo, k), ph = std::pow(b.hi, k);
    bool even = std::fmod(k, 2.0) == 0.0;
    if (!even || b.lo >= 0) return {pl, ph};
    if (b.hi <= 0) return {ph, pl};
    return {0, std::max(pl, ph)};
}

// 0 * inf shows up at singular endpoints; an enclosure treats it as 0.
double safe_mul(double a, double b) {
    double r = a * b;
    return std::isnan(r) ? 0.0 : r;
}

} // namespace

class ExprParser {
public:
    ExprParser(const std::string& s, Expr& e) : s_(s), e_(e) {}

    int parse_all() {
        int r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    Expr& e_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ValidationError("expression '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int push(Expr::Node n) {
        e_.nodes_.push_back(n);
        return static_cast<int>(e_.nodes_.size()) - 1;
    }

    int binary(Expr::Node::Op op, int a, int b) {
        Expr::Node n{op};
        n.a = a;
        n.b = b;
        return push(n);
    }

    int expr() {
        int l = term();
        for (;;) {
            if (eat('+')) l = binary(Expr::Node::add, l, term());
            else if (eat('-')) l = binary(Expr::Node::sub, l, term());
            else return l;
        }
    }

    int term() {
        int l = unary();
        for (;;) {
            if (eat('*')) l = binary(Expr::Node::mul, l, unary());
            else if (eat('/')) l = binary(Expr::Node::div, l, unary());
            else return l;
        }
    }

    int unary() {
        if (eat('-')) {
            Expr::Node n{Expr::Node::neg};
            n.a = unary();
            return push(n);
        }
        if (eat('+')) return unary();
        return power();
    }

    int power() {
        int base = primary();
        if (eat('^')) return binary(Expr::Node::pow, base, unary());
        return base;
    }

    int primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<size_t>(end - begin);
            Expr::Node n{Expr::Node::num};
            n.value = v;
            return push(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "y") return push(Expr::Node{Expr::Node::var});
            if (id == "pi" || id == "e") {
                Expr::Node n{Expr::Node::num};
                n.value = id == "pi" ? std::numbers::pi : std::numbers::e;
                return push(n);
            }
            for (const auto& f : kFns) {
                if (id == f.name) {
                    if (!eat('(')) fail("expected '(' after " + id);
                    Expr::Node n{Expr::Node::fn};
                    n.fn_id = f.id;
                    n.a = expr();
                    if (!eat(')')) fail("expected ')'");
                    return push(n);
                }
            }
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        if (eat('(')) {
            int r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

Expr Expr::parse(const std::string& text) {
    Expr e;
    e.text_ = text;
    ExprParser p(text, e);
    e.root_ = p.parse_all();
    return e;
}

double Expr::eval(double y) const { return eval_node(root_, y); }

Ival Expr::eval(Ival y) const { return eval_node(root_, y); }

bool Expr::depends_on_y() const {
    return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.op == Node::var; });
}

double Expr::eval_node(int i, double y) const {
    const Node& n = nodes_[static_cast<size_t>(i)];
    switch (n.op) {
    case Node::num: return n.value;
    case Node::var: return y;
    case Node::add: return eval_node(n.a, y) + eval_node(n.b, y);
    case Node::sub: return eval_node(n.a, y) - eval_node(n.b, y);
    case Node::mul: return eval_node(n.a, y) * eval_node(n.b, y);
    case Node::div: return eval_node(n.a, y) / eval_node(n.b, y);
    case Node::pow: return std::pow(eval_node(n.a, y), eval_node(n.b, y));
    case Node::neg: return -eval_node(n.a, y);
    case Node::fn: {
        double v = eval_node(n.a, y);
        switch (n.fn_id) {
        case f_log: return std::log(v);
        case f_exp: return std::exp(v);
        case f_sin: return std::sin(v);
        case f_cos: return std::cos(v);
        case f_abs: return std::fabs(v);
        case f_sqrt: return std::sqrt(v);
        default: return std::atan(v);
        }
    }
    }
    return std::nan("");
}

namespace ival {

Ival add(Ival a, Ival b) {
    double lo = a.lo + b.lo, hi = a.hi + b.hi;
    if (std::isnan(lo)) lo = -kInf;
    if (std::isnan(hi)) hi = kInf;
    return {lo, hi};
}

Ival sub(Ival a, Ival b) { return add(a, {-b.hi, -b.lo}); }

Ival mul(Ival a, Ival b) {
    double p[4] = {safe_mul(a.lo, b.lo), safe_mul(a.lo, b.hi), safe_mul(a.hi, b.lo), safe_mul(a.hi, b.hi)};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Ival div(Ival a, Ival b) {
    if (b.lo > 0 || b.hi < 0) return mul(a, {1.0 / b.hi, 1.0 / b.lo});
    if (b.lo == 0 && b.hi > 0) return mul(a, {1.0 / b.hi, kInf});
    if (b.hi == 0 && b.lo < 0) return mul(a, {-kInf, 1.0 / b.lo});
    return {-kInf, kInf};
}

namespace {

// Range of sin over [lo, hi] using the extremal points pi/2 + k pi.
Ival sin_range(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi - lo >= 2 * std::numbers::pi) return {-1, 1};
    double a = std::sin(lo), b = std::sin(hi);
    Ival r{std::min(a, b), std::max(a, b)};
    double k0 = std::ceil((lo - std::numbers::pi / 2) / std::numbers::pi);
    for (double k = k0; std::numbers::pi / 2 + k * std::numbers::pi <= hi; k += 1) {
        bool top = std::fmod(std::fabs(k), 2.0) == 0.0;
        if (top) r.hi = 1;
        else r.lo = -1;
    }
    return r;
}

} // namespace

Ival sin(Ival a) { return sin_range(a.lo, a.hi); }

Ival cos(Ival a) { return sin_range(a.lo + std::numbers::pi / 2, a.hi + std::numbers::pi / 2); }

} // namespace ival

Ival Expr::eval_node(int i, Ival y) const {
    const Node& n = nodes_[static_cast<size_t>(i)];
    switch (n.op) {
    case Node::num: return {n.value, n.value};
    case Node::var: return y;
    case Node::add: return ival::add(eval_node(n.a, y), eval_node(n.b, y));
    case Node::sub: return ival::sub(eval_node(n.a, y), eval_node(n.b, y));
    case Node::mul: return ival::mul(eval_node(n.a, y), eval_node(n.b, y));
    case Node::div: return ival::div(eval_node(n.a, y), eval_node(n.b, y));
    case Node::neg: {
        Ival v = eval_node(n.a, y);
        return {-v.hi, -v.lo};
    }
    case Node::pow: {
        Ival b = eval_node(n.a, y);
        Ival e = eval_node(n.b, y);
        if (e.lo == e.hi) {
            double c = e.lo;
            if (c == std::floor(c) && std::fabs(c) < 1e9) {
                if (c == 0) return {1, 1};
                Ival p = int_pow(b, std::fabs(c));
                return c > 0 ? p : ival::div({1, 1}, p);
            }
            double lo = std::max(b.lo, 0.0), hi = std::max(b.hi, 0.0);
            double pl = std::pow(lo, c), ph = std::pow(hi, c);
            return {std::min(pl, ph), std::max(pl, ph)};
        }
        double lo = std::max(b.lo, 0.0), hi = std::max(b.hi, 0.0);
        Ival lg{lo > 0 ? std::log(lo) : -kInf, hi > 0 ? std::log(hi) : -kInf};
        Ival p = ival::mul(e, lg);
        return {std::exp(p.lo), std::exp(p.hi)};
    }
    case Node::fn: {
        Ival v = eval_node(n.a, y);
        switch (n.fn_id) {
        case f_log:
            return {v.lo > 0 ? std::log(v.lo) : -kInf, v.hi > 0 ? std::log(v.hi) : -kInf};
        case f_exp: return {std::exp(v.lo), std::exp(v.hi)};
        case f_sin: return ival::sin(v);
        case f_cos: return ival::cos(v);
        case f_abs:
            if (v.lo >= 0) return v;
            if (v.hi <= 0) return {-v.hi, -v.lo};
            return {0, std::max(-v.lo, v.hi)};
        case f_sqrt: return {std::sqrt(std::max(v.lo, 0.0)), std::sqrt(std::max(v.hi, 0.0))};
        default: return {std::atan(v.lo), std::atan(v.hi)};
        }
    }
    }
    return {-kInf, kInf};
}

} // namespace koenigs
