#include "qbs/functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>

namespace qbs {

namespace {

constexpr double kE = 2.718281828459045235;
constexpr double kPi = 3.141592653589793238;

TargetFunction make_builtin(const std::string& name) {
    using std::abs;
    if (name == "fig6") {
        // Benchmark wave 1 - cos(4 e^x); steepest slope 4e on [0,1].
        return TargetFunction("fig6", [](double x) { return 1.0 - std::cos(4.0 * std::exp(x)); })
            .with_derivative([](double x) { return 4.0 * std::exp(x) * std::sin(4.0 * std::exp(x)); })
            .with_second_derivative([](double x) {
                const double e = std::exp(x);
                return 4.0 * e * std::sin(4.0 * e) + 16.0 * e * e * std::cos(4.0 * e);
            })
            .with_lipschitz(4.0 * kE, 1.0);
    }
    if (name == "x") {
        return TargetFunction("x", [](double x) { return x; })
            .with_derivative([](double) { return 1.0; })
            .with_second_derivative([](double) { return 0.0; })
            .with_lipschitz(1.0, 1.0);
    }
    if (name == "x2") {
        return TargetFunction("x2", [](double x) { return x * x; })
            .with_derivative([](double x) { return 2.0 * x; })
            .with_second_derivative([](double) { return 2.0; })
            .with_lipschitz(2.0, 1.0);
    }
    if (name == "x3") {
        return TargetFunction("x3", [](double x) { return x * x * x; })
            .with_derivative([](double x) { return 3.0 * x * x; })
            .with_second_derivative([](double x) { return 6.0 * x; })
            .with_lipschitz(3.0, 1.0);
    }
    if (name == "exp") {
        return TargetFunction("exp", [](double x) { return std::exp(x); })
            .with_derivative([](double x) { return std::exp(x); })
            .with_second_derivative([](double x) { return std::exp(x); })
            .with_lipschitz(kE, 1.0);
    }
    if (name == "sin3") {
        return TargetFunction("sin3", [](double x) { return std::sin(3.0 * x); })
            .with_derivative([](double x) { return 3.0 * std::cos(3.0 * x); })
            .with_second_derivative([](double x) { return -9.0 * std::sin(3.0 * x); })
            .with_lipschitz(3.0, 1.0);
    }
    if (name == "abshalf") {
        return TargetFunction("abshalf", [](double x) { return std::abs(x - 0.5); })
            .with_lipschitz(1.0, 1.0);
    }
    if (name == "sqrtabshalf") {
        return TargetFunction("sqrtabshalf",
                              [](double x) { return std::sqrt(std::abs(x - 0.5)); })
            .with_lipschitz(1.0, 0.5);
    }
    if (name == "one") {
        return TargetFunction("one", [](double) { return 1.0; })
            .with_derivative([](double) { return 0.0; })
            .with_second_derivative([](double) { return 0.0; });
    }
    throw std::invalid_argument("unknown built-in function '" + name + "'");
}

// ---------------------------------------------------------------------------
// Expression parser: recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 'x' | 'e' | 'pi' | func '(' expr [',' expr] ')' | '(' expr ')'
// Nodes are compiled to a closure tree; errors carry the source position.
// ---------------------------------------------------------------------------

using Node = std::function<double(double)>;

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    Node parse() {
        Node e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << "parse error at position " << pos_ << ": " << what;
        throw std::invalid_argument(msg.str());
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Node expr() {
        Node lhs = term();
        for (;;) {
            if (eat('+')) {
                Node rhs = term();
                lhs = [lhs, rhs](double x) { return lhs(x) + rhs(x); };
            } else if (eat('-')) {
                Node rhs = term();
                lhs = [lhs, rhs](double x) { return lhs(x) - rhs(x); };
            } else {
                return lhs;
            }
        }
    }

    Node term() {
        Node lhs = unary();
        for (;;) {
            if (eat('*')) {
                Node rhs = unary();
                lhs = [lhs, rhs](double x) { return lhs(x) * rhs(x); };
            } else if (eat('/')) {
                Node rhs = unary();
                lhs = [lhs, rhs](double x) { return lhs(x) / rhs(x); };
            } else {
                return lhs;
            }
        }
    }

    Node unary() {
        if (eat('+')) return unary();
        if (eat('-')) {
            Node v = unary();
            return [v](double x) { return -v(x); };
        }
        return power();
    }

    Node power() {
        Node base = atom();
        if (eat('^')) {
            Node ex = unary();  // right associative
            return [base, ex](double x) { return std::pow(base(x), ex(x)); };
        }
        return base;
    }

    Node atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected a value");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (eat('(')) {
            Node e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Node number() {
        const size_t start = pos_;
        size_t consumed = 0;
        double v;
        try {
            v = std::stod(src_.substr(start), &consumed);
        } catch (const std::exception&) {
            fail("malformed number");
        }
        pos_ = start + consumed;
        return [v](double) { return v; };
    }

    Node identifier() {
        const size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "x") return [](double x) { return x; };
        if (name == "e") return [](double) { return kE; };
        if (name == "pi") return [](double) { return kPi; };

        static const std::map<std::string, double (*)(double)> unary_fns = {
            {"sin", [](double v) { return std::sin(v); }},
            {"cos", [](double v) { return std::cos(v); }},
            {"exp", [](double v) { return std::exp(v); }},
            {"abs", [](double v) { return std::abs(v); }},
            {"sqrt", [](double v) { return std::sqrt(v); }},
        };
        if (auto it = unary_fns.find(name); it != unary_fns.end()) {
            if (!eat('(')) fail("expected '(' after '" + name + "'");
            Node arg = expr();
            if (!eat(')')) fail("expected ')'");
            auto fn = it->second;
            return [fn, arg](double x) { return fn(arg(x)); };
        }
        if (name == "pow") {
            if (!eat('(')) fail("expected '(' after 'pow'");
            Node a = expr();
            if (!eat(',')) fail("expected ',' in pow(,)");
            Node b = expr();
            if (!eat(')')) fail("expected ')'");
            return [a, b](double x) { return std::pow(a(x), b(x)); };
        }
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    const std::string& src_;
    size_t pos_ = 0;
};

}  // namespace

const std::vector<std::string>& builtin_function_names() {
    static const std::vector<std::string> names = {
        "fig6", "x", "x2", "x3", "exp", "sin3", "abshalf", "sqrtabshalf", "one"};
    return names;
}

TargetFunction builtin_function(const std::string& name) { return make_builtin(name); }

TargetFunction parse_function(const std::string& text) {
    for (const std::string& name : builtin_function_names())
        if (text == name) return make_builtin(name);

    Node node = Parser(text).parse();

    // Reject anything non-finite on [0,1] before it reaches an operator.
    constexpr int kValidationGrid = 1001;
    for (int i = 0; i < kValidationGrid; ++i) {
        const double x = static_cast<double>(i) / (kValidationGrid - 1);
        if (!std::isfinite(node(x))) {
            std::ostringstream msg;
            msg << "expression '" << text << "' is not finite at x = " << x;
            throw std::invalid_argument(msg.str());
        }
    }

    TargetFunction f(text, node);

    // Central differences, stencil shifted inward at the endpoints.
    static constexpr double h = 1e-5;
    auto d1 = [node](double x) {
        if (x < h) return (node(x + h) - node(x)) / h;
        if (x > 1.0 - h) return (node(x) - node(x - h)) / h;
        return (node(x + h) - node(x - h)) / (2.0 * h);
    };
    auto d2 = [node](double x) {
        const double c = std::clamp(x, h, 1.0 - h);
        return (node(c + h) - 2.0 * node(c) + node(c - h)) / (h * h);
    };
    f.with_derivative(d1, /*approximate=*/true);
    f.with_second_derivative(d2, /*approximate=*/true);

    // Grid Lipschitz estimate: the largest adjacent-pair slope bounds every
    // coarser pair slope on the same grid family, so the construction check
    // cannot reject it.
    double M = 0.0;
    for (int i = 0; i + 1 < kValidationGrid; ++i) {
        const double x0 = static_cast<double>(i) / (kValidationGrid - 1);
        const double x1 = static_cast<double>(i + 1) / (kValidationGrid - 1);
        M = std::max(M, std::abs(node(x1) - node(x0)) / (x1 - x0));
    }
    if (M > 0.0) f.with_lipschitz(M * (1.0 + 1e-9), 1.0, /*approximate=*/true);
    return f;
}

}  // namespace qbs
