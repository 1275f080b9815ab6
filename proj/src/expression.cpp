#include "vekua/expression.hpp"

#include "vekua/errors.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace vekua {

struct Expression::Node {
    enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };
    Kind kind = Kind::number;
    double value = 0.0;
    double (*fn)(double) = nullptr;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;

    double eval(double v) const {
        switch (kind) {
        case Kind::number: return value;
        case Kind::variable: return v;
        case Kind::negate: return -lhs->eval(v);
        case Kind::add: return lhs->eval(v) + rhs->eval(v);
        case Kind::sub: return lhs->eval(v) - rhs->eval(v);
        case Kind::mul: return lhs->eval(v) * rhs->eval(v);
        case Kind::div: return lhs->eval(v) / rhs->eval(v);
        case Kind::pow: return std::pow(lhs->eval(v), rhs->eval(v));
        case Kind::call: return fn(lhs->eval(v));
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

std::shared_ptr<Expression::Node> make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    Parser(const std::string& text, const std::string& var,
           const std::map<std::string, double>& constants)
        : s_(text), var_(var), constants_(constants) {
        constants_.emplace("pi", std::numbers::pi);
        constants_.emplace("e", std::numbers::e);
    }

    NodePtr parse() {
        auto n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    // expr := term (('+'|'-') term)*
    NodePtr expr() {
        auto n = term();
        for (;;) {
            skip();
            if (accept('+')) n = make(Kind::add, n, term());
            else if (accept('-')) n = make(Kind::sub, n, term());
            else return n;
        }
    }

    // term := unary (('*'|'/') unary)*
    NodePtr term() {
        auto n = unary();
        for (;;) {
            skip();
            if (accept('*')) n = make(Kind::mul, n, unary());
            else if (accept('/')) n = make(Kind::div, n, unary());
            else return n;
        }
    }

    // unary := ('-'|'+') unary | power
    NodePtr unary() {
        skip();
        if (accept('-')) return make(Kind::negate, unary());
        if (accept('+')) return unary();
        return power();
    }

    // power := primary ('^' unary)?   (right associative, -x^2 == -(x^2))
    NodePtr power() {
        auto base = primary();
        skip();
        if (accept('^')) return make(Kind::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (accept('(')) {
            auto n = expr();
            skip();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = std::make_shared<Expression::Node>();
        n->value = v;
        return n;
    }

    NodePtr name() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string id = s_.substr(start, pos_ - start);
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            double (*fn)(double) = nullptr;
            if (id == "exp") fn = [](double v) { return std::exp(v); };
            else if (id == "log") fn = [](double v) { return std::log(v); };
            else if (id == "sqrt") fn = [](double v) { return std::sqrt(v); };
            else if (id == "sin") fn = [](double v) { return std::sin(v); };
            else if (id == "cos") fn = [](double v) { return std::cos(v); };
            else fail("unknown function '" + id + "'", start);
            ++pos_;
            auto arg = expr();
            skip();
            if (!accept(')')) fail("expected ')' after function argument");
            auto n = make(Kind::call, arg);
            n->fn = fn;
            return n;
        }
        if (id == var_) return make(Kind::variable);
        if (auto it = constants_.find(id); it != constants_.end()) {
            auto n = std::make_shared<Expression::Node>();
            n->value = it->second;
            return n;
        }
        fail("unknown name '" + id + "'", start);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw ConfigError("expression \"" + s_ + "\", column " + std::to_string(at + 1) + ": " +
                          what);
    }

    const std::string& s_;
    std::string var_;
    std::map<std::string, double> constants_;
    std::size_t pos_ = 0;
};

} // namespace

Expression Expression::parse(const std::string& text, const std::string& variable,
                             const std::map<std::string, double>& constants) {
    Expression e;
    e.text_ = text;
    e.root_ = Parser(text, variable, constants).parse();
    return e;
}

double Expression::operator()(double value) const { return root_->eval(value); }

} // namespace vekua
