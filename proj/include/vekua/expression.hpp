#pragma once

// Minimal arithmetic expressions: + - * / ^, parentheses, one free variable,
// named constants and the functions exp, log, sqrt, sin, cos.

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace vekua {

class Expression {
public:
    struct Node;

    /// Parses `text` with free variable `variable`; `constants` extend the
    /// built-ins pi and e. Throws ConfigError with the column of the fault.
    static Expression parse(const std::string& text, const std::string& variable,
                            const std::map<std::string, double>& constants = {});

    double operator()(double value) const;

    const std::string& text() const { return text_; }

    std::function<double(double)> as_function() const {
        return [e = *this](double v) { return e(v); };
    }

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

} // namespace vekua
