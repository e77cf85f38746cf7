#pragma once

#include <stdexcept>
#include <string>

namespace tschirn {

/// A mathematical precondition failed. `expression()` names the offending quantity.
class precondition_error : public std::domain_error {
public:
    precondition_error(std::string expression, const std::string& why)
        : std::domain_error(expression + ": " + why), expr_(std::move(expression)) {}

    const std::string& expression() const noexcept { return expr_; }

private:
    std::string expr_;
};

/// Malformed textual input (numbers, polynomials, triples).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tschirn
