#pragma once

#include <stdexcept>
#include <string>

namespace splitjac {

// A mathematical precondition failed.  condition() is the violated identity in
// plain ASCII (e.g. "disc(P)=0") so callers can match on it.
class MathError : public std::runtime_error {
public:
    MathError(std::string condition, const std::string& message)
        : std::runtime_error(message), condition_(std::move(condition)) {}
    explicit MathError(std::string condition)
        : MathError(condition, "degenerate input: " + condition) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

class DivisionByZero : public MathError {
public:
    explicit DivisionByZero(const std::string& what) : MathError("divisor=0", what) {}
};

// Input text that does not parse as an exact ring element.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace splitjac
