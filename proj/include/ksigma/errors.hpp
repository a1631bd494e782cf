#pragma once

#include <stdexcept>
#include <string>

namespace ksigma {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// An enumeration or refinement ran out of its configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, unsigned depth_reached)
        : Error(what), depth_reached_(depth_reached)
    {
    }

    /// Deepest level that was fully computed before the budget tripped.
    [[nodiscard]] unsigned depth_reached() const noexcept { return depth_reached_; }

private:
    unsigned depth_reached_;
};

}  // namespace ksigma
