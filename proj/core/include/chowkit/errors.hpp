#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

/// Raised when an operation is called outside its stated domain
/// (ring mismatch, degree mismatch, parameter constraint violation).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Raised when an internal consistency condition fails, i.e. the engine
/// itself produced something that should be impossible (a divisibility
/// assertion, a cross-check mismatch, an incomplete reduction).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace chowkit
