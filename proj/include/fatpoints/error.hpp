#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

/// Failure categories surfaced by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
    invalid_input,
    unsupported_operation,
    degenerate_input,
    genericity_failure,
    characteristic_guard,
    field_artifact,
    invariant_violation,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::unsupported_operation: return "unsupported-operation";
        case ErrorKind::degenerate_input: return "degenerate-input";
        case ErrorKind::genericity_failure: return "genericity-failure";
        case ErrorKind::characteristic_guard: return "characteristic-guard";
        case ErrorKind::field_artifact: return "field-artifact";
        case ErrorKind::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fatpoints
