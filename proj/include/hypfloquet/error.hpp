#pragma once

#include <stdexcept>
#include <string>

namespace hypfloquet {

/// Raised when an input lies outside the domain of an operation (a Euclidean
/// signature, a genus below the hyperbolic minimum, an invalid complex...).
/// The message is prefixed with the module that raised it.
class DomainError : public std::invalid_argument {
   public:
    DomainError(std::string module, const std::string &message)
        : std::invalid_argument(module + ": " + message), module_(std::move(module)) {
    }

    const std::string &module() const noexcept {
        return module_;
    }

   private:
    std::string module_;
};

/// Malformed serialized input. `location()` is a JSON pointer into the document
/// (or a byte offset for syntax errors).
class ParseError : public DomainError {
   public:
    ParseError(std::string module, const std::string &message, std::string location)
        : DomainError(std::move(module), message + " (at " + location + ")"), location_(std::move(location)) {
    }

    const std::string &location() const noexcept {
        return location_;
    }

   private:
    std::string location_;
};

/// The exact distance search refused to run (too many qubits, or no logical
/// operator up to the weight cap). Callers fall back to the geometric estimator.
class DistanceBoundExceeded : public DomainError {
   public:
    explicit DistanceBoundExceeded(const std::string &message) : DomainError("floquet", message + "; use geometric estimator") {
    }
};

}  // namespace hypfloquet
