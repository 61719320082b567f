#pragma once

#include <stdexcept>
#include <string>

namespace jtp {

// Base for all library errors. `kind()` is a stable machine-readable tag
// used by the CLI to map errors onto exit codes and one-line reasons.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Precondition violations (CLI exit code 3).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};
struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error("singular_input", msg) {}
};
struct NotAnInvolution : Error {
    explicit NotAnInvolution(const std::string& msg) : Error("not_an_involution", msg) {}
};
struct ParamOutOfRange : Error {
    explicit ParamOutOfRange(const std::string& msg) : Error("param_out_of_range", msg) {}
};
struct NonUnitalBeta : Error {
    explicit NonUnitalBeta(const std::string& msg) : Error("non_unital_beta", msg) {}
};
struct NonPositiveValue : Error {
    explicit NonPositiveValue(const std::string& msg) : Error("non_positive_value", msg) {}
};

// Classification failures (CLI exit code 4).
struct NotAHomomorphism : Error {
    explicit NotAHomomorphism(const std::string& msg) : Error("not_a_homomorphism", msg) {}
};
struct UnrecognizedMultiplicative : Error {
    explicit UnrecognizedMultiplicative(const std::string& msg)
        : Error("unrecognized_multiplicative", msg) {}
};
struct InconsistentProbes : Error {
    explicit InconsistentProbes(const std::string& msg) : Error("inconsistent_probes", msg) {}
};

// Input syntax/schema problems (CLI exit code 2).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse", msg) {}
};

} // namespace jtp
