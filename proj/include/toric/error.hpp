#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
    LengthMismatch,
    InvalidGroup,
    ZeroVector,
    NotPointed,
    NotFullDimensional,
    RankUnsupported,
    EmptyGenerators,
    ZeroGenerator,
    NotInMonoid,
    AlphaInSaturation,
    NotARoot,
    ExponentOutsideCarrier,
    IterationBudgetExceeded,
    ZeroDerivation,
    NotLocallyNilpotent,
    InconsistentImages,
    TotalNotNilpotent,
    ValidationFailed,
};

const char* to_string(ErrorKind kind);

/// Refusal raised by a decision procedure or constructor. The CLI maps these
/// to exit code 1; malformed documents raise ParseError instead.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace toric
