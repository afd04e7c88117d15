#pragma once

#include <stdexcept>
#include <string>

namespace frobsum {

/// Base of all library errors. `kind()` is the stable error name surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define FROBSUM_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

/// Argument outside the documented domain of an operation.
FROBSUM_DEFINE_ERROR(DomainError);
/// A character is not a nonnegative combination of tilting characters.
FROBSUM_DEFINE_ERROR(NotTilting);
/// Removing the exterior-power summands would drive a multiplicity negative.
FROBSUM_DEFINE_ERROR(SubtractionUnderflow);
/// A computed summand lies outside the interval the theory allows.
FROBSUM_DEFINE_ERROR(RangeViolation);
/// The finite-field oracle would need more memory than the configured budget.
FROBSUM_DEFINE_ERROR(BudgetExceeded);
/// Constant-term matrix of a Hilbert matrix is singular over Q.
FROBSUM_DEFINE_ERROR(SingularConstantTerm);
/// A Hom-space dimension came out negative.
FROBSUM_DEFINE_ERROR(NegativeEntry);
/// Operation not defined for the requested summand-list level.
FROBSUM_DEFINE_ERROR(UnsupportedLevel);
/// Series coefficient requested beyond the truncation degree.
FROBSUM_DEFINE_ERROR(TruncationError);

#undef FROBSUM_DEFINE_ERROR

} // namespace frobsum
