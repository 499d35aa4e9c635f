#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singwf {

enum class ErrorCode {
    ZeroPolynomial,
    ParameterCollision,
    SyntaxError,
    UnknownVariable,
    NegativeExponent,
    NotQuasihomogeneous,
    NoPositiveSolution,
    NonUniqueWeights,
    InvalidWeights,
    NonNormalInput,
    InexactConeDivision,
    RemarkViolation,
    InvalidBoundary,
    FormatError,
    UnknownStratumName,
    DuplicateId,
    InconsistentFamily,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. The code identifies the contract that was violated;
// the message carries the witness (offending monomial, position, line, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    // The message without the "Code: " prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

// Parse failures keep the byte offset into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected, std::string_view source);

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace singwf
