#include "singwf/errors.hpp"

namespace singwf {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ParameterCollision: return "ParameterCollision";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::NegativeExponent: return "NegativeExponent";
        case ErrorCode::NotQuasihomogeneous: return "NotQuasihomogeneous";
        case ErrorCode::NoPositiveSolution: return "NoPositiveSolution";
        case ErrorCode::NonUniqueWeights: return "NonUniqueWeights";
        case ErrorCode::InvalidWeights: return "InvalidWeights";
        case ErrorCode::NonNormalInput: return "NonNormalInput";
        case ErrorCode::InexactConeDivision: return "InexactConeDivision";
        case ErrorCode::RemarkViolation: return "RemarkViolation";
        case ErrorCode::InvalidBoundary: return "InvalidBoundary";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::UnknownStratumName: return "UnknownStratumName";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::InconsistentFamily: return "InconsistentFamily";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

namespace {

std::string describe(std::size_t position, const std::string& expected, std::string_view source) {
    std::string msg = "at position " + std::to_string(position) + ": expected " + expected;
    if (!source.empty()) {
        msg += " in \"";
        msg += source;
        msg += "\"";
    }
    return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::string expected, std::string_view source)
    : Error(ErrorCode::SyntaxError, describe(position, expected, source)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace singwf
