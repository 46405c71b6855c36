#pragma once

#include <stdexcept>
#include <string>

namespace algd {

enum class ErrorCode {
    Inconsistent,
    DimensionMismatch,
    Singular,
    AlgebraMismatch,
    NotAssociative,
    NotUnital,
    NotBijective,
    NotProjective,
    NotAnIntegral,
    Degenerate,
    NotFrobenius,
    NotD2,
    NotAGroupoid,
    NotPrimitiveRoot,
    AxiomViolation,
    CharTwo,
    ParseError,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NotUnital: return "NotUnital";
        case ErrorCode::NotBijective: return "NotBijective";
        case ErrorCode::NotProjective: return "NotProjective";
        case ErrorCode::NotAnIntegral: return "NotAnIntegral";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotFrobenius: return "NotFrobenius";
        case ErrorCode::NotD2: return "NotD2";
        case ErrorCode::NotAGroupoid: return "NotAGroupoid";
        case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::CharTwo: return "CharTwo";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace algd
