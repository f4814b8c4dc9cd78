#pragma once

#include <stdexcept>
#include <string>

namespace frlp {

enum class ErrorCode {
    OddSampleCount,
    AngleSingular,
    ChirpAliased,
    SymbolUnbounded,
    SupportViolation,
    RangeExceedsNyquist,
    DimUnsupported,
    ScaleMisaligned,
    DcSingular,
    ExponentMismatch,
    EmptyCubeFamily,
    PsiNotMeanZero,
    CubeTooSmall,
    GridMismatch,
    UsageError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::OddSampleCount: return "OddSampleCount";
        case ErrorCode::AngleSingular: return "AngleSingular";
        case ErrorCode::ChirpAliased: return "ChirpAliased";
        case ErrorCode::SymbolUnbounded: return "SymbolUnbounded";
        case ErrorCode::SupportViolation: return "SupportViolation";
        case ErrorCode::RangeExceedsNyquist: return "RangeExceedsNyquist";
        case ErrorCode::DimUnsupported: return "DimUnsupported";
        case ErrorCode::ScaleMisaligned: return "ScaleMisaligned";
        case ErrorCode::DcSingular: return "DcSingular";
        case ErrorCode::ExponentMismatch: return "ExponentMismatch";
        case ErrorCode::EmptyCubeFamily: return "EmptyCubeFamily";
        case ErrorCode::PsiNotMeanZero: return "PsiNotMeanZero";
        case ErrorCode::CubeTooSmall: return "CubeTooSmall";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, std::string(error_name(code)) + ": " + msg);
}

} // namespace frlp
