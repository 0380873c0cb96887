#pragma once

#include <stdexcept>
#include <string>

namespace spinorkit {

enum class ErrorCode {
    FieldMismatch,
    DimensionMismatch,
    NotSkew,
    BadShape,
    NonResidue,
    Char2Unsupported,
    SmallFieldUnsupported,
    ParityMismatch,
    NotMaximalIsotropic,
    ZeroSpinor,
    NotOnSigma,
    WrongComponent,
    NotPure,
    BadProbe,
    NotSplitOverField,
    DegeneratePlane,
    NotOnGrassmannian,
    CenterOfProjection,
    NotInSection,
    ZeroForm,
    BadK,
    BadSample,
    UnexpectedFiber,
    IsotropyViolation,
    UnexpectedRelationSpace,
    NotPrime,
    TooExpensive,
    BadInput,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSkew: return "NotSkew";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NonResidue: return "NonResidue";
        case ErrorCode::Char2Unsupported: return "Char2Unsupported";
        case ErrorCode::SmallFieldUnsupported: return "SmallFieldUnsupported";
        case ErrorCode::ParityMismatch: return "ParityMismatch";
        case ErrorCode::NotMaximalIsotropic: return "NotMaximalIsotropic";
        case ErrorCode::ZeroSpinor: return "ZeroSpinor";
        case ErrorCode::NotOnSigma: return "NotOnSigma";
        case ErrorCode::WrongComponent: return "WrongComponent";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::BadProbe: return "BadProbe";
        case ErrorCode::NotSplitOverField: return "NotSplitOverField";
        case ErrorCode::DegeneratePlane: return "DegeneratePlane";
        case ErrorCode::NotOnGrassmannian: return "NotOnGrassmannian";
        case ErrorCode::CenterOfProjection: return "CenterOfProjection";
        case ErrorCode::NotInSection: return "NotInSection";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::BadSample: return "BadSample";
        case ErrorCode::UnexpectedFiber: return "UnexpectedFiber";
        case ErrorCode::IsotropyViolation: return "IsotropyViolation";
        case ErrorCode::UnexpectedRelationSpace: return "UnexpectedRelationSpace";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::TooExpensive: return "TooExpensive";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

// All precondition and validation failures surface as this exception; the CLI
// maps it to exit code 2 with a single machine-parseable line.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    [[nodiscard]] ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace spinorkit
