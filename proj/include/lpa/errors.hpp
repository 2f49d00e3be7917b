#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpa {

// Error taxonomy shared by the library and the CLI. Codes map onto CLI exit
// statuses: parse/validation failures exit 2, relation failures 3, Unknown
// verdicts under --require-decision 4.
enum class ErrorCode {
    ParseError,
    ShapeMismatch,
    FieldMismatch,
    GraphMismatch,
    RepMismatch,
    DivisionByZero,
    NotMonic,
    NotIrreducible,
    Unsupported,
    UnknownVertex,
    UnknownEdge,
    NotACycle,
    NotPrime,
    ZeroLambda,
    NotASink,
    ReducibleTwist,
    ZeroVector,
    InvalidPrefix,
    CycleMismatch,
    NotASubmodule,
    ZeroRep,
    BudgetExceeded,
    MalformedMonomial,
    SinkExpansion,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::GraphMismatch: return "GraphMismatch";
        case ErrorCode::RepMismatch: return "RepMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ZeroLambda: return "ZeroLambda";
        case ErrorCode::NotASink: return "NotASink";
        case ErrorCode::ReducibleTwist: return "ReducibleTwist";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::InvalidPrefix: return "InvalidPrefix";
        case ErrorCode::CycleMismatch: return "CycleMismatch";
        case ErrorCode::NotASubmodule: return "NotASubmodule";
        case ErrorCode::ZeroRep: return "ZeroRep";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::MalformedMonomial: return "MalformedMonomial";
        case ErrorCode::SinkExpansion: return "SinkExpansion";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace lpa

#endif
