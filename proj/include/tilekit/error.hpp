#pragma once

#include <stdexcept>
#include <string>

namespace tilekit {

// Failure kinds surfaced by the toolkit. Input and usage problems map to
// CLI exit code 2; verification outcomes are carried in report objects and
// are never thrown.
enum class ErrorKind {
    TooFewVertices,
    NotCentered,
    NotStrictlyConvex,
    SingularMap,
    NonCenteringTranslation,
    DegenerateSegment,
    SingularBasis,
    EmptyRegion,
    EmptyWindow,
    DegenerateEdges,
    ParameterOutOfRange,
    VertexNotInW,
    ChainDoesNotClose,
    WrongGonality,
    NotAVertexOfTiling,
    WheelMatchingFailed,
    Lemma2Violation,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace tilekit
