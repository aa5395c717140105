#include "tilekit/error.hpp"

namespace tilekit {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::NotCentered: return "NotCentered";
        case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::NonCenteringTranslation: return "NonCenteringTranslation";
        case ErrorKind::DegenerateSegment: return "DegenerateSegment";
        case ErrorKind::SingularBasis: return "SingularBasis";
        case ErrorKind::EmptyRegion: return "EmptyRegion";
        case ErrorKind::EmptyWindow: return "EmptyWindow";
        case ErrorKind::DegenerateEdges: return "DegenerateEdges";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::VertexNotInW: return "VertexNotInW";
        case ErrorKind::ChainDoesNotClose: return "ChainDoesNotClose";
        case ErrorKind::WrongGonality: return "WrongGonality";
        case ErrorKind::NotAVertexOfTiling: return "NotAVertexOfTiling";
        case ErrorKind::WheelMatchingFailed: return "WheelMatchingFailed";
        case ErrorKind::Lemma2Violation: return "Lemma2Violation";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace tilekit
