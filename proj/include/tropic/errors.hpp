#pragma once

#include <stdexcept>
#include <string>

namespace tropic {

// Typed failure reasons. The CLI maps these onto exit codes:
// parse problems -> 1, violated preconditions -> 2, internal consistency -> 3.
enum class ErrorKind {
    EmptyPolynomial,   // the -inf polynomial reached a geometric operation
    DegreeTooSmall,    // homogenize target below actual degree
    NotAPlane,         // normalize_to_standard_plane on a non-plane f
    WrongDimension,
    DegenerateCell,    // cell_volume on members that do not span
    ZeroVector,
    UnknownExponent,
    SegmentOnRay,      // V(g) contains a whole sub-segment of a coordinate ray
    VertexOnAxis,      // curve vertex on a closed negative axis
    AmbiguousStaircase,
    AmbiguousOrigin,   // origin-domain monomial not unique
    NotCertified,      // curve assembly without (weak) smoothness
    Disconnected,
    GlueMismatch,      // quarter-plane restrictions disagree on a ray point
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::EmptyPolynomial: return "EmptyPolynomial";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::NotAPlane: return "NotAPlane";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::DegenerateCell: return "DegenerateCell";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::UnknownExponent: return "UnknownExponent";
        case ErrorKind::SegmentOnRay: return "SegmentOnRay";
        case ErrorKind::VertexOnAxis: return "VertexOnAxis";
        case ErrorKind::AmbiguousStaircase: return "AmbiguousStaircase";
        case ErrorKind::AmbiguousOrigin: return "AmbiguousOrigin";
        case ErrorKind::NotCertified: return "NotCertified";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::GlueMismatch: return "GlueMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace tropic
