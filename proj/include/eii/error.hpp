#pragma once

#include <stdexcept>
#include <string>

namespace eii {

enum class ErrorKind {
    DuplicateVertex,
    UnknownEndpoint,
    LoopEdge,
    UnknownVertex,
    VertexCollision,
    NotAnEdge,
    BadParameter,
    DimensionMismatch,
    NotInClassA,
    TooLarge,
    Parse,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::VertexCollision: return "VertexCollision";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInClassA: return "NotInClassA";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace eii
