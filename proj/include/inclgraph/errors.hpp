#pragma once

#include <stdexcept>
#include <string>

namespace inclgraph {

enum class Errc {
    NonPrimeParameter,
    DivisibilityConditionFails,
    OrderCapExceeded,
    NoSuchExponent,
    NotASubgroup,
    NotNormal,
    PrimeDoesNotDivideOrder,
    VertexLimitExceeded,
    ChromaticMismatch,
    ParseError,
    SemanticError,
    UnclassifiedSpec,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeParameter: return "NonPrimeParameter";
        case Errc::DivisibilityConditionFails: return "DivisibilityConditionFails";
        case Errc::OrderCapExceeded: return "OrderCapExceeded";
        case Errc::NoSuchExponent: return "NoSuchExponent";
        case Errc::NotASubgroup: return "NotASubgroup";
        case Errc::NotNormal: return "NotNormal";
        case Errc::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
        case Errc::VertexLimitExceeded: return "VertexLimitExceeded";
        case Errc::ChromaticMismatch: return "ChromaticMismatch";
        case Errc::ParseError: return "ParseError";
        case Errc::SemanticError: return "SemanticError";
        case Errc::UnclassifiedSpec: return "UnclassifiedSpec";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace inclgraph
