#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omlkit {

/// Failure categories raised by the library. Each carries a human-readable
/// message; witness data (offending elements) is folded into the message.
enum class ErrorKind {
    BadInput,            // precondition violation: unknown/duplicate labels, perp coverage
    NotAPoset,
    NotALattice,
    NotOrtho,
    NotOrthomodular,
    SizeCap,
    ParameterOutOfRange,
    DomainMismatch,
    AxiomFailure,
    StructureFailure,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::NotAPoset: return "NotAPoset";
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::NotOrtho: return "NotOrtho";
        case ErrorKind::NotOrthomodular: return "NotOrthomodular";
        case ErrorKind::SizeCap: return "SizeCap";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::AxiomFailure: return "AxiomFailure";
        case ErrorKind::StructureFailure: return "StructureFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind),
          witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Element indices of the counterexample, when one exists.
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
};

}  // namespace omlkit
