#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class ErrorKind {
    Parse,
    InvalidVertexCount,
    OutOfRangeVertex,
    EdgeTooSmall,
    DuplicateEdge,
    SubsetEdge,
    NotUniform,
    UnknownEdge,
    InfeasibleParameters,
    InvalidPartition,
    NotEquitable,
    NonConvergence,
    TooLarge,
    ContextMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for malformed or structurally invalid input (as opposed to a
    /// refusal by a solver or search).
    bool is_validation() const noexcept;

private:
    ErrorKind kind_;
};

}  // namespace hyperspec
