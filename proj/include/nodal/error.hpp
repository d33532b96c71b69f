#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

enum class ErrorCode {
    invalid_argument,
    parse,
    unknown_label,
    disconnected,
    empty_graph,
    not_in_lattice,
    invalid_chooser,
    internal,
};

inline const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::unknown_label: return "unknown_label";
    case ErrorCode::disconnected: return "disconnected_graph";
    case ErrorCode::empty_graph: return "empty_graph";
    case ErrorCode::not_in_lattice: return "not_in_lattice";
    case ErrorCode::invalid_chooser: return "invalid_chooser";
    case ErrorCode::internal: return "internal_error";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace nodal
