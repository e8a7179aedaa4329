#pragma once

#include <stdexcept>
#include <string>

namespace eqpath {

// Error taxonomy shared by the core, the C API and the CLI exit codes.
enum class ErrorCode {
  Parse,          // malformed input document
  DanglingEdge,   // edge endpoint not declared
  Budget,         // level explosion / group order cap
  Internal,       // broken internal invariant (must not happen)
  ActionInvalid,  // group action violates edge preservation or hypotheses
  Subgraph,       // not a subgraph / not invariant
  Ring,           // operation requires a field
  Cap,            // truncation cap exceeded / mismatched
  Domain,         // operator applied outside its domain
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Internal invariant check; failures signal a bug, not bad input.
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorCode::Internal, msg);
}

}  // namespace eqpath
