#pragma once

#include <stdexcept>
#include <string>

namespace japprox {

/// Broad failure classes; CLI maps them onto process exit codes.
enum class ErrorCode {
  InvalidInput,        // malformed descriptors, bad flags, degenerate geometry
  PreconditionNotMet,  // OriginNotInterior, OutsideDn, nesting violations, ...
  MeshFailure,         // boundary sampling / level-curve tracing failed
  EdreiViolation,      // realized C_k exceeded its target beyond mesh slack
  DegenerateNodes,     // coincident or near-coincident interpolation nodes
  FitFailure,          // Hoelder / LS fit could not validate
  NotContinuum,        // disconnected set where a continuum estimate was asked
  CertificationFailed, // inclusion certificates did not hold on samples
  Internal,            // cross-check mismatch: a bug, not a user error
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace japprox
