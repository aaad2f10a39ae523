#pragma once

#include <stdexcept>
#include <string>

namespace tbn {

// Domain error carrying a stable machine-readable code.  CLI reports surface
// the code verbatim in their "error" field.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace err {
inline Error disconnected(const std::string& m) { return Error("Disconnected", m); }
inline Error nonpositive_length(const std::string& m) { return Error("NonpositiveLength", m); }
inline Error dangling_endpoint(const std::string& m) { return Error("DanglingEdgeEndpoint", m); }
inline Error bad_genus(const std::string& m) { return Error("BadGenus", m); }
inline Error non_integer_slope(const std::string& m) { return Error("NonIntegerSlope", m); }
inline Error not_effective(const std::string& m) { return Error("NotEffectiveAwayFromBasepoint", m); }
inline Error firing_time_too_large(const std::string& m) { return Error("FiringTimeTooLarge", m); }
inline Error insufficient_chips(const std::string& m) { return Error("InsufficientChips", m); }
inline Error malformed_open_set(const std::string& m) { return Error("MalformedOpenSet", m); }
inline Error budget_exceeded(const std::string& m) { return Error("ResourceBudgetExceeded", m); }
inline Error incompatible_denominator(const std::string& m) { return Error("IncompatibleDenominator", m); }
inline Error case_mismatch(const std::string& m) { return Error("CaseMismatch", m); }
inline Error usage(const std::string& m) { return Error("UsageError", m); }
}  // namespace err

}  // namespace tbn
