#pragma once

#include <stdexcept>
#include <string>

namespace srmt {

/// Failure categories surfaced by the library. Every thrown error carries one.
enum class errc {
  syntax,              // malformed formula, polynomial, value or literal text
  config,              // ill-formed input data (missing fields, bad arity, ...)
  tag_mismatch,        // operands belong to different semirings
  value_out_of_range,  // value outside the carrier or outside a required bound
  class_violation,     // target semiring lacks the profile the source requires
  profile_violation,   // a declared semiring law fails, or a law is required but absent
  not_model_defining,  // construction needs a model-defining interpretation
  not_separating,      // a user-supplied homomorphism set fails the separation check
  epsilon_too_large,   // threshold exceeds the minimum gap of the value set
  cap_exceeded,        // an exponent or enumeration cap was hit
  condition_failed,    // a cancellation witness condition does not hold
  degenerate,          // degenerate inputs (equal values, unusable kernel, ...)
  unknown_symbol,      // relation symbol absent from the vocabulary
  unbound_name,        // term is neither a bound variable nor a universe element
  scenario_mismatch,   // a demo scenario's recomputed result disagrees with its data
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::syntax: return "syntax";
    case errc::config: return "config";
    case errc::tag_mismatch: return "tag-mismatch";
    case errc::value_out_of_range: return "value-out-of-range";
    case errc::class_violation: return "class-violation";
    case errc::profile_violation: return "profile-violation";
    case errc::not_model_defining: return "not-model-defining";
    case errc::not_separating: return "not-separating";
    case errc::epsilon_too_large: return "epsilon-too-large";
    case errc::cap_exceeded: return "cap-exceeded";
    case errc::condition_failed: return "condition-failed";
    case errc::degenerate: return "degenerate";
    case errc::unknown_symbol: return "unknown-symbol";
    case errc::unbound_name: return "unbound-name";
    case errc::scenario_mismatch: return "scenario-mismatch";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace srmt
