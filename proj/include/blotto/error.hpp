#pragma once

#include <stdexcept>
#include <string>

namespace blotto {

// Failure categories surfaced by the library. CLI maps these onto exit codes.
enum class errc {
  budget_order,         // operation requires B < E
  out_of_range,         // allocation or parameter outside its domain
  unsupported_values,   // operation requires v1 = v2 = 1
  boundary_case,        // r_B = d, excluded from the security analysis
  infeasible_division,  // B1 outside the feasible band for the split
  infeasible_gap,       // empty placement window in the sampler
  dimension_mismatch,   // inconsistent vector/matrix dimensions
  too_large,            // instance exceeds the brute-force oracle's limit
  bad_division,         // B1 outside [0, B/2]
  invalid_strategy,     // strategy violates a type invariant
  parse_error,          // malformed rational / JSON / CSV input
  io_error,             // file could not be read or written
  internal,             // broken internal invariant
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace blotto
