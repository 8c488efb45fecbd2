#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "elspl/instance.hpp"

namespace elspl {

/// Syntax or shape error in an instance document, with field location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON instance format. Unknown fields are rejected, numbers
/// must be integers. Semantic checks are left to validate().
Instance parse_instance(const std::string& text);

/// Canonical JSON form; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);

std::string serialize_schedule(const Schedule& schedule);

struct GeneratorParams {
  std::uint64_t seed = 1;
  int horizon = 6;
  int breakpoints = 1;  // m; the generated breakpoints list has m+1 entries
  Quantity demand_max = 10;
  Quantity breakpoint_max = 30;
  Money setup_max = 25;
  Money unit_max = 8;
  Money rate_max = 6;
};

/// Deterministic random instance; always passes validate(). The capacity
/// is drawn from [max(B_m + 1, ceil(D/T)), max(lo, D + 1)] so total
/// capacity covers total demand.
Instance generate_instance(const GeneratorParams& params);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string instance_digest(const Instance& instance);

}  // namespace elspl
