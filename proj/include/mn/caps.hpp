#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mn {

/// Resource limits for the exact algorithms. Every limit is named so that
/// a violation can report which knob to turn.
struct Caps {
  // Maximum number of elements materialized by full enumeration.
  std::uint64_t enumeration_cap = 200000;
  // Maximum group order for subgroup-lattice computations.
  std::uint64_t lattice_cap = 2000;
  // Maximum number of cosets for a quotient's permutation action.
  std::uint64_t quotient_degree_cap = 50000;
  // Maximum number of tuple states explored by the move engine.
  std::uint64_t tuple_space_cap = 2000000;
};

/// Process-wide default caps; the CLI mutates these once at startup.
Caps &global_caps();

/// Thrown when a computation would exceed one of the caps above.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(std::string cap_name, std::uint64_t cap_value,
                   std::string requirement);

  const std::string &cap_name() const { return cap_name_; }
  std::uint64_t cap_value() const { return cap_value_; }
  const std::string &requirement() const { return requirement_; }

private:
  std::string cap_name_;
  std::uint64_t cap_value_;
  std::string requirement_;
};

} // namespace mn
