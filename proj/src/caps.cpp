#include "mn/caps.hpp"

namespace mn {

Caps &global_caps() {
  static Caps caps;
  return caps;
}

CapExceededError::CapExceededError(std::string cap_name,
                                   std::uint64_t cap_value,
                                   std::string requirement)
    : std::runtime_error("cap exceeded: " + cap_name + "=" +
                         std::to_string(cap_value) + ", required: " +
                         requirement),
      cap_name_(std::move(cap_name)), cap_value_(cap_value),
      requirement_(std::move(requirement)) {}

} // namespace mn
