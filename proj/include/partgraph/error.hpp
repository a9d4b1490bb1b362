#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace partgraph {

using Int = std::int64_t;

/// Thrown when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would materialize more than the configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, Int cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  Int cap() const noexcept { return cap_; }

 private:
  Int cap_;
};

/// Default bound on p(n) for anything that enumerates a full vertex set.
inline constexpr Int kDefaultCap = 2'000'000;

}  // namespace partgraph
