#pragma once

#include <stdexcept>
#include <string>

namespace ru4 {

// A computation was refused because it exceeds an enumeration or
// materialization budget. Callers may retry with a larger cap.
class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

// A span that was required to be invariant under the maximal-ideal
// action (v -> 2v, v -> u*v) is not.
class NotClosedError : public std::logic_error {
 public:
  explicit NotClosedError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ru4
