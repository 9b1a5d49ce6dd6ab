#pragma once

#include <stdexcept>
#include <string>

namespace stybe {

/// Input that is not even well-formed: wrong shape, indices out of range,
/// mismatched dimensions.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request whose hypothesis does not hold for the given input, or that
/// exceeds a configured search bound.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The circle operation a*b + a + b of a ring lacks an inverse.
class NotRadicalRing : public std::runtime_error {
 public:
  explicit NotRadicalRing(int element)
      : std::runtime_error("not a radical ring: element " +
                           std::to_string(element) +
                           " has no quasi-inverse"),
        element_(element) {}

  int element() const noexcept { return element_; }

 private:
  int element_;
};

}  // namespace stybe
