#pragma once

#include <stdexcept>
#include <string>

namespace thetagw {

// Raised when an identity that the mathematics guarantees fails to hold.
// Seeing one of these means a bug in this library, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error("internal inconsistency: " + what) {}
};

}  // namespace thetagw
