#pragma once

#include <stdexcept>

namespace symfam {

// A search or enumeration hit its node/size budget before closing.
// Partial results, where an operation supports them, travel through the
// normal return channel together with a non-exhaustive flag.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested object does not fit the representation limits.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symfam
