#pragma once

#include <stdexcept>

namespace unruhdec {

/// Raised when an adaptive numerical routine cannot reach its tolerance.
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace unruhdec
