#pragma once

#include <stdexcept>
#include <string>

namespace ftsel {

// Thrown when input data fails validation (unreadable file, non-numeric or
// non-finite cells, malformed targets). Contract violations such as an
// out-of-range argument use std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftsel
