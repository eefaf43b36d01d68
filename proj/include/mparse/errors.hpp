#pragma once

#include <stdexcept>
#include <string>

namespace mparse {

// Configuration or usage problem (CLI exit code 2).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CLI exit code 3).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or incompatible model archive (CLI exit code 4).
struct archive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shape violation; indicates a caller bug.
struct dim_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mparse
