#pragma once

#include <stdexcept>

namespace qnv {

// Malformed or truncated input: IDX files, CSV rows, circuit JSON.
// Messages carry the offending path plus a byte offset or row number.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Feature-cache failures: bad magic or version, ansatz stamp mismatch,
// truncated payload.
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qnv
