#pragma once

#include <stdexcept>
#include <string>

namespace qcurves {

/// A computed object failed an internal cross-check (count, containment,
/// embedding of weights). Signals a convention or data error, never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcurves
