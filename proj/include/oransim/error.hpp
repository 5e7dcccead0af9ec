#pragma once

#include <stdexcept>
#include <string>

namespace oransim {

/// Raised for any invalid configuration input. The message names the offending
/// key path when one is known, e.g. "cells.ttt_ms: 150 is not a TTT step".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a running simulation hits an inconsistency it cannot recover
/// from (e.g. a control message addressing an unknown cell).
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oransim
