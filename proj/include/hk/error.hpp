#pragma once

#include <stdexcept>
#include <string>

namespace hk {

/// Base class for all errors raised by the engine.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values from different ambient rings were combined.
struct ambient_error : error {
  using error::error;
};

/// An operation's mathematical precondition does not hold
/// (e.g. q is not a power of p, or a killer ideal fails to annihilate).
struct precondition_error : error {
  using error::error;
};

/// Malformed input text (polynomial syntax or experiment config).
struct parse_error : error {
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// Invalid experiment configuration; maps to CLI exit code 1.
struct config_error : error {
  using error::error;
};

}  // namespace hk
