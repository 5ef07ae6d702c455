#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace medoid {

// Malformed input data (bad token, ragged row, empty file). Messages carry
// "path:line:" prefixes where a line is known.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure (missing file, unwritable path).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph is not connected (strongly connected when directed). Carries one
// witness pair: no path from `from` to `to`.
struct disconnected_error : std::runtime_error {
  disconnected_error(std::string msg, int64_t from_, int64_t to_)
      : std::runtime_error(std::move(msg)), from(from_), to(to_) {}
  int64_t from;
  int64_t to;
};

// A randomized generator exhausted its retry budget.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace medoid
