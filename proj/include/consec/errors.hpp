#pragma once

#include <stdexcept>
#include <string>

namespace consec {

// Malformed input: bad tuples, signature mismatches, offsets out of range.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration or search cap was exceeded.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Caps for enumeration and search.  max_bits bounds the total relation-bit
// count of a structure being enumerated; max_spanning_bits bounds the free
// tuple positions enumerated by combine_all; max_sigma bounds the number of
// candidate structures tracked while realizing a path.
struct Limits {
  int max_bits = 24;
  int max_spanning_bits = 20;
  long max_sigma = 200000;
  int max_lift = 8;       // extra factor-graph dimensions tried when lifting
  long max_paths = 50000; // path budget for bounded ambiguity searches
};

}  // namespace consec
