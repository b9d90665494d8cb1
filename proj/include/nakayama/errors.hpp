#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

struct MalformedPath : std::runtime_error {
  int index;  // first offending step, -1 when the whole encoding is bad
  MalformedPath(const std::string& what, int idx = -1)
      : std::runtime_error(what), index(idx) {}
};

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLabel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TopPathOnly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleAtPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotComparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nakayama
