#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace twistcoh {

// Common base so callers can catch everything thrown by this library at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NonSquare : Error {
  using Error::Error;
};

// A 1-form was required to be nonzero (e.g. to split off its kernel ideal).
struct OmegaZero : Error {
  using Error::Error;
};

struct OmegaNotClosed : Error {
  using Error::Error;
};

struct NotSolvable : Error {
  using Error::Error;
};

// Exact eigenvalue extraction hit an irrational spectrum; the offending
// char-poly factor is carried along for diagnostics.
struct RationalSpectrumRequired : Error {
  std::string residual;
  RationalSpectrumRequired(const std::string& msg, std::string residual_factor)
      : Error(msg), residual(std::move(residual_factor)) {}
};

struct ProbeInExceptionalSet : Error {
  using Error::Error;
};

}  // namespace twistcoh
