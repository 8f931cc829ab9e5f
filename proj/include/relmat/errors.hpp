#pragma once

#include <stdexcept>

namespace relmat {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A label that is not an element of the index set in use.
struct UnknownLabel : Error {
  using Error::Error;
};

/// The same label listed twice when building an index set.
struct DuplicateElement : Error {
  using Error::Error;
};

/// Empty label, or a label containing whitespace (labels must tokenize).
struct InvalidLabel : Error {
  using Error::Error;
};

/// Matrix input whose rows do not form an n-by-n grid.
struct NonSquare : Error {
  using Error::Error;
};

/// Matrix entry other than 0 or 1.
struct NonBinaryEntry : Error {
  using Error::Error;
};

/// Two relations combined over different index sets.
struct IndexSetMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Cartesian product of zero factors.
struct EmptyFactorList : Error {
  using Error::Error;
};

/// Brute-force request above the configured dimension cap.
struct TooLarge : Error {
  using Error::Error;
};

/// Malformed input file; the message names the source and line.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace relmat
