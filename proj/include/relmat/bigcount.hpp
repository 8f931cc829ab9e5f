#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace relmat {

/// Exact nonnegative solution count. Counts grow as 2^(free cells), so this
/// must never overflow or round.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(std::size_t e) {
  BigCount c = 1;
  c <<= static_cast<unsigned>(e);
  return c;
}

}  // namespace relmat
