#pragma once

#include <cstddef>
#include <vector>

namespace structree {

/// Verdict about an observed per-radius sequence.
enum class Trend { bounded, unbounded_trend, inconclusive };

const char* to_string(Trend t);

/// Strictly increasing over the last three entries: unbounded_trend. Last
/// three equal: bounded. Anything else, or fewer than three entries:
/// inconclusive.
template <typename T>
Trend classify_trend(const std::vector<T>& values) {
  const std::size_t n = values.size();
  if (n < 3) return Trend::inconclusive;
  const T& x = values[n - 3];
  const T& y = values[n - 2];
  const T& z = values[n - 1];
  if (x < y && y < z) return Trend::unbounded_trend;
  if (x == y && y == z) return Trend::bounded;
  return Trend::inconclusive;
}

}  // namespace structree
