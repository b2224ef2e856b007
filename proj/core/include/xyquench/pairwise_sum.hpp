#pragma once

#include <cstddef>
#include <span>

namespace xyq {

// Tree-order summation. The split points depend only on the length, so the
// result is identical for a given input no matter who calls it.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace xyq
