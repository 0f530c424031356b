#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace eur::oracle::detail {

// Partition count actually used: 0 means one per hardware thread.
inline unsigned resolve_partitions(unsigned requested, std::size_t n) {
  unsigned parts = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (n < parts) parts = static_cast<unsigned>(std::max<std::size_t>(n, 1));
  return parts;
}

// Splits [0, n) into `parts` contiguous ranges and runs fn(part, begin, end)
// for each on its own thread. Callers merge per-part results with an
// associative, order-independent rule so the outcome does not depend on
// the partition count.
template <class Fn>
void for_each_partition(std::size_t n, unsigned parts, Fn&& fn) {
  if (parts <= 1) {
    fn(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(parts);
  for (unsigned k = 0; k < parts; ++k) {
    const std::size_t begin = n * k / parts;
    const std::size_t end = n * (k + 1) / parts;
    workers.emplace_back([&fn, k, begin, end] { fn(k, begin, end); });
  }
}

}  // namespace eur::oracle::detail
