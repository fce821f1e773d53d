#include "cftspan/fault_enum.hpp"

#include <limits>

namespace cftspan {

bool for_each_fault_set(int palette, int max_size,
                        const std::function<bool(const FaultSet&)>& fn) {
  FaultSet empty;
  if (!fn(empty)) return false;
  for (int s = 1; s <= max_size && s <= palette; ++s) {
    FaultSet cur(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (!fn(cur)) return false;
      // colex successor: bump the lowest entry with head-room, reset prefix
      int i = 0;
      while (i < s) {
        int limit = (i + 1 < s) ? cur[static_cast<std::size_t>(i + 1)] : palette;
        if (cur[static_cast<std::size_t>(i)] + 1 < limit) break;
        ++i;
      }
      if (i == s) break;
      ++cur[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = j;
    }
  }
  return true;
}

std::uint64_t count_fault_sets(int palette, int max_size, std::uint64_t cap) {
  const std::uint64_t over =
      cap == std::numeric_limits<std::uint64_t>::max() ? cap : cap + 1;
  std::uint64_t total = 0;
  for (int s = 0; s <= max_size && s <= palette; ++s) {
    unsigned __int128 c = 1;
    for (int i = 1; i <= s; ++i) {
      c = c * static_cast<unsigned>(palette - i + 1) / static_cast<unsigned>(i);
      if (c > cap) return over;
    }
    total += static_cast<std::uint64_t>(c);
    if (total > cap) return over;
  }
  return total;
}

}  // namespace cftspan
