#ifndef KMATCH_DETAIL_TUPLE_HPP
#define KMATCH_DETAIL_TUPLE_HPP

#include <vector>

namespace kmatch::detail {

// Odometer over [n]^len with entries 1..n. Returns false after the last tuple.
inline bool next_tuple(std::vector<int>& t, int n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < n) {
      ++t[i];
      return true;
    }
    t[i] = 1;
  }
  return false;
}

} // namespace kmatch::detail

#endif // KMATCH_DETAIL_TUPLE_HPP
