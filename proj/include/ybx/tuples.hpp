#pragma once

#include <cstdint>
#include <vector>

namespace ybx {

// Dense indexing of X^len, leftmost coordinate most significant so that the
// numeric order of codes is the lexicographic order of tuples.
inline std::int64_t encode_tuple(int n, const std::vector<int>& t) {
  std::int64_t code = 0;
  for (int v : t) code = code * n + v;
  return code;
}

inline std::vector<int> decode_tuple(int n, int len, std::int64_t code) {
  std::vector<int> t(len);
  for (int i = len; i-- > 0;) {
    t[i] = static_cast<int>(code % n);
    code /= n;
  }
  return t;
}

inline std::int64_t power_ll(int n, int len) {
  std::int64_t p = 1;
  while (len-- > 0) p *= n;
  return p;
}

template <class Fn>
void for_each_tuple(int n, int len, Fn&& fn) {
  std::vector<int> t(len, 0);
  const std::int64_t total = power_ll(n, len);
  for (std::int64_t code = 0; code < total; ++code) {
    fn(static_cast<const std::vector<int>&>(t), code);
    for (int i = len; i-- > 0;) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

}  // namespace ybx
