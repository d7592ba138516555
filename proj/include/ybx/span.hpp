#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ybx/ring.hpp"

namespace ybx {

template <class Ring>
using SparseVec = std::map<std::int64_t, typename Ring::Elem>;

template <class Ring>
void sparse_axpy(const Ring& ring, SparseVec<Ring>& dst, const typename Ring::Elem& c,
                 const SparseVec<Ring>& src) {
  for (const auto& [i, v] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      auto w = ring.mul(c, v);
      if (!ring.is_zero(w)) dst.emplace(i, std::move(w));
    } else {
      it->second = ring.add(it->second, ring.mul(c, v));
      if (ring.is_zero(it->second)) dst.erase(it);
    }
  }
}

// Row space in reduced echelon form over a field, with sparse rows keyed by
// coordinate index. Pivot columns are the row keys; reducing a vector
// eliminates every pivot coordinate, so the remainder is supported on
// complement coordinates only.
template <class Ring>
class EchelonSpan {
  static_assert(Ring::is_field, "EchelonSpan requires a field");

 public:
  explicit EchelonSpan(const Ring& ring) : ring_(ring) {}

  SparseVec<Ring> reduce(SparseVec<Ring> v) const {
    while (true) {
      auto hit = rows_.end();
      for (auto it = v.begin(); it != v.end(); ++it) {
        hit = rows_.find(it->first);
        if (hit != rows_.end()) break;
      }
      if (hit == rows_.end()) return v;
      auto c = ring_.neg(v.at(hit->first));
      sparse_axpy(ring_, v, c, hit->second);
    }
  }

  bool contains(const SparseVec<Ring>& v) const { return reduce(v).empty(); }

  // Returns true when v was independent of the span (dimension grew).
  bool insert(SparseVec<Ring> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::int64_t pivot = v.begin()->first;
    auto inv = ring_.inv(v.begin()->second);
    for (auto& [i, c] : v) c = ring_.mul(c, inv);
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      auto c = ring_.neg(it->second);
      sparse_axpy(ring_, row, c, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::map<std::int64_t, SparseVec<Ring>>& rows() const { return rows_; }
  bool is_pivot(std::int64_t i) const { return rows_.count(i) != 0; }

 private:
  Ring ring_;
  std::map<std::int64_t, SparseVec<Ring>> rows_;
};

}  // namespace ybx
