#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace stratos {

using HistoryId = std::size_t;

// Sorted, duplicate-free set of history ids. Potentials, I* sets and
// relation slices are all values of this type.
class HistorySet {
 public:
  using const_iterator = std::vector<HistoryId>::const_iterator;

  HistorySet() = default;
  HistorySet(std::initializer_list<HistoryId> ids) : ids_(ids) { normalize(); }
  explicit HistorySet(std::vector<HistoryId> ids) : ids_(std::move(ids)) { normalize(); }

  static HistorySet range(std::size_t n) {
    HistorySet s;
    s.ids_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.ids_[i] = i;
    return s;
  }

  bool contains(HistoryId h) const { return std::binary_search(ids_.begin(), ids_.end(), h); }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<HistoryId>& ids() const { return ids_; }

  bool is_subset_of(const HistorySet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  HistorySet intersect(const HistorySet& other) const {
    HistorySet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out.ids_));
    return out;
  }

  HistorySet unite(const HistorySet& other) const {
    HistorySet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
  }

  // Appends an id larger than every current member; used by ordered builders.
  void push_back_sorted(HistoryId h) {
    if (ids_.empty() || ids_.back() < h) ids_.push_back(h);
  }

  friend bool operator==(const HistorySet&, const HistorySet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<HistoryId> ids_;
};

}  // namespace stratos
