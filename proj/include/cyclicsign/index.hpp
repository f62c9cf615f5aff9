#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cyclicsign {

// All public indices are 1-based, matching the usual matrix notation.

// The unique r in {1, ..., n} with i = r (mod n). Throws InvalidDimension
// for n < 1.
int wrap_index(long long i, int n);

// Number of forward steps in the cyclic order 1 -> 2 -> ... -> n -> 1 needed
// to get from i to j; lies in {0, ..., n-1}. Throws InvalidIndex.
int cyclic_distance(int i, int j, int n);

// Sorted, duplicate-free subset of {1, ..., n}.
class IndexSet {
 public:
  IndexSet() = default;
  // Sorts and deduplicates. Indices must be >= 1.
  IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices);

  // {1, ..., n}
  static IndexSet range(int n);

  bool contains(int i) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  int front() const { return indices_.front(); }
  int back() const { return indices_.back(); }
  int operator[](std::size_t k) const { return indices_[k]; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  const std::vector<int>& values() const { return indices_; }

  // Position of i inside the set (0-based), or -1.
  int position(int i) const;

  // {1, ..., n} minus this set.
  IndexSet complement(int n) const;
  IndexSet united(const IndexSet& other) const;
  bool disjoint(const IndexSet& other) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
};

}  // namespace cyclicsign
