#include "cyclicsign/index.hpp"

#include "cyclicsign/errors.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace cyclicsign {

int wrap_index(long long i, int n) {
  if (n < 1) throw InvalidDimension("dimension must be >= 1, got " + std::to_string(n));
  long long r = (i - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

int cyclic_distance(int i, int j, int n) {
  if (n < 1) throw InvalidDimension("dimension must be >= 1, got " + std::to_string(n));
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InvalidIndex("index out of range 1.." + std::to_string(n) + ": (" +
                       std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return (j - i + n) % n;
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw InvalidIndex("indices are 1-based, got " + std::to_string(indices_.front()));
  }
}

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet IndexSet::range(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(all));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

int IndexSet::position(int i) const {
  const auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) return -1;
  return static_cast<int>(it - indices_.begin());
}

IndexSet IndexSet::complement(int n) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::united(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

bool IndexSet::disjoint(const IndexSet& other) const {
  std::vector<int> common;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(common));
  return common.empty();
}

}  // namespace cyclicsign
