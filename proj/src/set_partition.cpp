#include "oprg/set_partition.hpp"

#include <algorithm>
#include <set>

#include "oprg/errors.hpp"

namespace oprg {

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 1) throw PreconditionError("set partitions need n >= 1");
  std::vector<SetPartition> out;
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  auto emit = [&] {
    SetPartition p;
    p.n = n;
    const int k = 1 + *std::max_element(a.begin(), a.end());
    p.blocks.assign(k, {});
    for (int i = 0; i < n; ++i) p.blocks[a[i]].push_back(i + 1);
    out.push_back(std::move(p));
  };
  for (;;) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, a[j]);
      if (a[i] <= max_prefix) break;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

SetPartition canonicalize_partition(std::vector<std::vector<int>> blocks) {
  std::set<int> seen;
  int count = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw PreconditionError("empty block in partition");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || !seen.insert(v).second)
        throw PreconditionError("blocks are not disjoint subsets of {1..n}");
      ++count;
    }
  }
  if (count == 0 || *seen.rbegin() != count)
    throw PreconditionError("blocks do not cover {1..n} exactly");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  SetPartition p;
  p.n = count;
  p.blocks = std::move(blocks);
  return p;
}

Permutation partition_permutation(const SetPartition& p) {
  std::vector<int> images;
  images.reserve(p.n);
  for (const auto& b : p.blocks) images.insert(images.end(), b.begin(), b.end());
  return make_permutation(std::move(images));
}

SetPartition partition_from_subset(const std::vector<int>& subset, int n) {
  if (subset.empty()) throw PreconditionError("Pi_J needs a nonempty subset");
  std::vector<std::vector<int>> blocks;
  std::vector<int> j = subset;
  std::sort(j.begin(), j.end());
  blocks.push_back(j);
  std::set<int> in_j(j.begin(), j.end());
  for (int v = 1; v <= n; ++v)
    if (!in_j.count(v)) blocks.push_back({v});
  return canonicalize_partition(std::move(blocks));
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace oprg
