#pragma once

#include <vector>

#include "oprg/permutation.hpp"

namespace oprg {

// Partition of {1..n} in canonical order: elements increase within each
// block and blocks are sorted by their minima. Values of this type are
// always canonical; raw block data only exists inside canonicalize_partition.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const SetPartition&) const = default;

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> block_sizes() const;
};

// Every partition of {1..n}, canonical, in restricted-growth-string
// lexicographic order. The count is the Bell number B_n. Rejects n < 1.
std::vector<SetPartition> enumerate_set_partitions(int n);

// Sorts blocks internally and by minima; rejects overlapping blocks, empty
// blocks, and element sets other than exactly {1..n}.
SetPartition canonicalize_partition(std::vector<std::vector<int>> blocks);

// sigma_Pi: the concatenation of the canonical blocks read as an image list.
Permutation partition_permutation(const SetPartition& p);

// Pi_J: block J together with singletons of {1..n}\J. Rejects empty J.
SetPartition partition_from_subset(const std::vector<int>& subset, int n);

// Nonempty subsets of {1..n} as sorted lists, in bitmask order.
std::vector<std::vector<int>> nonempty_subsets(int n);

}  // namespace oprg
