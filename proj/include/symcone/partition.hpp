#pragma once

#include "symcone/setfn.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symcone {

// (|A ∩ N_1|, ..., |A ∩ N_t|) for some partition.
using PartitionVector = std::vector<int>;

// Nonincreasing positive parts summing to n.
struct IntegerPartition {
  std::vector<int> parts;
  int total() const;
  std::string to_string() const;  // "[3,1]"
  auto operator<=>(const IntegerPartition&) const = default;
};

class Partition {
 public:
  Partition(GroundSet ground, std::vector<SubsetMask> blocks);

  // "1,2|3,4"; a bare "[n1,...,nt]" gives consecutive blocks of those sizes.
  static Partition parse(std::string_view text);
  static Partition singletons(int n);
  static Partition whole(int n);
  // Consecutive blocks; sizes taken in the given order.
  static Partition consecutive(const std::vector<int>& sizes);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int t() const { return static_cast<int>(blocks_.size()); }
  SubsetMask block(int l) const { return blocks_.at(l); }  // 0-based
  const std::vector<SubsetMask>& blocks() const { return blocks_; }
  std::vector<int> block_sizes() const;
  int block_of(int element) const;  // 0-based block index
  std::string to_string() const;
  bool operator==(const Partition&) const = default;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> blocks_;  // sorted by least element
};

PartitionVector partition_vector(SubsetMask a, const Partition& p);

// Every block of p1 lies inside a block of p2.
bool refines(const Partition& p1, const Partition& p2);
// p1 refines p2 and p2 is obtained by merging exactly two blocks of p1.
bool covers(const Partition& p2, const Partition& p1);

IntegerPartition integer_partition_of(const Partition& p);
std::vector<IntegerPartition> integer_partitions(int n);  // lexicographically decreasing
// Consecutive blocks with nondecreasing sizes, one per integer partition.
Partition canonical(const IntegerPartition& shape);
std::vector<Partition> canonical_representatives(int n);
std::vector<Partition> all_partitions(int n);

}  // namespace symcone
