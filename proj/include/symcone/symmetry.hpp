#pragma once

#include "symcone/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcone {

// A permutation of the ground set mapping each block of p onto itself.
class BlockPermutation {
 public:
  // image[i-1] is the image of element i.
  BlockPermutation(const Partition& p, std::vector<int> image);
  static BlockPermutation identity(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int element) const { return image_.at(element - 1); }
  SubsetMask apply(SubsetMask a) const;
  BlockPermutation compose(const BlockPermutation& inner) const;  // this ∘ inner
  const std::vector<int>& image() const { return image_; }

 private:
  explicit BlockPermutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// (σh)(A) = h(σ(A))
SetFunction apply_permutation(const BlockPermutation& sigma, const SetFunction& h);

// Tuples (k_1..k_t) with 0 <= k_l <= n_l in lexicographic order.
class SymIndexSet {
 public:
  explicit SymIndexSet(Partition p);
  const Partition& partition() const { return p_; }
  const std::vector<int>& sizes() const { return sizes_; }
  std::size_t size() const { return count_; }
  std::size_t index_of(const PartitionVector& k) const;
  PartitionVector tuple_at(std::size_t index) const;
  // First k_l elements of each block.
  SubsetMask representative(const PartitionVector& k) const;
  bool contains(const PartitionVector& k) const;
  bool operator==(const SymIndexSet& o) const { return p_ == o.p_; }

 private:
  Partition p_;
  std::vector<int> sizes_;
  std::vector<std::size_t> stride_;
  std::size_t count_;
};

class SymVector {
 public:
  explicit SymVector(SymIndexSet index);
  SymVector(SymIndexSet index, RatVector values);  // values[0] must be 0

  const SymIndexSet& index() const { return index_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const Rational& at(const PartitionVector& k) const { return values_.at(index_.index_of(k)); }
  void set(const PartitionVector& k, Rational v);
  const RatVector& values() const { return values_; }
  // Drops the origin coordinate.
  RatVector coordinates() const;
  static SymVector from_coordinates(SymIndexSet index, const RatVector& coords);
  bool operator==(const SymVector& o) const { return index_ == o.index_ && values_ == o.values_; }

 private:
  SymIndexSet index_;
  RatVector values_;
};

// Average of h over each orbit of subsets with equal partition vector.
SetFunction symmetrize(const SetFunction& h, const Partition& p);
// Some pair of subsets with equal partition vectors on which h differs.
std::optional<std::pair<SubsetMask, SubsetMask>> find_asymmetry(const SetFunction& h, const Partition& p);
bool is_p_symmetric(const SetFunction& h, const Partition& p);
SymVector to_sym(const SetFunction& h, const Partition& p);
SetFunction from_sym(const SymVector& s);

enum class OrbitKind { A, B, C };

// [λ_p(I), λ_p(K)] for an elemental facet E(I,K).
struct OrbitLabel {
  PartitionVector lambda_i;
  PartitionVector lambda_k;

  OrbitKind kind() const;
  // Blocks touched by I, 0-based, ascending, with multiplicity for type C.
  std::vector<int> blocks() const;
  std::string to_string() const;
  static OrbitLabel parse(std::string_view text, int t);
  static OrbitLabel type_a(int t, int l);
  static OrbitLabel type_b(int l1, int l2, PartitionVector k);
  static OrbitLabel type_c(int l, PartitionVector k);
  bool operator==(const OrbitLabel&) const = default;
  // Enumeration order: kind, then blocks, then K lexicographically.
  bool operator<(const OrbitLabel& o) const;
};

OrbitLabel facet_orbit_label(const FacetId& facet, const Partition& p);
std::vector<OrbitLabel> orbit_labels(const Partition& p);
std::size_t orbit_count_formula(const Partition& p);
bool is_valid_label(const OrbitLabel& label, const Partition& p);

}  // namespace symcone
