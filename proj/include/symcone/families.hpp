#pragma once

#include "symcone/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symcone {

// φ: source elements -> pairwise disjoint subsets of the target ground set.
class ExpansionMap {
 public:
  // images[i-1] = φ(i)
  ExpansionMap(int target_size, std::vector<SubsetMask> images);
  // Consecutive target blocks of sizes h({1}), h({2}), ... in source order.
  static ExpansionMap canonical(const SetFunction& h);
  // φ_{m,n}(1) = {1..m-n+1}, φ_{m,n}(i) = {i+m-n} for i >= 2.
  static ExpansionMap phi_mn(int m, int n);

  int source_size() const { return static_cast<int>(images_.size()); }
  int target_size() const { return target_; }
  SubsetMask image(int i) const { return images_.at(i - 1); }
  SubsetMask image_of(SubsetMask b) const;

 private:
  int target_;
  std::vector<SubsetMask> images_;
};

SetFunction uniform(int m, int n);
// min{k, |A ∩ support|}
SetFunction uniform_with_loops(int n, int k, SubsetMask support);
// g(A) = min over B of h(B) + |A \ φ(B)|
SetFunction free_expansion(const SetFunction& h, const ExpansionMap& phi);
// h(B) = g(φ(B))
SetFunction factor(const SetFunction& g, const ExpansionMap& phi);
SetFunction u1_loop(int n);
SetFunction u_km(int k, int m, int n);
// Singletons 2, pairs inside the first block 4, other pairs 3, larger sets 4.
SetFunction gap_witness(int n1, int n2);
// Same shape with `special` playing the role of the first block.
SetFunction gap_witness(const GroundSet& ground, SubsetMask special);

struct FamilyTag {
  enum class Kind { Uniform, UniformWithLoops, U1Loop, Ukm, Gap };
  Kind kind;
  std::vector<int> params;  // UniformWithLoops: n, k, support mask

  static FamilyTag parse(std::string_view text);
  std::string to_string() const;
  SetFunction build() const;
  bool operator==(const FamilyTag&) const = default;
};

// U^{{1},n}_{1,1} first, then U^n_{k,m} by m ascending, k ascending.
std::vector<FamilyTag> family_Un_tags(int n);
std::vector<SetFunction> family_Un(int n);

}  // namespace symcone
