#pragma once

#include "symcone/number.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcone {

// Bit i-1 stands for element i.
using SubsetMask = std::uint32_t;

inline constexpr int kDenseCap = 12;

inline constexpr SubsetMask element_bit(int i) { return SubsetMask{1} << (i - 1); }
inline int cardinality(SubsetMask a) { return __builtin_popcount(a); }
std::vector<int> elements_of(SubsetMask a);
std::string subset_to_string(SubsetMask a);  // "{1,3}"

class GroundSet {
 public:
  explicit GroundSet(int n);
  int size() const { return n_; }
  SubsetMask full() const { return n_ == 0 ? 0 : (SubsetMask{1} << n_) - 1; }
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  bool contains(SubsetMask a) const { return (a & ~full()) == 0; }
  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

class SetFunction {
 public:
  // All zeros.
  explicit SetFunction(GroundSet ground);
  // values[mask]; values[0] must be 0.
  SetFunction(GroundSet ground, RatVector values);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  const Rational& operator()(SubsetMask a) const { return values_.at(a); }
  void set(SubsetMask a, Rational v);
  const RatVector& values() const { return values_; }
  bool is_integral() const;

  SetFunction& operator+=(const SetFunction& o);
  friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }
  friend SetFunction operator*(const Rational& c, SetFunction f);
  bool operator==(const SetFunction& o) const { return ground_ == o.ground_ && values_ == o.values_; }

 private:
  GroundSet ground_;
  RatVector values_;
};

enum class Sense { GreaterEq, Equal };

class LinearForm {
 public:
  LinearForm(GroundSet ground, Sense sense = Sense::GreaterEq);
  void add(SubsetMask a, const Rational& c);
  const std::map<SubsetMask, Rational>& coefficients() const { return coeffs_; }
  const GroundSet& ground() const { return ground_; }
  Sense sense() const { return sense_; }
  Rational evaluate(const SetFunction& f) const;
  bool satisfied_by(const SetFunction& f) const;

 private:
  GroundSet ground_;
  Sense sense_;
  std::map<SubsetMask, Rational> coeffs_;  // zero coefficients are dropped
};

// E(i) when both masks describe a single element i with k == 0 and is_monotone;
// E(ij,K) otherwise.
struct FacetId {
  bool monotone = false;
  SubsetMask pair = 0;  // {i} for E(i), {i,j} for E(ij,K)
  SubsetMask k = 0;
  std::string to_string() const;  // "E(2)" or "E(13,{2,4})"
  auto operator<=>(const FacetId&) const = default;
};

// E(i) for i = 1..n, then E(ij,K) by (i,j) and ascending K.
std::vector<std::pair<FacetId, LinearForm>> elemental_forms(const GroundSet& ground);
LinearForm elemental_form(const GroundSet& ground, const FacetId& id);
std::size_t elemental_count(int n);

struct PolymatroidCheck {
  bool ok = true;
  std::optional<FacetId> violated;  // first violated elemental inequality
  bool nonzero_empty = false;
};

PolymatroidCheck check_polymatroid(const SetFunction& f);
bool is_polymatroid(const SetFunction& f);
bool is_matroid(const SetFunction& f);

// I(A;B|C)
Rational mutual_info(const SetFunction& f, SubsetMask a, SubsetMask b, SubsetMask c = 0);
Rational mutual_info(const SetFunction& f, int i, int j, SubsetMask k = 0);

// I(a;b) + I(a;cd) + 3I(c;d|a) + I(c;d|b) - 2I(c;d) >= 0 with roles (a,b,c,d).
LinearForm zhang_yeung_form(const GroundSet& ground, std::array<int, 4> roles);

// Order-preserving relabelling of the elements of m to 1..|m|.
SetFunction restrict(const SetFunction& f, SubsetMask m);

// One "mask value" pair per line; '#' starts a comment.
void write_text(std::ostream& out, const SetFunction& f);
SetFunction read_text(std::istream& in);

}  // namespace symcone
