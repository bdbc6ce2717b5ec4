#pragma once

#include "symcone/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symcone {

inline constexpr int kDefaultMaxDim = 20;

using RowLabel = std::variant<std::monostate, OrbitLabel, FacetId>;
std::string label_to_string(const RowLabel& label);

struct Row {
  IntVector coeffs;  // row · x >= 0
  RowLabel label;
};

// {x : row · x >= 0 for every row}.
class HCone {
 public:
  HCone(int dim, std::vector<Row> rows);
  int dim() const { return dim_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool contains(const RatVector& x) const;
  // Index of the first row violated by x.
  std::optional<std::size_t> first_violation(const RatVector& x) const;
  std::vector<std::size_t> tight_rows(const RatVector& x) const;
  HCone without_row(std::size_t i) const;

 private:
  int dim_;
  std::vector<Row> rows_;
};

// Primitive integer direction.
struct Ray {
  IntVector direction;
  RatVector as_rational() const { return to_rational(direction); }
  auto operator<=>(const Ray& o) const { return direction <=> o.direction; }
  bool operator==(const Ray& o) const = default;
};

// Reduced row of a label over all n_p symmetric coordinates, origin included.
IntVector label_row(const OrbitLabel& label, const SymIndexSet& index);
// Sums the coefficients of a form over each orbit of subsets.
IntVector reduce_form(const LinearForm& form, const SymIndexSet& index);

// Rows in orbit_labels order, over the n_p - 1 non-origin coordinates.
HCone psi_p_hrep(const Partition& p);
// Elemental rows over the 2^n - 1 nonempty subsets.
HCone gamma_n_hrep(const GroundSet& ground);

RatVector gamma_coordinates(const SetFunction& h);

std::size_t matrix_rank(const std::vector<IntVector>& rows);

// Double description. Throws UnsupportedError above max_dim and
// PreconditionError for cones that contain a line.
std::vector<Ray> extreme_rays(const HCone& cone, int max_dim = kDefaultMaxDim);

bool contains(const HCone& cone, const RatVector& x);

struct ConicDecomposition {
  bool feasible = false;
  RatVector coefficients;  // v = Σ c_i g_i with c_i >= 0, when feasible
  RatVector certificate;   // w with w·g_i >= 0 for all i and w·v < 0, otherwise
};

// Exact two-phase simplex with Bland's rule.
ConicDecomposition conic_decompose(const RatVector& v, const std::vector<RatVector>& generators);

struct FacetReductionReport {
  bool ok = true;
  std::size_t facets = 0;
  std::size_t distinct_rows = 0;
  std::size_t labels = 0;
  std::size_t samples = 0;
  std::size_t members = 0;
  std::string detail;
};

FacetReductionReport facet_reduction_check(const Partition& p, std::size_t samples = 100, std::uint64_t seed = 0);

}  // namespace symcone
