#include "symcone/cone.hpp"

#include "symcone/sampling.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace symcone {

std::string label_to_string(const RowLabel& label) {
  if (auto* o = std::get_if<OrbitLabel>(&label)) return o->to_string();
  if (auto* f = std::get_if<FacetId>(&label)) return f->to_string();
  return "";
}

HCone::HCone(int dim, std::vector<Row> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim < 0) throw ArgumentError("negative cone dimension");
  std::set<IntVector> seen;
  for (const auto& r : rows_) {
    if (static_cast<int>(r.coeffs.size()) != dim) throw ArgumentError("row length differs from the cone dimension");
    if (std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Integer& x) { return x == 0; }))
      throw ArgumentError("zero row " + label_to_string(r.label));
    if (!seen.insert(r.coeffs).second) throw ArgumentError("duplicate row " + label_to_string(r.label));
  }
}

std::optional<std::size_t> HCone::first_violation(const RatVector& x) const {
  if (static_cast<int>(x.size()) != dim_) throw ArgumentError("point has the wrong dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i].coeffs, x) < 0) return i;
  return std::nullopt;
}

bool HCone::contains(const RatVector& x) const { return !first_violation(x).has_value(); }

std::vector<std::size_t> HCone::tight_rows(const RatVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i].coeffs, x) == 0) out.push_back(i);
  return out;
}

HCone HCone::without_row(std::size_t i) const {
  auto rows = rows_;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
  return HCone(dim_, std::move(rows));
}

bool contains(const HCone& cone, const RatVector& x) { return cone.contains(x); }

IntVector label_row(const OrbitLabel& label, const SymIndexSet& index) {
  const auto& p = index.partition();
  if (!is_valid_label(label, p)) throw ArgumentError("label " + label.to_string() + " is not valid for " + p.to_string());
  IntVector row(index.size());
  auto shifted = [&](PartitionVector k, int l, int by) {
    k[l] += by;
    return index.index_of(k);
  };
  auto b = label.blocks();
  switch (label.kind()) {
    case OrbitKind::A: {
      PartitionVector full = index.sizes();
      row[index.index_of(full)] += 1;
      row[shifted(full, b[0], -1)] -= 1;
      break;
    }
    case OrbitKind::B: {
      const auto& k = label.lambda_k;
      row[shifted(k, b[0], 1)] += 1;
      row[shifted(k, b[1], 1)] += 1;
      row[index.index_of(k)] -= 1;
      auto both = k;
      both[b[0]] += 1;
      both[b[1]] += 1;
      row[index.index_of(both)] -= 1;
      break;
    }
    case OrbitKind::C: {
      const auto& k = label.lambda_k;
      row[shifted(k, b[0], 1)] += 2;
      row[index.index_of(k)] -= 1;
      row[shifted(k, b[0], 2)] -= 1;
      break;
    }
  }
  return row;
}

IntVector reduce_form(const LinearForm& form, const SymIndexSet& index) {
  const auto& p = index.partition();
  if (!(form.ground() == p.ground())) throw ArgumentError("form and partition live on different ground sets");
  IntVector row(index.size());
  for (const auto& [a, c] : form.coefficients()) {
    if (denominator(c) != 1) throw ArgumentError("reduce_form expects integer coefficients");
    row[index.index_of(partition_vector(a, p))] += numerator(c);
  }
  return row;
}

static IntVector drop_origin(IntVector v) {
  v.erase(v.begin());
  return v;
}

HCone psi_p_hrep(const Partition& p) {
  SymIndexSet idx(p);
  std::vector<Row> rows;
  for (const auto& l : orbit_labels(p)) rows.push_back({drop_origin(label_row(l, idx)), l});
  return HCone(static_cast<int>(idx.size()) - 1, std::move(rows));
}

HCone gamma_n_hrep(const GroundSet& ground) {
  std::vector<Row> rows;
  for (const auto& [id, form] : elemental_forms(ground)) {
    IntVector r(ground.subset_count());
    for (const auto& [a, c] : form.coefficients()) r[a] = numerator(c);
    rows.push_back({drop_origin(std::move(r)), id});
  }
  return HCone(static_cast<int>(ground.subset_count()) - 1, std::move(rows));
}

RatVector gamma_coordinates(const SetFunction& h) { return RatVector(h.values().begin() + 1, h.values().end()); }

// Fraction-free elimination; rows are reduced by their content after every step.
std::size_t matrix_rank(const std::vector<IntVector>& input) {
  if (input.empty()) return 0;
  auto m = input;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Integer a = m[rank][c], b = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
      m[r] = primitive(m[r]);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatVector null_vector(const std::vector<Row>& rows, std::size_t dim) {
  std::vector<RatVector> m;
  for (const auto& r : rows) m.push_back(to_rational(r.coeffs));
  auto piv = rref(m, dim);
  std::vector<bool> is_piv(dim, false);
  for (auto c : piv) is_piv[c] = true;
  std::size_t free = 0;
  while (free < dim && is_piv[free]) ++free;
  RatVector x(dim);
  x[free] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -m[i][free];
  return x;
}

struct DdRay {
  IntVector dir;
  boost::dynamic_bitset<> zero;
};

std::string vector_to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

std::vector<Ray> extreme_rays(const HCone& cone, int max_dim) {
  const int d = cone.dim();
  if (d > max_dim)
    throw UnsupportedError("cone dimension " + std::to_string(d) + " exceeds the cap of " + std::to_string(max_dim));
  const auto& rows = cone.rows();
  const std::size_t m = rows.size();
  if (d == 0) return {};
  {
    std::vector<IntVector> all;
    for (const auto& r : rows) all.push_back(r.coeffs);
    if (matrix_rank(all) < static_cast<std::size_t>(d))
      throw PreconditionError("cone is not pointed; it contains the line through " +
                              vector_to_string(null_vector(rows, d)));
  }

  // Greedy choice of d independent rows.
  std::vector<std::size_t> basis;
  std::vector<IntVector> basis_rows;
  for (std::size_t i = 0; i < m && basis.size() < static_cast<std::size_t>(d); ++i) {
    basis_rows.push_back(rows[i].coeffs);
    if (matrix_rank(basis_rows) == basis_rows.size())
      basis.push_back(i);
    else
      basis_rows.pop_back();
  }

  // Columns of the inverse of the basis matrix.
  std::vector<RatVector> aug;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    RatVector row = to_rational(basis_rows[r]);
    row.resize(2 * d);
    row[d + r] = 1;
    aug.push_back(std::move(row));
  }
  rref(aug, d);

  boost::dynamic_bitset<> processed(m);
  for (auto i : basis) processed.set(i);
  std::vector<DdRay> rays;
  for (int j = 0; j < d; ++j) {
    RatVector col(d);
    for (int r = 0; r < d; ++r) col[r] = aug[r][d + j];
    DdRay ray{primitive(col), boost::dynamic_bitset<>(m)};
    for (int r = 0; r < d; ++r)
      if (r != j) ray.zero.set(basis[r]);
    rays.push_back(std::move(ray));
  }

  auto value = [&](const DdRay& r, std::size_t i) {
    Integer s = 0;
    const auto& a = rows[i].coeffs;
    for (int k = 0; k < d; ++k)
      if (a[k] != 0 && r.dir[k] != 0) s += a[k] * r.dir[k];
    return s;
  };

  while (processed.count() < m) {
    // Next row: the one with the fewest tight rays.
    std::size_t next = m, best = SIZE_MAX;
    for (std::size_t i = 0; i < m; ++i) {
      if (processed.test(i)) continue;
      std::size_t tight = 0;
      for (const auto& r : rays) tight += value(r, i) == 0;
      if (tight < best) {
        best = tight;
        next = i;
      }
    }
    std::vector<Integer> vals;
    vals.reserve(rays.size());
    for (const auto& r : rays) vals.push_back(value(r, next));

    std::vector<DdRay> kept;
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (vals[k] > 0) pos.push_back(k);
      if (vals[k] < 0) neg.push_back(k);
    }
    for (auto ip : pos)
      for (auto in : neg) {
        auto common = rays[ip].zero & rays[in].zero;
        if (common.count() + 2 < static_cast<std::size_t>(d)) continue;
        std::vector<IntVector> tight;
        for (auto i = common.find_first(); i != boost::dynamic_bitset<>::npos; i = common.find_next(i))
          tight.push_back(rows[i].coeffs);
        if (matrix_rank(tight) + 2 != static_cast<std::size_t>(d)) continue;
        IntVector dir(d);
        const Integer a = vals[ip], b = -vals[in];
        for (int k = 0; k < d; ++k) dir[k] = a * rays[in].dir[k] + b * rays[ip].dir[k];
        common.set(next);
        kept.push_back({primitive(dir), std::move(common)});
      }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (vals[k] < 0) continue;
      if (vals[k] == 0) rays[k].zero.set(next);
      kept.push_back(std::move(rays[k]));
    }
    rays = std::move(kept);
    processed.set(next);
  }

  std::vector<Ray> out;
  for (auto& r : rays) out.push_back({std::move(r.dir)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConicDecomposition conic_decompose(const RatVector& v, const std::vector<RatVector>& generators) {
  const std::size_t d = v.size();
  const std::size_t m = generators.size();
  for (const auto& g : generators)
    if (g.size() != d) throw ArgumentError("generator has the wrong dimension");

  std::vector<int> sign(d, 1);
  for (std::size_t r = 0; r < d; ++r)
    if (v[r] < 0) sign[r] = -1;
  // Column j < m is generator j with rows sign-adjusted; column m + r is the artificial e_r.
  auto column_entry = [&](std::size_t j, std::size_t r) -> Rational {
    if (j < m) return sign[r] < 0 ? Rational(-generators[j][r]) : generators[j][r];
    return j - m == r ? Rational(1) : Rational(0);
  };
  auto cost = [&](std::size_t j) { return j < m ? 0 : 1; };

  std::vector<std::size_t> basis(d);
  std::vector<RatVector> binv(d, RatVector(d));
  RatVector x(d);
  for (std::size_t r = 0; r < d; ++r) {
    basis[r] = m + r;
    binv[r][r] = 1;
    x[r] = sign[r] < 0 ? Rational(-v[r]) : v[r];
  }
  std::vector<bool> in_basis(m + d, false);
  for (auto b : basis) in_basis[b] = true;

  RatVector y(d);
  while (true) {
    for (std::size_t c = 0; c < d; ++c) {
      Rational s = 0;
      for (std::size_t r = 0; r < d; ++r)
        if (cost(basis[r]) != 0 && binv[r][c] != 0) s += binv[r][c];
      y[c] = s;
    }
    std::size_t enter = m + d;
    for (std::size_t j = 0; j < m + d && enter == m + d; ++j) {
      if (in_basis[j]) continue;
      Rational rc = cost(j);
      for (std::size_t r = 0; r < d; ++r) {
        Rational a = column_entry(j, r);
        if (a != 0) rc -= y[r] * a;
      }
      if (rc < 0) enter = j;
    }
    if (enter == m + d) break;
    RatVector dir(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (binv[r][c] == 0) continue;
        Rational a = column_entry(enter, c);
        if (a != 0) dir[r] += binv[r][c] * a;
      }
    std::size_t leave = d;
    Rational best;
    for (std::size_t r = 0; r < d; ++r) {
      if (dir[r] <= 0) continue;
      Rational ratio = x[r] / dir[r];
      if (leave == d || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == d) throw std::logic_error("phase one reported an unbounded direction");
    Rational piv = dir[leave];
    for (auto& e : binv[leave]) e /= piv;
    x[leave] /= piv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == leave || dir[r] == 0) continue;
      Rational f = dir[r];
      for (std::size_t c = 0; c < d; ++c) binv[r][c] -= f * binv[leave][c];
      x[r] -= f * x[leave];
    }
    in_basis[basis[leave]] = false;
    basis[leave] = enter;
    in_basis[enter] = true;
  }

  Rational objective = 0;
  for (std::size_t r = 0; r < d; ++r)
    if (basis[r] >= m) objective += x[r];

  ConicDecomposition out;
  if (objective == 0) {
    out.feasible = true;
    out.coefficients.assign(m, 0);
    for (std::size_t r = 0; r < d; ++r)
      if (basis[r] < m) out.coefficients[basis[r]] = x[r];
    return out;
  }
  out.certificate.resize(d);
  for (std::size_t r = 0; r < d; ++r) out.certificate[r] = sign[r] < 0 ? y[r] : Rational(-y[r]);
  return out;
}

FacetReductionReport facet_reduction_check(const Partition& p, std::size_t samples, std::uint64_t seed) {
  FacetReductionReport rep;
  SymIndexSet idx(p);
  auto fail = [&](std::string why) {
    if (rep.ok) rep.detail = std::move(why);
    rep.ok = false;
  };

  const auto labels = orbit_labels(p);
  rep.labels = labels.size();
  std::map<IntVector, OrbitLabel> by_row;
  for (const auto& [id, form] : elemental_forms(p.ground())) {
    ++rep.facets;
    auto label = facet_orbit_label(id, p);
    // Forms never carry the empty set, so compare away from the origin.
    auto reduced = drop_origin(reduce_form(form, idx));
    if (reduced != drop_origin(label_row(label, idx)))
      fail(id.to_string() + " reduces to a row different from " + label.to_string());
    auto [it, fresh] = by_row.emplace(reduced, label);
    if (!fresh && !(it->second == label))
      fail(id.to_string() + " shares a reduced row with " + it->second.to_string());
  }
  rep.distinct_rows = by_row.size();
  if (rep.distinct_rows != labels.size())
    fail(std::to_string(rep.distinct_rows) + " distinct rows but " + std::to_string(labels.size()) + " labels");
  if (labels.size() != orbit_count_formula(p)) fail("label count disagrees with the closed-form count");

  // Pairwise non-proportional: compare primitive representatives up to sign.
  std::set<IntVector> directions;
  for (const auto& [row, label] : by_row) {
    auto prim = primitive(row);
    auto first = std::find_if(prim.begin(), prim.end(), [](const Integer& x) { return x != 0; });
    if (first != prim.end() && *first < 0)
      for (auto& x : prim) x = -x;
    if (!directions.insert(prim).second) fail("row of " + label.to_string() + " is proportional to another row");
  }

  const HCone cone = psi_p_hrep(p);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    SetFunction h = random_symmetric(p, rng, i);
    bool member = cone.contains(to_sym(h, p).coordinates());
    bool poly = is_polymatroid(h);
    ++rep.samples;
    rep.members += member;
    if (member != poly) fail("membership disagrees with the polymatroid test on sample " + std::to_string(i));
  }
  return rep;
}

}  // namespace symcone
