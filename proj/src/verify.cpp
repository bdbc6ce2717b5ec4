#include "symcone/verify.hpp"

#include "symcone/sampling.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <chrono>
#include <map>
#include <set>

namespace symcone {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class V>
std::string vec_str(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Verdict finish(Verdict v, const Stopwatch& w) {
  v.wall_time_ms = w.ms();
  return v;
}

}  // namespace

nlohmann::json Verdict::to_json() const {
  nlohmann::json j{{"claim", claim}, {"params", params}, {"pass", pass}, {"wall_time_ms", wall_time_ms}};
  if (counterexample) j["counterexample"] = *counterexample;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

Verdict compare_ray_sets(const std::string& claim, const HCone& cone, const std::vector<RatVector>& expected,
                         int max_dim) {
  Stopwatch w;
  Verdict v{claim};
  std::set<IntVector> want;
  for (const auto& e : expected) want.insert(primitive(e));
  std::vector<Ray> rays;
  try {
    rays = extreme_rays(cone, max_dim);
  } catch (const PreconditionError& e) {
    v.counterexample = e.what();
    return finish(v, w);
  }
  std::set<IntVector> got;
  for (const auto& r : rays) got.insert(r.direction);
  for (const auto& r : got)
    if (!want.count(r)) {
      v.counterexample = "extra ray " + vec_str(r);
      return finish(v, w);
    }
  for (const auto& r : want)
    if (!got.count(r)) {
      v.counterexample = "missing ray " + vec_str(r);
      return finish(v, w);
    }
  v.pass = true;
  v.detail = std::to_string(got.size()) + " rays";
  return finish(v, w);
}

Verdict verify_psi_n(int n) {
  Stopwatch w;
  if (n < 2) throw ArgumentError("verify_psi_n needs n >= 2");
  auto p = Partition::whole(n);
  auto cone = psi_p_hrep(p);
  std::vector<RatVector> expected;
  for (int m = 1; m <= n; ++m) expected.push_back(to_sym(uniform(m, n), p).coordinates());
  Verdict v = compare_ray_sets("psi_n", cone, expected);
  v.params = {{"n", n}};
  if (!v.pass) return finish(v, w);
  // U_{m,n} is tight on every row except G_m.
  for (int m = 1; m <= n; ++m) {
    OrbitLabel missing = m < n ? OrbitLabel::type_c(0, {m - 1}) : OrbitLabel::type_a(1, 0);
    auto tight = cone.tight_rows(expected[m - 1]);
    std::set<std::size_t> tight_set(tight.begin(), tight.end());
    for (std::size_t i = 0; i < cone.size(); ++i) {
      bool is_missing = std::get<OrbitLabel>(cone.rows()[i].label) == missing;
      if (tight_set.count(i) == is_missing) {
        v.pass = false;
        v.counterexample = "U_{" + std::to_string(m) + "," + std::to_string(n) + "} has the wrong tight set at " +
                           label_to_string(cone.rows()[i].label);
        return finish(v, w);
      }
    }
  }
  return finish(v, w);
}

Verdict verify_psi_1n1(int n) {
  Stopwatch w;
  if (n < 2) throw ArgumentError("verify_psi_1n1 needs n >= 2");
  auto p = Partition::consecutive({1, n - 1});
  std::vector<RatVector> expected;
  for (const auto& f : family_Un(n)) expected.push_back(to_sym(f, p).coordinates());
  Verdict v = compare_ray_sets("psi_1n1", psi_p_hrep(p), expected);
  v.params = {{"n", n}};
  const std::size_t want = 1 + (n - 1) + static_cast<std::size_t>(n) * (n - 1) / 2;
  if (v.pass && expected.size() != want) {
    v.pass = false;
    v.counterexample = "family has " + std::to_string(expected.size()) + " members, expected " + std::to_string(want);
  }
  return finish(v, w);
}

Verdict verify_facet_bijection(const Partition& p, std::size_t samples, std::uint64_t seed) {
  Stopwatch w;
  Verdict v{"facet_bijection"};
  v.params = {{"partition", p.to_string()}};
  auto rep = facet_reduction_check(p, samples, seed);
  v.pass = rep.ok && rep.labels == orbit_count_formula(p);
  if (!rep.ok) v.counterexample = rep.detail;
  v.detail = std::to_string(rep.facets) + " facets, " + std::to_string(rep.distinct_rows) + " reduced rows, " +
             std::to_string(rep.members) + "/" + std::to_string(rep.samples) + " samples inside";
  return finish(v, w);
}

Verdict verify_gap(const Partition& p) {
  Stopwatch w;
  const int t = p.t();
  SubsetMask special = 0;
  for (SubsetMask choice = 1; choice < (SubsetMask{1} << t) && special == 0; choice += 2) {
    if (choice == (SubsetMask{1} << t) - 1) break;
    SubsetMask s = 0;
    for (int l = 0; l < t; ++l)
      if (choice & (SubsetMask{1} << l)) s |= p.block(l);
    if (cardinality(s) >= 2 && cardinality(p.ground().full() & ~s) >= 2) special = s;
  }
  if (special == 0)
    throw ArgumentError("partition " + p.to_string() +
                        " has no coarsening into two blocks of size at least 2; its cone has no gap to witness");
  Verdict v{"gap"};
  v.params = {{"partition", p.to_string()}};
  SetFunction h = gap_witness(p.ground(), special);
  if (!is_polymatroid(h)) {
    v.counterexample = "witness is not a polymatroid";
    return finish(v, w);
  }
  auto cone = psi_p_hrep(p);
  if (auto bad = cone.first_violation(to_sym(h, p).coordinates())) {
    v.counterexample = "witness violates " + label_to_string(cone.rows()[*bad].label);
    return finish(v, w);
  }
  auto inside = elements_of(special), outside = elements_of(p.ground().full() & ~special);
  SubsetMask four = element_bit(inside[0]) | element_bit(inside[1]) | element_bit(outside[0]) | element_bit(outside[1]);
  auto kept = elements_of(four);
  auto pos = [&](int e) { return static_cast<int>(std::find(kept.begin(), kept.end(), e) - kept.begin()) + 1; };
  std::array<int, 4> roles{pos(inside[0]), pos(inside[1]), pos(outside[0]), pos(outside[1])};
  SetFunction r = restrict(h, four);
  Rational zy = zhang_yeung_form(r.ground(), roles).evaluate(r);
  v.params["coarsening_block"] = subset_to_string(special);
  v.params["restriction"] = subset_to_string(four);
  v.detail = "Zhang-Yeung value " + to_string(zy);
  v.pass = zy < 0;
  if (!v.pass) v.counterexample = "Zhang-Yeung value " + to_string(zy) + " is not negative";
  return finish(v, w);
}

std::string to_string(IsolationCase c) {
  switch (c) {
    case IsolationCase::OneBlock:
      return "one-block";
    case IsolationCase::N1:
      return "N1";
    case IsolationCase::N2:
      return "N2";
    case IsolationCase::N3:
      return "N3";
    case IsolationCase::N4:
      return "N4";
    case IsolationCase::N5:
      return "N5";
  }
  return "";
}

namespace {

// p-block index -> index of the context block containing it.
std::vector<int> block_map(const Partition& p, const Partition& coarser) {
  std::vector<int> out;
  for (SubsetMask b : p.blocks()) {
    int found = -1;
    for (int j = 0; j < coarser.t(); ++j)
      if ((b & coarser.block(j)) == b) found = j;
    if (found < 0) throw ArgumentError(coarser.to_string() + " does not coarsen " + p.to_string());
    out.push_back(found);
  }
  return out;
}

// Two-block witnesses on blocks of sizes n1, n2 with the whole set as context.
Rational two_block_value(int n1, int n2, const OrbitLabel& label, int i, int j) {
  const auto& li = label.lambda_i;
  const auto& lk = label.lambda_k;
  if (li[0] == 1 && li[1] == 0) return i;
  if (li[0] == 0 && li[1] == 1) return j;
  if (li[0] == 2) return std::min(i, lk[0] + 1);
  if (li[1] == 2) return std::min(j, lk[1] + 1);
  const int l1 = lk[0] + 1, l2 = lk[1] + 1;
  if ((i <= l1 && j <= l2) || (i >= l1 + 1 && j >= l2 + 1)) return i * n2 + j * n1 - i * j;
  if (i <= l1) return j * l1 - (j - l2) * std::max(0, l1 - i - 1) + i * (n2 - j) + j * (n1 - l1);
  return i * l2 - (i - l1) * std::max(0, l2 - j - 1) + j * (n1 - i) + i * (n2 - l2);
}

}  // namespace

OrbitLabel coarsen_label(const OrbitLabel& label, const Partition& p, const Partition& coarser) {
  auto map = block_map(p, coarser);
  OrbitLabel out{PartitionVector(coarser.t(), 0), PartitionVector(coarser.t(), 0)};
  for (int l = 0; l < p.t(); ++l) {
    out.lambda_i[map[l]] += label.lambda_i[l];
    out.lambda_k[map[l]] += label.lambda_k[l];
  }
  return out;
}

std::vector<OrbitLabel> context_orbit(const Partition& p, const OrbitLabel& label,
                                      const std::optional<Partition>& context) {
  auto all = orbit_labels(p);
  if (!context) return all;
  auto image = coarsen_label(label, p, *context);
  std::vector<OrbitLabel> out;
  for (const auto& l : all)
    if (coarsen_label(l, p, *context) == image) out.push_back(l);
  return out;
}

IsolationWitness build_isolation(const Partition& p, const OrbitLabel& target, const std::optional<Partition>& context) {
  if (!is_valid_label(target, p))
    throw ArgumentError("label " + target.to_string() + " is not an orbit label of " + p.to_string());
  const int n = p.n();
  if (!context) {
    if (p.t() != 1) throw ArgumentError("the all-facets context needs the one-block partition");
    int rank = target.kind() == OrbitKind::A ? n : target.lambda_k[0] + 1;
    return {p, target, context, uniform(rank, n), IsolationCase::OneBlock};
  }
  if (!covers(*context, p)) throw ArgumentError(context->to_string() + " does not cover " + p.to_string());
  auto map = block_map(p, *context);
  int a = -1, b = -1;
  for (int x = 0; x < p.t() && b < 0; ++x)
    for (int y = x + 1; y < p.t(); ++y)
      if (map[x] == map[y]) {
        a = x;
        b = y;
        break;
      }
  const auto sizes = p.block_sizes();
  const auto& li = target.lambda_i;
  const auto& k = target.lambda_k;
  auto touched = target.blocks();
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  auto merged = [&](int l) { return l == a || l == b; };

  IsolationCase kind;
  std::function<Rational(const PartitionVector&)> value;
  if (std::all_of(touched.begin(), touched.end(), merged)) {
    kind = IsolationCase::N1;
    OrbitLabel sub{{li[a], li[b]}, {k[a], k[b]}};
    const int na = sizes[a], nb = sizes[b];
    value = [=](const PartitionVector& v) { return two_block_value(na, nb, sub, v[a], v[b]); };
  } else if (touched.size() == 2 && merged(touched[0]) != merged(touched[1])) {
    kind = IsolationCase::N2;
    int x = merged(touched[0]) ? touched[0] : touched[1];
    int d = merged(touched[0]) ? touched[1] : touched[0];
    const int r = k[x] + k[d] + 1;
    value = [=](const PartitionVector& v) { return std::min(r, v[x] + v[d]); };
  } else if (target.kind() == OrbitKind::A) {
    kind = IsolationCase::N3;
    const int d = touched[0];
    value = [=](const PartitionVector& v) { return v[d]; };
  } else if (target.kind() == OrbitKind::C) {
    kind = IsolationCase::N4;
    const int d = touched[0];
    const int r = k[a] + k[d] + 1;
    value = [=](const PartitionVector& v) { return std::min(r, v[a] + v[d]); };
  } else {
    kind = IsolationCase::N5;
    const int d1 = touched[0], d2 = touched[1];
    const int r = k[a] + k[d1] + k[d2] + 1;
    value = [=](const PartitionVector& v) { return std::min(r, v[a] + v[d1] + v[d2]); };
  }
  SymIndexSet idx(p);
  SymVector s(idx);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    auto t = idx.tuple_at(i);
    s.set(t, value(t));
  }
  return {p, target, context, from_sym(s), kind};
}

Verdict check_isolation(const IsolationWitness& iw) {
  Stopwatch w;
  Verdict v{"isolation"};
  v.params = {{"partition", iw.p.to_string()},
              {"target", iw.target.to_string()},
              {"context", iw.context ? iw.context->to_string() : std::string("all")},
              {"construction", to_string(iw.construction)}};
  if (auto bad = find_asymmetry(iw.h, iw.p)) {
    v.counterexample = "witness differs on " + subset_to_string(bad->first) + " and " + subset_to_string(bad->second);
    return finish(v, w);
  }
  SymIndexSet idx(iw.p);
  SymVector s = to_sym(iw.h, iw.p);
  auto cone = psi_p_hrep(iw.p);
  if (auto bad = cone.first_violation(s.coordinates())) {
    v.counterexample = "witness violates " + label_to_string(cone.rows()[*bad].label);
    return finish(v, w);
  }
  auto row_value = [&](const OrbitLabel& l) { return dot(label_row(l, idx), s.values()); };
  if (row_value(iw.target) <= 0) {
    v.counterexample = "target row " + iw.target.to_string() + " holds with equality";
    return finish(v, w);
  }
  for (const auto& l : context_orbit(iw.p, iw.target, iw.context)) {
    if (l == iw.target) continue;
    if (row_value(l) != 0) {
      v.counterexample = "row " + l.to_string() + " in the context orbit is strict";
      return finish(v, w);
    }
  }
  v.pass = true;
  return finish(v, w);
}

namespace {

std::vector<RatVector> generator_coordinates(int n, const Partition& p) {
  std::vector<RatVector> out;
  for (const auto& f : family_Un(n)) out.push_back(to_sym(f, p).coordinates());
  return out;
}

SubsetMask first_elements(int j) { return j == 0 ? 0 : (SubsetMask{1} << j) - 1; }

struct Lift {
  std::map<std::string, Rational> coef;  // keyed by FamilyTag::to_string()
};

Rational& slot(Lift& l, const FamilyTag& t) { return l.coef[t.to_string()]; }
Rational get(const Lift& l, const FamilyTag& t) {
  auto it = l.coef.find(t.to_string());
  return it == l.coef.end() ? Rational(0) : it->second;
}

FamilyTag ukm(int k, int m, int n) { return {FamilyTag::Kind::Ukm, {k, m, n}}; }

void inductive_lift(const SetFunction& h, int n, Decomposition1n& out) {
  using K = FamilyTag::Kind;
  Lift cur;
  {
    auto s = to_sym(restrict(h, first_elements(2)), Partition::consecutive({1, 1}));
    Rational x = s.at({1, 0}), y = s.at({0, 1}), z = s.at({1, 1});
    slot(cur, {K::U1Loop, {2}}) = z - y;
    slot(cur, ukm(1, 1, 2)) = z - x;
    slot(cur, ukm(1, 2, 2)) = x + y - z;
  }
  for (int nn = 2; nn < n; ++nn) {
    const auto p_next = Partition::consecutive({1, nn});
    const auto p_cur = Partition::consecutive({1, nn - 1});
    auto s = to_sym(restrict(h, first_elements(nn + 1)), p_next);
    DecompStep step;
    step.n = nn + 1;
    step.e1 = s.at({1, nn}) - s.at({1, nn - 1});
    step.e2 = s.at({0, nn}) - s.at({0, nn - 1}) - step.e1;

    const FamilyTag tag_a{K::U1Loop, {nn}};
    const FamilyTag tag_b = ukm(nn - 1, nn - 1, nn);
    std::vector<FamilyTag> tags_c;
    for (int m = nn; m <= 2 * nn - 2; ++m) tags_c.push_back(ukm(nn - 1, m, nn));

    for (const auto& t : family_Un_tags(nn)) {
      auto u = to_sym(t.build(), p_cur);
      auto at = [&](int j1, int j2) { return u.at({j1, j2}); };
      std::array<Rational, 3> l{at(1, nn - 1) - at(1, nn - 2), at(1, nn - 1) - at(0, nn - 1),
                                at(0, nn - 1) - at(0, nn - 2)};
      std::array<int, 3> want{0, 0, 0};
      if (t == tag_a)
        want = {0, 1, 0};
      else if (t == tag_b)
        want = {1, 0, 1};
      else if (std::find(tags_c.begin(), tags_c.end(), t) != tags_c.end())
        want = {0, 0, 1};
      for (int i = 0; i < 3; ++i)
        if (l[i] != want[i])
          out.discrepancies.push_back("class vector of " + t.to_string() + " is (" + to_string(l[0]) + "," +
                                      to_string(l[1]) + "," + to_string(l[2]) + ")");
    }

    step.a = get(cur, tag_a);
    step.b = get(cur, tag_b);
    Rational min_sum = 0;
    for (const auto& t : tags_c) {
      step.sum_c += get(cur, t);
      min_sum += std::min(get(cur, t), step.e2);
    }
    step.literal_conditions_hold = step.e1 == 0 && min_sum >= step.e2 && step.a >= step.e2;
    if (step.e1 < 0 || step.e2 < 0 || step.e1 > step.b || step.e2 > step.a)
      out.discrepancies.push_back("step " + std::to_string(nn + 1) + ": e1, e2 outside their bounds");

    // Smallest admissible Σc': keeps the U^{n+1}_{n-1,n} coefficient nonnegative.
    Rational need = std::max(Rational(0), step.e1 + step.e2 - step.b);
    if (need > step.sum_c) out.discrepancies.push_back("step " + std::to_string(nn + 1) + ": Σc exhausted");
    std::map<std::string, Rational> cprime;
    for (const auto& t : tags_c) {
      Rational take = std::min(get(cur, t), need);
      cprime[t.to_string()] = take;
      need -= take;
      step.sum_c_prime += take;
    }

    Lift next;
    auto add = [&](const FamilyTag& t, const Rational& c) {
      if (c < 0) out.discrepancies.push_back("negative coefficient on " + t.to_string());
      if (c != 0) slot(next, t) += c;
    };
    add({K::U1Loop, {nn + 1}}, step.a - step.e2);
    add(ukm(nn - 1, nn, nn + 1), step.b - step.e1 - step.e2 + step.sum_c_prime);
    add(ukm(nn, nn, nn + 1), step.e1);
    add(ukm(nn, nn + 1, nn + 1), step.e2 - step.sum_c_prime);
    for (const auto& t : tags_c) {
      const int m = t.params[1];
      add(ukm(nn - 1, m + 1, nn + 1), get(cur, t) - cprime[t.to_string()]);
      // u_A + U^n_{n-1,m} extends to U^{n+1}_{n,m+2}.
      add(ukm(nn, m + 2, nn + 1), cprime[t.to_string()]);
    }
    for (const auto& t : family_Un_tags(nn)) {
      if (t == tag_a || t == tag_b || std::find(tags_c.begin(), tags_c.end(), t) != tags_c.end()) continue;
      add(ukm(t.params[0], t.params[1] + 1, nn + 1), get(cur, t));
    }

    RatVector rebuilt(s.size());
    for (const auto& t : family_Un_tags(nn + 1)) {
      Rational c = get(next, t);
      if (c == 0) continue;
      auto u = to_sym(t.build(), p_next);
      for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i] += c * u[i];
    }
    if (rebuilt != s.values())
      out.discrepancies.push_back("step " + std::to_string(nn + 1) + ": lifted combination differs from the input");
    out.steps.push_back(step);
    cur = std::move(next);
  }
  out.coefficients.clear();
  for (const auto& t : out.generators) out.coefficients.push_back(get(cur, t));
}

}  // namespace

Decomposition1n decompose_1n(const SetFunction& h, int n, DecompStrategy strategy) {
  if (n < 2) throw ArgumentError("decompose_1n needs n >= 2");
  if (h.n() != n) throw ArgumentError("function lives on " + std::to_string(h.n()) + " elements, not " + std::to_string(n));
  const auto p = Partition::consecutive({1, n - 1});
  const RatVector v = to_sym(h, p).coordinates();
  Decomposition1n out;
  out.generators = family_Un_tags(n);
  const auto gens = generator_coordinates(n, p);
  auto lp = conic_decompose(v, gens);
  if (!lp.feasible) {
    out.certificate = std::move(lp.certificate);
    return out;
  }
  out.feasible = true;
  if (strategy == DecompStrategy::ConicLp) {
    out.coefficients = std::move(lp.coefficients);
    return out;
  }
  inductive_lift(h, n, out);
  RatVector rebuilt(v.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < v.size(); ++i) rebuilt[i] += out.coefficients[g] * gens[g][i];
  if (rebuilt != v) out.discrepancies.push_back("inductive coefficients do not reproduce the input");
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (out.coefficients[g] < 0) out.discrepancies.push_back("inductive coefficient on " + out.generators[g].to_string() + " is negative");
  return out;
}

SetFunction random_psi_1n1_point(int n, Rng& rng) {
  const auto p = Partition::consecutive({1, n - 1});
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return symmetrize(random_polymatroid(p.ground(), rng), p);
  auto members = family_Un(n);
  SetFunction h(p.ground());
  std::uniform_int_distribution<int> num(0, 4), den(1, 3);
  for (const auto& f : members)
    if (num(rng) > 1) h += Rational(num(rng), den(rng)) * f;
  return h;
}

namespace {

Verdict decompose_verdict(int n, std::size_t points, std::size_t outside, std::uint64_t seed) {
  Stopwatch w;
  Verdict v{"decompose"};
  v.params = {{"n", n}, {"points", points}, {"outside", outside}, {"seed", seed}};
  const auto p = Partition::consecutive({1, n - 1});
  const auto gens = generator_coordinates(n, p);
  Rng rng(seed);
  std::size_t inductive_notes = 0;
  for (std::size_t i = 0; i < points; ++i) {
    SetFunction h = random_psi_1n1_point(n, rng);
    auto d = decompose_1n(h, n);
    auto coords = to_sym(h, p).coordinates();
    RatVector rebuilt(coords.size());
    bool ok = d.feasible;
    for (std::size_t g = 0; ok && g < gens.size(); ++g) {
      if (d.coefficients[g] < 0) ok = false;
      for (std::size_t k = 0; k < coords.size(); ++k) rebuilt[k] += d.coefficients[g] * gens[g][k];
    }
    if (!ok || rebuilt != coords) {
      v.counterexample = "point " + std::to_string(i) + " " + vec_str(coords) + " was not reconstructed";
      return finish(v, w);
    }
    auto ind = decompose_1n(h, n, DecompStrategy::Inductive);
    inductive_notes += !ind.discrepancies.empty();
  }
  std::size_t found = 0;
  for (std::size_t tries = 0; found < outside && tries < 100 * outside; ++tries) {
    SetFunction h = random_symmetric(p, rng, tries % 2 ? SampleKind::Raw : SampleKind::Perturbed);
    auto coords = to_sym(h, p).coordinates();
    if (psi_p_hrep(p).contains(coords)) continue;
    ++found;
    auto d = decompose_1n(h, n);
    bool ok = !d.feasible && dot(d.certificate, coords) < 0;
    for (const auto& g : gens) ok = ok && dot(d.certificate, g) >= 0;
    if (!ok) {
      v.counterexample = "no valid certificate for " + vec_str(coords);
      return finish(v, w);
    }
  }
  v.pass = found == outside;
  if (!v.pass) v.counterexample = "only " + std::to_string(found) + " out-of-cone samples drawn";
  v.detail = "inductive lift reported discrepancies on " + std::to_string(inductive_notes) + " of " +
             std::to_string(points) + " points";
  return finish(v, w);
}

void isolation_verdicts(const Partition& p, std::vector<Verdict>& out) {
  std::vector<std::optional<Partition>> contexts;
  if (p.t() == 1) contexts.emplace_back(std::nullopt);
  for (int a = 0; a < p.t(); ++a)
    for (int b = a + 1; b < p.t(); ++b) {
      std::vector<SubsetMask> blocks;
      for (int l = 0; l < p.t(); ++l)
        if (l != b) blocks.push_back(l == a ? (p.block(a) | p.block(b)) : p.block(l));
      contexts.emplace_back(Partition(p.ground(), blocks));
    }
  for (const auto& c : contexts) {
    Stopwatch w;
    Verdict v{"isolation"};
    v.params = {{"partition", p.to_string()}, {"context", c ? c->to_string() : std::string("all")}};
    v.pass = true;
    std::map<std::string, int> cases;
    auto labels = orbit_labels(p);
    for (const auto& l : labels) {
      auto iw = build_isolation(p, l, c);
      ++cases[to_string(iw.construction)];
      auto r = check_isolation(iw);
      if (!r.pass) {
        v.pass = false;
        v.counterexample = l.to_string() + ": " + r.counterexample.value_or("");
        break;
      }
    }
    v.params["labels"] = labels.size();
    v.params["constructions"] = cases;
    out.push_back(finish(v, w));
  }
}

}  // namespace

std::vector<Verdict> run_suite(const SuiteOptions& o) {
  auto wants = [&](const std::string& c) { return !o.claim || *o.claim == c; };
  if (o.claim && std::find(kClaims.begin(), kClaims.end(), *o.claim) == kClaims.end())
    throw ArgumentError("unknown claim '" + *o.claim + "'");
  std::vector<Verdict> out;
  auto ns = [&](int lo, int hi) {
    std::vector<int> r;
    if (o.n) return std::vector<int>{*o.n};
    for (int n = lo; n <= hi; ++n) r.push_back(n);
    return r;
  };
  if (wants("psi_n") && !o.partition)
    for (int n : ns(2, 7)) out.push_back(verify_psi_n(n));
  if (wants("psi_1n1") && !o.partition)
    for (int n : ns(2, 5)) out.push_back(verify_psi_1n1(n));
  if (wants("facet_bijection")) {
    if (o.partition)
      out.push_back(verify_facet_bijection(*o.partition, 100, o.seed));
    else
      for (int n : ns(1, 6))
        for (const auto& p : canonical_representatives(n)) out.push_back(verify_facet_bijection(p, 100, o.seed));
  }
  if (wants("gap")) {
    if (o.partition) {
      out.push_back(verify_gap(*o.partition));
    } else if (!o.n) {
      for (const auto& shape : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}})
        out.push_back(verify_gap(Partition::consecutive(shape)));
    }
  }
  if (wants("isolation")) {
    if (o.partition) {
      isolation_verdicts(*o.partition, out);
    } else {
      for (int n : ns(1, 6))
        for (const auto& p : canonical_representatives(n))
          if (p.t() == 2 || n <= 5) isolation_verdicts(p, out);
    }
  }
  if (wants("decompose") && !o.partition)
    for (int n : ns(3, 5)) out.push_back(decompose_verdict(n, 100, 20, o.seed));
  return out;
}

}  // namespace symcone
