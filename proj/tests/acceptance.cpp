// One line per criterion: PASS/FAIL, id, name, elapsed vs budget, detail.

#include "oracles.hpp"
#include "symcone/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace symcone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

template <class F>
void criterion(int id, const std::string& name, double budget_s, F&& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= budget_s) o.fail("took " + std::to_string(s) + " s, budget " + std::to_string(budget_s) + " s; " + o.detail);
  failures += !o.pass;
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.3f s / %.0f s)", s, budget_s);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << name << "  " << buf << "  " << o.detail << std::endl;
}

std::vector<SetFunction> family_corpus(int max_n) {
  std::vector<SetFunction> out;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; m <= n; ++m) out.push_back(uniform(m, n));
  for (int n = 2; n <= max_n; ++n)
    for (const auto& f : family_Un(n)) out.push_back(f);
  for (int n1 = 2; n1 + 2 <= max_n; ++n1)
    for (int n2 = 2; n1 + n2 <= max_n; ++n2) out.push_back(gap_witness(n1, n2));
  return out;
}

std::vector<Partition> covering(const Partition& p) {
  std::vector<Partition> out;
  for (const auto& q : all_partitions(p.n()))
    if (covers(q, p)) out.push_back(q);
  return out;
}

}  // namespace

int main() {
  criterion(1, "facet counts n=1..8", 1, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      auto got = elemental_forms(GroundSet(n)).size();
      auto want = static_cast<std::size_t>(n + oracle::binom(n, 2) * (1LL << std::max(n - 2, 0)));
      if (got != want || elemental_count(n) != want) o.fail("n=" + std::to_string(n) + " gives " + std::to_string(got));
    }
    if (elemental_forms(GroundSet(4)).size() != 28) o.fail("n=4 is not 28");
    o.detail = o.pass ? "1 3 9 28 75 186 441 1016" : o.detail;
  });

  criterion(2, "orbit reduction, canonical p, n<=6", 30, [](Outcome& o) {
    std::size_t shapes = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : canonical_representatives(n)) {
        ++shapes;
        const auto name = p.to_string();
        const auto want = orbit_count_formula(p);
        auto rep = facet_reduction_check(p, 0);
        if (!rep.ok) o.fail(name + ": " + rep.detail);
        if (rep.distinct_rows != want) o.fail(name + ": " + std::to_string(rep.distinct_rows) + " distinct rows");
        std::set<OrbitLabel> direct;
        for (const auto& [id, form] : elemental_forms(p.ground())) direct.insert(facet_orbit_label(id, p));
        auto listed = orbit_labels(p);
        if (direct.size() != want || std::set<OrbitLabel>(listed.begin(), listed.end()) != direct ||
            oracle::facet_label_set(p).size() != want)
          o.fail(name + ": direct labeling disagrees");
        if (p.t() == 1 && want != static_cast<std::size_t>(n)) o.fail(name + ": one block count");
        if (p.t() == n && want != elemental_count(n)) o.fail(name + ": singleton count");
      }
    if (orbit_count_formula(Partition::parse("[2,2]")) != 12) o.fail("[2,2] is not 12");
    if (o.pass) o.detail = std::to_string(shapes) + " partitions";
  });

  criterion(3, "symmetrize vs permutation average, n<=5", 30, [](Outcome& o) {
    Rng rng(3);
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : canonical_representatives(n))
        for (int i = 0; i < 50; ++i) {
          auto h = oracle::random_rational_function(p.ground(), rng);
          if (symmetrize(h, p) != oracle::permutation_average(h, p)) o.fail(p.to_string() + " sample " + std::to_string(i));
          ++checked;
        }
    if (o.pass) o.detail = std::to_string(checked) + " functions";
  });

  criterion(4, "extreme rays of Psi_n, n=2..7", 10, [](Outcome& o) {
    for (int n = 2; n <= 7; ++n) {
      auto v = verify_psi_n(n);
      if (!v.pass) o.fail("n=" + std::to_string(n) + ": " + v.counterexample.value_or(""));
      auto rays = extreme_rays(psi_p_hrep(Partition::whole(n)));
      if (rays.size() != static_cast<std::size_t>(n)) o.fail("n=" + std::to_string(n) + ": " + std::to_string(rays.size()) + " rays");
    }
  });

  criterion(5, "extreme rays of Psi_{1,n-1}, n=2..5", 60, [](Outcome& o) {
    const std::map<int, std::size_t> want{{2, 3}, {3, 6}, {4, 10}, {5, 15}};
    std::string counts;
    for (auto [n, k] : want) {
      auto v = verify_psi_1n1(n);
      if (!v.pass) o.fail("n=" + std::to_string(n) + ": " + v.counterexample.value_or(""));
      auto rays = extreme_rays(psi_p_hrep(Partition::consecutive({1, n - 1})));
      if (rays.size() != k || family_Un_tags(n).size() != k) o.fail("n=" + std::to_string(n) + ": " + std::to_string(rays.size()) + " rays");
      counts += std::to_string(rays.size()) + " ";
    }
    if (o.pass) o.detail = "counts " + counts;
  });

  criterion(6, "gap witnesses", 5, [](Outcome& o) {
    for (const auto* s : {"[2,2]", "[2,3]", "[3,3]", "[1,1,2]", "[1,2,2]", "[2,2,2]"}) {
      auto v = verify_gap(Partition::parse(s));
      if (!v.pass || v.detail != "Zhang-Yeung value -1") o.fail(std::string(s) + ": " + v.detail + " " + v.counterexample.value_or(""));
    }
    for (auto [n1, n2] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
      auto h = gap_witness(n1, n2);
      auto p = Partition::consecutive({n1, n2});
      if (!is_polymatroid(h) || !psi_p_hrep(p).contains(to_sym(h, p).coordinates()))
        o.fail(p.to_string() + ": witness outside the cone");
    }
  });

  criterion(7, "free expansion and factor", 10, [](Outcome& o) {
    auto corpus = family_corpus(4);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& h = corpus[i];
      auto phi = ExpansionMap::canonical(h);
      auto g = free_expansion(h, phi);
      if (!is_matroid(g) || factor(g, phi) != h) o.fail("corpus member " + std::to_string(i));
    }
    auto h = gap_witness(2, 2);
    auto phi = ExpansionMap::canonical(h);
    auto g = free_expansion(h, phi);
    std::vector<std::vector<int>> images;
    for (int i = 1; i <= phi.source_size(); ++i) images.push_back(elements_of(phi.image(i)));
    if (g.n() != 8 || !is_matroid(g) || g(g.ground().full()) != 4) o.fail("expanded gap witness is not a rank 4 matroid on 8");
    if (g != oracle::free_expansion_brute(h, images, 8)) o.fail("expansion differs from brute force");
    for (SubsetMask a = 0; a < 256; ++a)
      if (g(a) != oracle::vamos_rank(a)) o.fail("rank of " + subset_to_string(a));
    if (o.pass) o.detail = std::to_string(corpus.size()) + " corpus members";
  });

  criterion(8, "isolation witnesses", 60, [](Outcome& o) {
    std::map<IsolationCase, std::size_t> seen;
    std::size_t witnesses = 0;
    auto run = [&](const Partition& p, const std::optional<Partition>& c) {
      for (const auto& l : orbit_labels(p)) {
        auto w = build_isolation(p, l, c);
        ++seen[w.construction];
        ++witnesses;
        auto v = check_isolation(w);
        if (!v.pass)
          o.fail(p.to_string() + " in " + (c ? c->to_string() : "all") + " " + l.to_string() + ": " + v.counterexample.value_or(""));
      }
    };
    for (int n = 2; n <= 6; ++n)
      for (const auto& p : canonical_representatives(n))
        if (p.t() == 2) run(p, Partition::whole(n));
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : canonical_representatives(n)) {
        if (p.t() == 1) run(p, std::nullopt);
        for (const auto& q : covering(p)) run(p, q);
      }
    for (auto c : {IsolationCase::N1, IsolationCase::N2, IsolationCase::N3, IsolationCase::N4, IsolationCase::N5})
      if (!seen.count(c)) o.fail("case " + to_string(c) + " never used");
    if (o.pass) {
      std::ostringstream d;
      d << witnesses << " witnesses;";
      for (auto [c, k] : seen) d << " " << to_string(c) << "=" << k;
      o.detail = d.str();
    }
  });

  criterion(9, "decomposition over U_n, n=3..5", 60, [](Outcome& o) {
    Rng rng(9);
    std::size_t inside = 0, certificates = 0;
    for (int n = 3; n <= 5; ++n) {
      const auto p = Partition::consecutive({1, n - 1});
      std::vector<RatVector> gens;
      for (const auto& f : family_Un(n)) gens.push_back(to_sym(f, p).coordinates());
      for (int i = 0; i < 100; ++i) {
        auto h = random_psi_1n1_point(n, rng);
        if (!is_polymatroid(h)) o.fail("n=" + std::to_string(n) + ": sampled point is not a polymatroid");
        auto coords = to_sym(h, p).coordinates();
        for (auto strategy : {DecompStrategy::ConicLp, DecompStrategy::Inductive}) {
          auto d = decompose_1n(h, n, strategy);
          RatVector rebuilt(coords.size());
          bool ok = d.feasible && d.coefficients.size() == gens.size() && d.discrepancies.empty();
          for (std::size_t g = 0; ok && g < gens.size(); ++g) {
            ok = d.coefficients[g] >= 0;
            for (std::size_t k = 0; k < coords.size(); ++k) rebuilt[k] += d.coefficients[g] * gens[g][k];
          }
          if (!ok || rebuilt != coords)
            o.fail("n=" + std::to_string(n) + " point " + std::to_string(i) +
                   (strategy == DecompStrategy::Inductive ? " (inductive)" : " (lp)"));
        }
        ++inside;
      }
      const auto cone = psi_p_hrep(p);
      int found = 0;
      for (std::size_t tries = 0; found < 20 && tries < 2000; ++tries) {
        auto h = random_symmetric(p, rng, tries % 2 ? SampleKind::Raw : SampleKind::Perturbed);
        auto coords = to_sym(h, p).coordinates();
        if (cone.contains(coords) || is_polymatroid(h)) continue;
        ++found;
        auto d = decompose_1n(h, n);
        bool ok = !d.feasible && dot(d.certificate, coords) < 0;
        for (const auto& g : gens) ok = ok && dot(d.certificate, g) >= 0;
        if (!ok) o.fail("n=" + std::to_string(n) + ": bad certificate");
      }
      if (found < 20) o.fail("n=" + std::to_string(n) + ": only " + std::to_string(found) + " outside points");
      certificates += found;
    }
    if (o.pass) o.detail = std::to_string(inside) + " decompositions, " + std::to_string(certificates) + " certificates";
  });

  criterion(10, "membership equivalence, n<=6", 30, [](Outcome& o) {
    Rng rng(10);
    std::size_t in = 0, total = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : canonical_representatives(n)) {
        const auto cone = psi_p_hrep(p);
        for (std::size_t i = 0; i < 100; ++i) {
          auto h = random_symmetric(p, rng, i);
          bool reduced = cone.contains(to_sym(h, p).coordinates());
          bool full = is_polymatroid(h);
          if (reduced != full) o.fail(p.to_string() + " sample " + std::to_string(i));
          in += reduced;
          ++total;
        }
      }
    if (in == 0 || in == total) o.fail("samples fall on one side only");
    if (o.pass) o.detail = std::to_string(total) + " samples, " + std::to_string(in) + " members";
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
