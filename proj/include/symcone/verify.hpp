#pragma once

#include "symcone/cone.hpp"
#include "symcone/families.hpp"
#include "symcone/sampling.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symcone {

struct Verdict {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  std::optional<std::string> counterexample;
  std::string detail;
  double wall_time_ms = 0;

  nlohmann::json to_json() const;
};

// Set equality of DD output with the normalized expected vectors.
Verdict compare_ray_sets(const std::string& claim, const HCone& cone, const std::vector<RatVector>& expected,
                         int max_dim = kDefaultMaxDim);

Verdict verify_psi_n(int n);
Verdict verify_psi_1n1(int n);
Verdict verify_facet_bijection(const Partition& p, std::size_t samples = 100, std::uint64_t seed = 0);
Verdict verify_gap(const Partition& p);

enum class IsolationCase { OneBlock, N1, N2, N3, N4, N5 };
std::string to_string(IsolationCase c);

struct IsolationWitness {
  Partition p;
  OrbitLabel target;
  std::optional<Partition> context;  // empty: every facet in one orbit
  SetFunction h;
  IsolationCase construction;
};

// Labels of p whose image in the context partition equals that of label.
std::vector<OrbitLabel> context_orbit(const Partition& p, const OrbitLabel& label,
                                      const std::optional<Partition>& context);
OrbitLabel coarsen_label(const OrbitLabel& label, const Partition& p, const Partition& coarser);

IsolationWitness build_isolation(const Partition& p, const OrbitLabel& target, const std::optional<Partition>& context);
Verdict check_isolation(const IsolationWitness& w);

enum class DecompStrategy { ConicLp, Inductive };

struct DecompStep {
  int n = 0;  // lifting from [1,n-1] to [1,n]
  Rational e1, e2;
  Rational a, b, sum_c, sum_c_prime;
  // Whether Σc' >= e1+e2 together with nonnegative coefficients was satisfiable.
  bool literal_conditions_hold = false;
};

struct Decomposition1n {
  bool feasible = false;
  std::vector<FamilyTag> generators;  // family_Un_tags(n)
  RatVector coefficients;
  RatVector certificate;  // over the [1,n-1] coordinates when infeasible
  std::vector<DecompStep> steps;
  std::vector<std::string> discrepancies;
};

Decomposition1n decompose_1n(const SetFunction& h, int n, DecompStrategy strategy = DecompStrategy::ConicLp);

// Nonnegative rational combination of family_Un(n) members, or a symmetrized polymatroid.
SetFunction random_psi_1n1_point(int n, Rng& rng);

inline const std::vector<std::string> kClaims = {"psi_n", "psi_1n1", "facet_bijection", "gap", "isolation", "decompose"};

struct SuiteOptions {
  std::optional<std::string> claim;
  std::optional<int> n;
  std::optional<Partition> partition;
  std::uint64_t seed = 0;
};

std::vector<Verdict> run_suite(const SuiteOptions& options);

}  // namespace symcone
