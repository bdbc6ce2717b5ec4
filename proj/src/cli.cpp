#include "symcone/cli.hpp"

#include "symcone/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symcone::cli {

namespace {

using nlohmann::json;

// Raised for bad invocations that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Globals {
  std::optional<int> n;
  std::optional<std::string> partition;
  std::string format;
  std::uint64_t seed = 0;
  int max_dim = kDefaultMaxDim;
};

Format format_of(const Globals& g, Format fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "text") return Format::Text;
  if (g.format == "json") return Format::Json;
  return Format::Csv;
}

Partition resolve_partition(const Globals& g) {
  if (g.partition) {
    auto p = Partition::parse(*g.partition);
    if (g.n && *g.n != p.n())
      throw UsageError("--n " + std::to_string(*g.n) + " disagrees with partition on " + std::to_string(p.n()) +
                       " elements");
    return p;
  }
  if (!g.n) throw UsageError("give --n or --partition");
  if (*g.n < 1) throw UsageError("--n must be positive");
  return Partition::singletons(*g.n);
}

int resolve_max_dim(const Globals& g) {
  if (const char* env = std::getenv("SYMCONE_MAX_DIM")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SYMCONE_MAX_DIM is not an integer: ") + env);
    }
  }
  return g.max_dim;
}

json function_to_json(const SetFunction& f) {
  json a = json::array();
  for (const auto& v : f.values()) a.push_back(to_string(v));
  return a;
}

SetFunction function_from_json(const json& j) {
  if (!j.is_array()) throw ArgumentError("set function JSON must be an array indexed by mask");
  RatVector values;
  for (const auto& e : j) {
    if (e.is_number_integer())
      values.emplace_back(e.get<long long>());
    else if (e.is_string())
      values.push_back(parse_rational(e.get<std::string>()));
    else
      throw ArgumentError("set function values must be integers or \"p/q\" strings");
  }
  int n = 0;
  while ((std::size_t{1} << n) < values.size()) ++n;
  if ((std::size_t{1} << n) != values.size()) throw ArgumentError("set function JSON needs 2^n entries");
  return SetFunction(GroundSet(n), std::move(values));
}

SetFunction read_function(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    in = &file;
  }
  std::stringstream buf;
  buf << in->rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return function_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ArgumentError(std::string("bad JSON: ") + e.what());
    }
  }
  std::istringstream ss(text);
  return read_text(ss);
}

void print_function(std::ostream& out, const SetFunction& f, Format fmt) {
  if (fmt == Format::Json) {
    out << function_to_json(f).dump() << '\n';
  } else if (fmt == Format::Csv) {
    out << "mask,value\n";
    for (SubsetMask a = 0; a <= f.ground().full(); ++a) out << a << ',' << to_string(f(a)) << '\n';
  } else {
    write_text(out, f);
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::string> coordinate_names(const SymIndexSet& idx) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < idx.size(); ++i) out.push_back(join_ints(idx.tuple_at(i)));
  return out;
}

json int_array(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.is_zero() || (x > -(Integer(1) << 62) && x < (Integer(1) << 62)))
      a.push_back(x.convert_to<long long>());
    else
      a.push_back(x.str());
  }
  return a;
}

json rat_array(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

int cmd_facets(const Globals& g, std::ostream& out) {
  auto p = resolve_partition(g);
  auto cone = psi_p_hrep(p);
  SymIndexSet idx(p);
  switch (format_of(g, Format::Text)) {
    case Format::Text:
      out << cone.dim() << ' ' << p.t() << ' ' << cone.size() << '\n';
      for (const auto& r : cone.rows()) {
        out << label_to_string(r.label) << ':';
        for (const auto& c : r.coeffs) out << ' ' << c;
        out << '\n';
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& r : cone.rows()) rows.push_back({{"label", label_to_string(r.label)}, {"coeffs", int_array(r.coeffs)}});
      out << json{{"partition", p.to_string()},
                  {"dim", cone.dim()},
                  {"t", p.t()},
                  {"coordinates", coordinate_names(idx)},
                  {"rows", rows}}
                 .dump()
          << '\n';
      break;
    }
    case Format::Csv:
      out << "label";
      for (const auto& name : coordinate_names(idx)) out << ",\"" << name << '"';
      out << '\n';
      for (const auto& r : cone.rows()) {
        out << '"' << label_to_string(r.label) << '"';
        for (const auto& c : r.coeffs) out << ',' << c;
        out << '\n';
      }
      break;
  }
  return 0;
}

int cmd_orbits(const Globals& g, std::ostream& out) {
  auto p = resolve_partition(g);
  auto labels = orbit_labels(p);
  std::map<std::string, std::size_t> counts;
  for (const auto& [id, form] : elemental_forms(p.ground())) ++counts[facet_orbit_label(id, p).to_string()];
  switch (format_of(g, Format::Text)) {
    case Format::Text:
      for (const auto& l : labels) out << l.to_string() << ' ' << counts[l.to_string()] << '\n';
      break;
    case Format::Json: {
      json a = json::array();
      for (const auto& l : labels) a.push_back({{"label", l.to_string()}, {"facets", counts[l.to_string()]}});
      out << json{{"partition", p.to_string()}, {"count", labels.size()}, {"orbits", a}}.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "label,facets\n";
      for (const auto& l : labels) out << '"' << l.to_string() << "\"," << counts[l.to_string()] << '\n';
      break;
  }
  return 0;
}

int cmd_project(const Globals& g, const std::string& path, std::ostream& out) {
  auto h = read_function(path);
  Globals gg = g;
  if (!gg.n) gg.n = h.n();
  auto p = resolve_partition(gg);
  if (p.n() != h.n()) throw UsageError("partition and function have different ground sets");
  auto s = symmetrize(h, p);
  auto v = to_sym(s, p);
  const auto& idx = v.index();
  switch (format_of(g, Format::Text)) {
    case Format::Text:
      out << "# symmetrized\n";
      write_text(out, s);
      out << "# s-vector\n";
      for (std::size_t i = 0; i < idx.size(); ++i) out << join_ints(idx.tuple_at(i)) << ' ' << to_string(v[i]) << '\n';
      break;
    case Format::Json: {
      json sv = json::array();
      for (std::size_t i = 0; i < idx.size(); ++i) sv.push_back({{"k", idx.tuple_at(i)}, {"value", to_string(v[i])}});
      out << json{{"partition", p.to_string()}, {"symmetrized", function_to_json(s)}, {"s", sv}}.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "k,value\n";
      for (std::size_t i = 0; i < idx.size(); ++i)
        out << '"' << join_ints(idx.tuple_at(i)) << "\"," << to_string(v[i]) << '\n';
      break;
  }
  return 0;
}

int cmd_rays(const Globals& g, std::ostream& out) {
  auto p = resolve_partition(g);
  auto cone = psi_p_hrep(p);
  auto rays = extreme_rays(cone, resolve_max_dim(g));
  auto tight_labels = [&](const Ray& r) {
    std::vector<std::string> out;
    for (auto i : cone.tight_rows(r.as_rational())) out.push_back(label_to_string(cone.rows()[i].label));
    return out;
  };
  switch (format_of(g, Format::Text)) {
    case Format::Text:
      for (const auto& r : rays) {
        for (std::size_t i = 0; i < r.direction.size(); ++i) out << (i ? " " : "") << r.direction[i];
        out << " |";
        for (const auto& l : tight_labels(r)) out << ' ' << l;
        out << '\n';
      }
      break;
    case Format::Json: {
      json a = json::array();
      for (const auto& r : rays) a.push_back({{"direction", int_array(r.direction)}, {"tight", tight_labels(r)}});
      out << json{{"partition", p.to_string()},
                  {"dim", cone.dim()},
                  {"coordinates", coordinate_names(SymIndexSet(p))},
                  {"rays", a}}
                 .dump()
          << '\n';
      break;
    }
    case Format::Csv:
      for (const auto& r : rays) {
        for (std::size_t i = 0; i < r.direction.size(); ++i) out << (i ? "," : "") << r.direction[i];
        std::string t;
        for (const auto& l : tight_labels(r)) t += (t.empty() ? "" : ";") + l;
        out << ",\"" << t << "\"\n";
      }
      break;
  }
  return 0;
}

struct CheckFlags {
  std::string function;
  bool polymatroid = false, matroid = false, zy = false, member = false;
  std::string roles;
};

int cmd_check(const Globals& g, const CheckFlags& f, std::ostream& out) {
  auto h = read_function(f.function);
  bool poly = f.polymatroid, mat = f.matroid, zy = f.zy, member = f.member;
  if (!poly && !mat && !zy && !member) {
    poly = true;
    member = g.partition.has_value();
  }
  json report = json::object();
  std::vector<std::string> lines;
  bool ok = true;
  if (poly) {
    auto r = check_polymatroid(h);
    ok = ok && r.ok;
    json j{{"pass", r.ok}};
    std::string line = std::string("polymatroid: ") + (r.ok ? "yes" : "no");
    if (r.violated) {
      j["violated"] = r.violated->to_string();
      line += " (violates " + r.violated->to_string() + ")";
    }
    if (r.nonzero_empty) line += " (nonzero on the empty set)";
    report["polymatroid"] = j;
    lines.push_back(line);
  }
  if (mat) {
    bool r = is_matroid(h);
    ok = ok && r;
    report["matroid"] = {{"pass", r}};
    lines.push_back(std::string("matroid: ") + (r ? "yes" : "no"));
  }
  if (zy) {
    if (h.n() < 4) throw UsageError("the Zhang-Yeung check needs at least 4 elements");
    std::optional<Rational> best;
    std::array<int, 4> best_roles{};
    auto consider = [&](std::array<int, 4> r) {
      Rational v = zhang_yeung_form(h.ground(), r).evaluate(h);
      if (!best || v < *best) {
        best = v;
        best_roles = r;
      }
    };
    if (!f.roles.empty()) {
      std::vector<int> r;
      std::stringstream ss(f.roles);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          r.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw UsageError("--roles takes four comma-separated elements");
        }
      }
      if (r.size() != 4) throw UsageError("--roles takes four comma-separated elements");
      consider({r[0], r[1], r[2], r[3]});
    } else {
      for (int a = 1; a <= h.n(); ++a)
        for (int b = 1; b <= h.n(); ++b)
          for (int c = 1; c <= h.n(); ++c)
            for (int d = 1; d <= h.n(); ++d)
              if (cardinality(element_bit(a) | element_bit(b) | element_bit(c) | element_bit(d)) == 4)
                consider({a, b, c, d});
    }
    bool pass = *best >= 0;
    ok = ok && pass;
    std::vector<int> rv(best_roles.begin(), best_roles.end());
    report["zhang_yeung"] = {{"pass", pass}, {"value", to_string(*best)}, {"roles", rv}};
    lines.push_back("zhang-yeung: " + to_string(*best) + " at roles " + join_ints(rv));
  }
  if (member) {
    auto p = resolve_partition(g);
    if (p.n() != h.n()) throw UsageError("partition and function have different ground sets");
    json j;
    std::string line = "member " + p.to_string() + ": ";
    if (auto bad = find_asymmetry(h, p)) {
      ok = false;
      j = {{"pass", false}, {"reason", "not symmetric on " + subset_to_string(bad->first) + ", " + subset_to_string(bad->second)}};
      line += "no (not symmetric)";
    } else {
      auto cone = psi_p_hrep(p);
      auto viol = cone.first_violation(to_sym(h, p).coordinates());
      ok = ok && !viol;
      j = {{"pass", !viol}};
      line += viol ? "no" : "yes";
      if (viol) {
        j["violated"] = label_to_string(cone.rows()[*viol].label);
        line += " (violates " + label_to_string(cone.rows()[*viol].label) + ")";
      }
    }
    report["member"] = j;
    lines.push_back(line);
  }
  if (format_of(g, Format::Text) == Format::Json) {
    report["pass"] = ok;
    out << report.dump() << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const Globals& g, const std::string& path, const std::string& strategy, std::ostream& out) {
  auto h = read_function(path);
  Globals gg = g;
  if (!gg.n) gg.n = h.n();
  std::optional<Partition> p;
  if (gg.partition) p = resolve_partition(gg);
  const int n = h.n();
  const bool one_n = !p || (n >= 2 && p->block_sizes() == std::vector<int>{1, n - 1});
  if (strategy != "lp" && strategy != "inductive") throw UsageError("--strategy is lp or inductive");
  if (strategy == "inductive" && !one_n) throw UsageError("the inductive strategy needs the partition [1,n-1]");

  std::vector<std::string> names;
  RatVector coefficients, certificate;
  std::vector<std::string> notes;
  std::vector<DecompStep> steps;
  bool feasible;
  if (one_n) {
    if (n < 2) throw UsageError("decompose needs at least 2 elements");
    auto d = decompose_1n(h, n, strategy == "inductive" ? DecompStrategy::Inductive : DecompStrategy::ConicLp);
    for (const auto& t : d.generators) names.push_back(t.to_string());
    feasible = d.feasible;
    coefficients = d.coefficients;
    certificate = d.certificate;
    notes = d.discrepancies;
    steps = d.steps;
  } else {
    auto rays = extreme_rays(psi_p_hrep(*p), resolve_max_dim(gg));
    std::vector<RatVector> gens;
    for (const auto& r : rays) {
      gens.push_back(r.as_rational());
      std::string s;
      for (std::size_t i = 0; i < r.direction.size(); ++i) s += (i ? "," : "") + r.direction[i].str();
      names.push_back("(" + s + ")");
    }
    auto d = conic_decompose(to_sym(h, *p).coordinates(), gens);
    feasible = d.feasible;
    coefficients = d.coefficients;
    certificate = d.certificate;
  }
  if (format_of(g, Format::Text) == Format::Json) {
    json j{{"feasible", feasible}};
    if (feasible) {
      json c = json::array();
      for (std::size_t i = 0; i < names.size(); ++i) c.push_back({{"generator", names[i]}, {"coefficient", to_string(coefficients[i])}});
      j["coefficients"] = c;
    } else {
      j["certificate"] = rat_array(certificate);
    }
    if (!notes.empty()) j["notes"] = notes;
    if (!steps.empty()) {
      json js = json::array();
      for (const auto& st : steps)
        js.push_back({{"n", st.n}, {"e1", to_string(st.e1)}, {"e2", to_string(st.e2)},
                      {"sum_c_prime", to_string(st.sum_c_prime)}, {"literal_conditions_hold", st.literal_conditions_hold}});
      j["steps"] = js;
    }
    out << j.dump() << '\n';
  } else {
    for (const auto& note : notes) out << "# note: " << note << '\n';
    for (const auto& st : steps)
      out << "# step " << st.n << ": e1=" << to_string(st.e1) << " e2=" << to_string(st.e2)
          << " sum_c'=" << to_string(st.sum_c_prime) << (st.literal_conditions_hold ? "" : " (literal side conditions fail)") << '\n';
    if (feasible) {
      for (std::size_t i = 0; i < names.size(); ++i) out << names[i] << ' ' << to_string(coefficients[i]) << '\n';
    } else {
      out << "outside the cone; certificate:";
      for (const auto& c : certificate) out << ' ' << to_string(c);
      out << '\n';
    }
  }
  return feasible ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& claim, std::ostream& out) {
  SuiteOptions o;
  if (!claim.empty()) o.claim = claim;
  o.n = g.n;
  if (g.partition) o.partition = resolve_partition(g);
  o.seed = g.seed;
  auto verdicts = run_suite(o);
  bool ok = true;
  for (const auto& v : verdicts) ok = ok && v.pass;
  switch (format_of(g, Format::Json)) {
    case Format::Json: {
      json a = json::array();
      for (const auto& v : verdicts) a.push_back(v.to_json());
      out << a.dump(1) << '\n';
      break;
    }
    case Format::Text:
      for (const auto& v : verdicts) {
        out << (v.pass ? "PASS " : "FAIL ") << v.claim << ' ' << v.params.dump();
        if (v.counterexample) out << " counterexample: " << *v.counterexample;
        out << '\n';
      }
      break;
    case Format::Csv:
      out << "claim,params,pass,counterexample\n";
      for (const auto& v : verdicts) {
        std::string params = v.params.dump();
        std::replace(params.begin(), params.end(), '"', '\'');
        out << v.claim << ",\"" << params << "\"," << (v.pass ? "true" : "false") << ",\""
            << v.counterexample.value_or("") << "\"\n";
      }
      break;
  }
  return ok ? 0 : 1;
}

int cmd_family(const Globals& g, const std::string& tag, std::ostream& out) {
  auto f = FamilyTag::parse(tag).build();
  if (g.n && *g.n != f.n()) throw UsageError("--n disagrees with the family's ground set");
  print_function(out, f, format_of(g, Format::Text));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on partition-symmetric polymatroid cones", "symcone"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "ground set size");
  app.add_option("--partition", g.partition, "partition literal such as 1,2|3,4 or [2,2]");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--max-dim", g.max_dim, "largest cone dimension handed to the ray enumerator")->capture_default_str();

  auto* facets = app.add_subcommand("facets", "print the reduced H-representation");
  auto* orbits = app.add_subcommand("orbits", "print orbit labels with their facet counts");
  std::string function_path, strategy = "lp", claim, tag;
  auto* project = app.add_subcommand("project", "symmetrize a set function and print its s-vector");
  project->add_option("--function", function_path, "set function file, '-' for stdin")->required();
  auto* rays = app.add_subcommand("rays", "print extreme rays with their tight facets");
  CheckFlags cf;
  auto* check = app.add_subcommand("check", "test a set function");
  check->add_option("--function", cf.function, "set function file, '-' for stdin")->required();
  check->add_flag("--polymatroid", cf.polymatroid);
  check->add_flag("--matroid", cf.matroid);
  check->add_flag("--zy", cf.zy, "Zhang-Yeung inequality, minimized over role assignments");
  check->add_option("--roles", cf.roles, "fixed Zhang-Yeung roles a,b,c,d");
  check->add_flag("--member", cf.member, "membership in the reduced cone of --partition");
  auto* decompose = app.add_subcommand("decompose", "write a function as a conic combination of extreme rays");
  decompose->add_option("--function", function_path, "set function file, '-' for stdin")->required();
  decompose->add_option("--strategy", strategy, "lp or inductive")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--claim", claim, "restrict to one claim")->check(CLI::IsMember(kClaims));
  auto* family = app.add_subcommand("family", "print a named set function");
  family->add_option("tag", tag, "uniform:m,n | ukm:k,m,n | u1loop:n | gap:n1,n2")->required();
  for (auto* sub : {facets, orbits, project, rays, check, decompose, verify, family}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*facets) return cmd_facets(g, out);
    if (*orbits) return cmd_orbits(g, out);
    if (*project) return cmd_project(g, function_path, out);
    if (*rays) return cmd_rays(g, out);
    if (*check) return cmd_check(g, cf, out);
    if (*decompose) return cmd_decompose(g, function_path, strategy, out);
    if (*verify) return cmd_verify(g, claim, out);
    if (*family) return cmd_family(g, tag, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace symcone::cli
