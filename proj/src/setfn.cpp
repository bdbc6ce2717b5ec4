#include "symcone/setfn.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace symcone {

std::vector<int> elements_of(SubsetMask a) {
  std::vector<int> out;
  for (int i = 1; a != 0; ++i, a >>= 1)
    if (a & 1) out.push_back(i);
  return out;
}

std::string subset_to_string(SubsetMask a) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(a)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 0) throw ArgumentError("ground set size must be nonnegative");
  if (n > kDenseCap)
    throw UnsupportedError("ground set size " + std::to_string(n) + " exceeds the dense cap of " +
                           std::to_string(kDenseCap));
}

SetFunction::SetFunction(GroundSet ground) : ground_(ground), values_(ground.subset_count()) {}

SetFunction::SetFunction(GroundSet ground, RatVector values) : ground_(ground), values_(std::move(values)) {
  if (values_.size() != ground_.subset_count())
    throw ArgumentError("expected " + std::to_string(ground_.subset_count()) + " values, got " +
                        std::to_string(values_.size()));
  if (values_[0] != 0) throw ArgumentError("value on the empty set must be 0");
}

void SetFunction::set(SubsetMask a, Rational v) {
  if (!ground_.contains(a)) throw ArgumentError("subset outside the ground set");
  if (a == 0 && v != 0) throw ArgumentError("value on the empty set must be 0");
  values_[a] = std::move(v);
}

bool SetFunction::is_integral() const {
  for (const auto& v : values_)
    if (denominator(v) != 1) return false;
  return true;
}

SetFunction& SetFunction::operator+=(const SetFunction& o) {
  if (!(ground_ == o.ground_)) throw ArgumentError("ground set mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

SetFunction operator*(const Rational& c, SetFunction f) {
  for (auto& v : f.values_) v *= c;
  return f;
}

LinearForm::LinearForm(GroundSet ground, Sense sense) : ground_(ground), sense_(sense) {}

void LinearForm::add(SubsetMask a, const Rational& c) {
  if (!ground_.contains(a)) throw ArgumentError("subset outside the ground set");
  if (a == 0) return;  // h(empty) == 0 on every admissible function
  auto& slot = coeffs_[a];
  slot += c;
  if (slot == 0) coeffs_.erase(a);
}

Rational LinearForm::evaluate(const SetFunction& f) const {
  if (!(f.ground() == ground_)) throw ArgumentError("ground set mismatch");
  Rational s = 0;
  for (const auto& [a, c] : coeffs_) s += c * f(a);
  return s;
}

bool LinearForm::satisfied_by(const SetFunction& f) const {
  Rational v = evaluate(f);
  return sense_ == Sense::Equal ? v == 0 : v >= 0;
}

std::string FacetId::to_string() const {
  auto e = elements_of(pair);
  if (monotone) return "E(" + std::to_string(e.at(0)) + ")";
  return "E(" + std::to_string(e.at(0)) + std::to_string(e.at(1)) + "," + subset_to_string(k) + ")";
}

LinearForm elemental_form(const GroundSet& ground, const FacetId& id) {
  LinearForm f(ground);
  if (id.monotone) {
    if (cardinality(id.pair) != 1 || !ground.contains(id.pair)) throw ArgumentError("bad E(i) id");
    f.add(ground.full(), 1);
    f.add(ground.full() & ~id.pair, -1);
    return f;
  }
  if (cardinality(id.pair) != 2 || (id.pair & id.k) != 0 || !ground.contains(id.pair | id.k))
    throw ArgumentError("bad E(ij,K) id");
  auto e = elements_of(id.pair);
  f.add(id.k | element_bit(e[0]), 1);
  f.add(id.k | element_bit(e[1]), 1);
  f.add(id.k, -1);
  f.add(id.k | id.pair, -1);
  return f;
}

std::vector<std::pair<FacetId, LinearForm>> elemental_forms(const GroundSet& ground) {
  std::vector<std::pair<FacetId, LinearForm>> out;
  const int n = ground.size();
  out.reserve(elemental_count(n));
  for (int i = 1; i <= n; ++i) {
    FacetId id{true, element_bit(i), 0};
    out.emplace_back(id, elemental_form(ground, id));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SubsetMask pair = element_bit(i) | element_bit(j);
      for (SubsetMask k = 0; k <= ground.full(); ++k) {
        if (k & pair) continue;
        FacetId id{false, pair, k};
        out.emplace_back(id, elemental_form(ground, id));
      }
    }
  return out;
}

std::size_t elemental_count(int n) {
  if (n < 2) return static_cast<std::size_t>(n);
  return static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * (n - 1) / 2 * (std::size_t{1} << (n - 2));
}

PolymatroidCheck check_polymatroid(const SetFunction& f) {
  PolymatroidCheck r;
  if (f(0) != 0) {
    r.ok = false;
    r.nonzero_empty = true;
    return r;
  }
  const auto& g = f.ground();
  const int n = g.size();
  const SubsetMask full = g.full();
  for (int i = 1; i <= n; ++i)
    if (f(full) < f(full & ~element_bit(i))) {
      r.ok = false;
      r.violated = FacetId{true, element_bit(i), 0};
      return r;
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SubsetMask bi = element_bit(i), bj = element_bit(j);
      for (SubsetMask k = 0; k <= full; ++k) {
        if (k & (bi | bj)) continue;
        if (f(k | bi) + f(k | bj) < f(k) + f(k | bi | bj)) {
          r.ok = false;
          r.violated = FacetId{false, bi | bj, k};
          return r;
        }
      }
    }
  return r;
}

bool is_polymatroid(const SetFunction& f) { return check_polymatroid(f).ok; }

bool is_matroid(const SetFunction& f) {
  for (SubsetMask a = 0; a <= f.ground().full(); ++a) {
    const Rational& v = f(a);
    if (denominator(v) != 1 || v > cardinality(a)) return false;
  }
  return is_polymatroid(f);
}

Rational mutual_info(const SetFunction& f, SubsetMask a, SubsetMask b, SubsetMask c) {
  return f(a | c) + f(b | c) - f(c) - f(a | b | c);
}

Rational mutual_info(const SetFunction& f, int i, int j, SubsetMask k) {
  return mutual_info(f, element_bit(i), element_bit(j), k);
}

LinearForm zhang_yeung_form(const GroundSet& ground, std::array<int, 4> roles) {
  SubsetMask m[4];
  for (int r = 0; r < 4; ++r) {
    if (roles[r] < 1 || roles[r] > ground.size()) throw ArgumentError("role outside the ground set");
    m[r] = element_bit(roles[r]);
  }
  if (cardinality(m[0] | m[1] | m[2] | m[3]) != 4) throw ArgumentError("roles must be distinct");
  const SubsetMask a = m[0], b = m[1], c = m[2], d = m[3];
  LinearForm f(ground);
  auto info = [&](SubsetMask x, SubsetMask y, SubsetMask z, int w) {
    f.add(x | z, w);
    f.add(y | z, w);
    f.add(z, -w);
    f.add(x | y | z, -w);
  };
  info(a, b, 0, 1);
  info(a, c | d, 0, 1);
  info(c, d, a, 3);
  info(c, d, b, 1);
  info(c, d, 0, -2);
  return f;
}

SetFunction restrict(const SetFunction& f, SubsetMask m) {
  if (!f.ground().contains(m)) throw ArgumentError("restriction mask outside the ground set");
  const auto elems = elements_of(m);
  GroundSet g(static_cast<int>(elems.size()));
  SetFunction out(g);
  for (SubsetMask a = 1; a <= g.full(); ++a) {
    SubsetMask lifted = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (a & (SubsetMask{1} << i)) lifted |= element_bit(elems[i]);
    out.set(a, f(lifted));
  }
  return out;
}

void write_text(std::ostream& out, const SetFunction& f) {
  for (SubsetMask a = 0; a <= f.ground().full(); ++a) out << a << ' ' << to_string(f(a)) << '\n';
}

SetFunction read_text(std::istream& in) {
  std::map<SubsetMask, Rational> vals;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    long long mask;
    std::string value, extra;
    if (!(ls >> mask)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ArgumentError("line " + std::to_string(lineno) + ": expected 'mask value'");
    }
    if (!(ls >> value) || (ls >> extra))
      throw ArgumentError("line " + std::to_string(lineno) + ": expected 'mask value'");
    if (mask < 0 || mask >= (1LL << kDenseCap))
      throw ArgumentError("line " + std::to_string(lineno) + ": mask out of range");
    if (!vals.emplace(static_cast<SubsetMask>(mask), parse_rational(value)).second)
      throw ArgumentError("line " + std::to_string(lineno) + ": duplicate mask");
  }
  int n = 0;
  while ((std::size_t{1} << n) < vals.size()) ++n;
  if ((std::size_t{1} << n) != vals.size() || vals.rbegin()->first != (SubsetMask{1} << n) - 1)
    throw ArgumentError("expected one value for each of the 2^n subsets");
  RatVector values;
  for (auto& [m, v] : vals) values.push_back(v);
  if (vals.empty()) throw ArgumentError("empty set function");
  return SetFunction(GroundSet(n), std::move(values));
}

}  // namespace symcone
