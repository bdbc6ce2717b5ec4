#include "symcone/families.hpp"

#include <algorithm>
#include <sstream>

namespace symcone {

ExpansionMap::ExpansionMap(int target_size, std::vector<SubsetMask> images)
    : target_(target_size), images_(std::move(images)) {
  GroundSet target(target_size);
  SubsetMask seen = 0;
  for (SubsetMask img : images_) {
    if (!target.contains(img)) throw ArgumentError("expansion image outside the target ground set");
    if (seen & img) throw ArgumentError("expansion images overlap");
    seen |= img;
  }
  if (images_.size() > static_cast<std::size_t>(kDenseCap)) throw UnsupportedError("source ground set exceeds the dense cap");
}

ExpansionMap ExpansionMap::canonical(const SetFunction& h) {
  std::vector<SubsetMask> images;
  int next = 1;
  for (int i = 1; i <= h.n(); ++i) {
    const Rational& v = h(element_bit(i));
    if (denominator(v) != 1 || v < 0) throw PreconditionError("singleton values must be nonnegative integers");
    SubsetMask m = 0;
    for (int c = 0; c < static_cast<int>(numerator(v)); ++c) {
      if (next > kDenseCap) throw UnsupportedError("expanded ground set exceeds the dense cap");
      m |= element_bit(next++);
    }
    images.push_back(m);
  }
  return ExpansionMap(next - 1, std::move(images));
}

ExpansionMap ExpansionMap::phi_mn(int m, int n) {
  if (n < 2 || m < n - 1 || m > 2 * n - 2) throw ArgumentError("phi_{m,n} needs n >= 2 and n-1 <= m <= 2n-2");
  std::vector<SubsetMask> images;
  SubsetMask first = 0;
  for (int e = 1; e <= m - n + 1; ++e) first |= element_bit(e);
  images.push_back(first);
  for (int i = 2; i <= n; ++i) images.push_back(element_bit(i + m - n));
  return ExpansionMap(m, std::move(images));
}

SubsetMask ExpansionMap::image_of(SubsetMask b) const {
  SubsetMask out = 0;
  for (int i : elements_of(b)) out |= image(i);
  return out;
}

SetFunction uniform(int m, int n) {
  if (m < 0 || m > n) throw ArgumentError("uniform matroid needs 0 <= m <= n");
  GroundSet g(n);
  SetFunction f(g);
  for (SubsetMask a = 1; a <= g.full(); ++a) f.set(a, std::min(m, cardinality(a)));
  return f;
}

SetFunction uniform_with_loops(int n, int k, SubsetMask support) {
  GroundSet g(n);
  if (!g.contains(support)) throw ArgumentError("support outside the ground set");
  if (k < 0 || k > cardinality(support)) throw ArgumentError("rank must lie between 0 and the support size");
  SetFunction f(g);
  for (SubsetMask a = 1; a <= g.full(); ++a) f.set(a, std::min(k, cardinality(a & support)));
  return f;
}

SetFunction free_expansion(const SetFunction& h, const ExpansionMap& phi) {
  if (!h.is_integral()) throw PreconditionError("free expansion needs an integer-valued function");
  if (phi.source_size() != h.n()) throw ArgumentError("expansion map source differs from the ground set");
  for (int i = 1; i <= h.n(); ++i)
    if (h(element_bit(i)) != cardinality(phi.image(i)))
      throw PreconditionError("|phi(" + std::to_string(i) + ")| differs from h({" + std::to_string(i) + "})");
  GroundSet target(phi.target_size());
  std::vector<SubsetMask> images(h.ground().subset_count());
  for (SubsetMask b = 0; b <= h.ground().full(); ++b) images[b] = phi.image_of(b);
  SetFunction g(target);
  for (SubsetMask a = 1; a <= target.full(); ++a) {
    Rational best = cardinality(a);
    for (SubsetMask b = 1; b <= h.ground().full(); ++b) {
      Rational v = h(b) + cardinality(a & ~images[b]);
      if (v < best) best = v;
    }
    g.set(a, best);
  }
  return g;
}

SetFunction factor(const SetFunction& g, const ExpansionMap& phi) {
  if (phi.target_size() != g.n()) throw ArgumentError("expansion map target differs from the ground set");
  GroundSet source(phi.source_size());
  SetFunction h(source);
  for (SubsetMask b = 1; b <= source.full(); ++b) h.set(b, g(phi.image_of(b)));
  return h;
}

SetFunction u1_loop(int n) {
  if (n < 1) throw ArgumentError("u1_loop needs n >= 1");
  return uniform_with_loops(n, 1, element_bit(1));
}

SetFunction u_km(int k, int m, int n) {
  if (n < 2 || m < n - 1 || m > 2 * n - 2 || k < std::max(1, m - n + 1) || k > n - 1)
    throw ArgumentError("u_km needs n-1 <= m <= 2n-2 and max{1,m-n+1} <= k <= n-1");
  return factor(uniform(k, m), ExpansionMap::phi_mn(m, n));
}

SetFunction gap_witness(const GroundSet& ground, SubsetMask special) {
  SetFunction f(ground);
  for (SubsetMask a = 1; a <= ground.full(); ++a) {
    int c = cardinality(a);
    int v = c == 1 ? 2 : c == 2 ? ((a & special) == a ? 4 : 3) : 4;
    f.set(a, v);
  }
  return f;
}

SetFunction gap_witness(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw ArgumentError("gap witness needs both blocks of size at least 2");
  auto p = Partition::consecutive({n1, n2});
  return gap_witness(p.ground(), p.block(0));
}

static std::vector<int> parse_params(std::string_view s) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ArgumentError("bad family parameter '" + item + "'");
    out.push_back(v);
  }
  return out;
}

FamilyTag FamilyTag::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ArgumentError("family tag needs the form kind:params");
  auto kind = text.substr(0, colon);
  auto params = parse_params(text.substr(colon + 1));
  FamilyTag tag{Kind::Uniform, params};
  std::size_t want = 0;
  if (kind == "uniform") {
    tag.kind = Kind::Uniform;
    want = 2;
  } else if (kind == "ukm") {
    tag.kind = Kind::Ukm;
    want = 3;
  } else if (kind == "u1loop") {
    tag.kind = Kind::U1Loop;
    want = 1;
  } else if (kind == "gap") {
    tag.kind = Kind::Gap;
    want = 2;
  } else if (kind == "loops") {
    tag.kind = Kind::UniformWithLoops;
    want = 3;
  } else {
    throw ArgumentError("unknown family kind '" + std::string(kind) + "'");
  }
  if (params.size() != want)
    throw ArgumentError("family kind '" + std::string(kind) + "' takes " + std::to_string(want) + " parameters");
  tag.build();  // validates ranges
  return tag;
}

std::string FamilyTag::to_string() const {
  static const char* names[] = {"uniform", "loops", "u1loop", "ukm", "gap"};
  std::string s = names[static_cast<int>(kind)];
  s += ":";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s;
}

SetFunction FamilyTag::build() const {
  switch (kind) {
    case Kind::Uniform:
      return uniform(params.at(0), params.at(1));
    case Kind::UniformWithLoops:
      if (params.at(2) < 0) throw ArgumentError("support mask must be nonnegative");
      return uniform_with_loops(params.at(0), params.at(1), static_cast<SubsetMask>(params.at(2)));
    case Kind::U1Loop:
      return u1_loop(params.at(0));
    case Kind::Ukm:
      return u_km(params.at(0), params.at(1), params.at(2));
    case Kind::Gap:
      return gap_witness(params.at(0), params.at(1));
  }
  throw ArgumentError("unknown family kind");
}

std::vector<FamilyTag> family_Un_tags(int n) {
  if (n < 2) throw ArgumentError("family_Un needs n >= 2");
  std::vector<FamilyTag> out{{FamilyTag::Kind::U1Loop, {n}}};
  for (int m = n - 1; m <= 2 * n - 2; ++m)
    for (int k = std::max(1, m - n + 1); k <= n - 1; ++k) out.push_back({FamilyTag::Kind::Ukm, {k, m, n}});
  return out;
}

std::vector<SetFunction> family_Un(int n) {
  std::vector<SetFunction> out;
  for (const auto& t : family_Un_tags(n)) out.push_back(t.build());
  return out;
}

}  // namespace symcone
