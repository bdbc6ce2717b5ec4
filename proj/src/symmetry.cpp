#include "symcone/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symcone {

BlockPermutation::BlockPermutation(const Partition& p, std::vector<int> image) : image_(std::move(image)) {
  const int n = p.n();
  if (static_cast<int>(image_.size()) != n) throw ArgumentError("permutation length differs from the ground set");
  std::vector<bool> hit(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    int j = image_[i - 1];
    if (j < 1 || j > n || hit[j]) throw ArgumentError("not a permutation of the ground set");
    hit[j] = true;
    if (p.block_of(i) != p.block_of(j)) throw ArgumentError("permutation moves an element across blocks");
  }
}

BlockPermutation BlockPermutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  return BlockPermutation(std::move(id));
}

SubsetMask BlockPermutation::apply(SubsetMask a) const {
  SubsetMask out = 0;
  for (int i = 1; a != 0; ++i, a >>= 1)
    if (a & 1) out |= element_bit(image_.at(i - 1));
  return out;
}

BlockPermutation BlockPermutation::compose(const BlockPermutation& inner) const {
  if (inner.n() != n()) throw ArgumentError("permutation size mismatch");
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) img[i - 1] = (*this)(inner(i));
  return BlockPermutation(std::move(img));
}

SetFunction apply_permutation(const BlockPermutation& sigma, const SetFunction& h) {
  if (sigma.n() != h.n()) throw ArgumentError("permutation size mismatch");
  SetFunction out(h.ground());
  for (SubsetMask a = 1; a <= h.ground().full(); ++a) out.set(a, h(sigma.apply(a)));
  return out;
}

SymIndexSet::SymIndexSet(Partition p) : p_(std::move(p)), sizes_(p_.block_sizes()) {
  const int t = p_.t();
  stride_.assign(t, 1);
  for (int l = t - 2; l >= 0; --l) stride_[l] = stride_[l + 1] * static_cast<std::size_t>(sizes_[l + 1] + 1);
  count_ = stride_.empty() ? 1 : stride_[0] * static_cast<std::size_t>(sizes_[0] + 1);
}

bool SymIndexSet::contains(const PartitionVector& k) const {
  if (k.size() != sizes_.size()) return false;
  for (std::size_t l = 0; l < k.size(); ++l)
    if (k[l] < 0 || k[l] > sizes_[l]) return false;
  return true;
}

std::size_t SymIndexSet::index_of(const PartitionVector& k) const {
  if (!contains(k)) throw ArgumentError("partition vector out of range");
  std::size_t idx = 0;
  for (std::size_t l = 0; l < k.size(); ++l) idx += stride_[l] * static_cast<std::size_t>(k[l]);
  return idx;
}

PartitionVector SymIndexSet::tuple_at(std::size_t index) const {
  if (index >= count_) throw ArgumentError("index out of range");
  PartitionVector k(sizes_.size());
  for (std::size_t l = 0; l < k.size(); ++l) {
    k[l] = static_cast<int>(index / stride_[l]);
    index %= stride_[l];
  }
  return k;
}

SubsetMask SymIndexSet::representative(const PartitionVector& k) const {
  if (!contains(k)) throw ArgumentError("partition vector out of range");
  SubsetMask out = 0;
  for (std::size_t l = 0; l < k.size(); ++l) {
    auto e = elements_of(p_.block(static_cast<int>(l)));
    for (int i = 0; i < k[l]; ++i) out |= element_bit(e[i]);
  }
  return out;
}

SymVector::SymVector(SymIndexSet index) : index_(std::move(index)), values_(index_.size()) {}

SymVector::SymVector(SymIndexSet index, RatVector values) : index_(std::move(index)), values_(std::move(values)) {
  if (values_.size() != index_.size()) throw ArgumentError("symmetric vector has the wrong length");
  if (values_[0] != 0) throw ArgumentError("symmetric vector must vanish at the origin");
}

void SymVector::set(const PartitionVector& k, Rational v) {
  auto i = index_.index_of(k);
  if (i == 0 && v != 0) throw ArgumentError("symmetric vector must vanish at the origin");
  values_[i] = std::move(v);
}

RatVector SymVector::coordinates() const { return RatVector(values_.begin() + 1, values_.end()); }

SymVector SymVector::from_coordinates(SymIndexSet index, const RatVector& coords) {
  if (coords.size() + 1 != index.size()) throw ArgumentError("coordinate vector has the wrong length");
  RatVector v;
  v.reserve(index.size());
  v.emplace_back(0);
  v.insert(v.end(), coords.begin(), coords.end());
  return SymVector(std::move(index), std::move(v));
}

static void require_same_ground(const SetFunction& h, const Partition& p) {
  if (!(h.ground() == p.ground())) throw ArgumentError("partition and function live on different ground sets");
}

static Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SetFunction symmetrize(const SetFunction& h, const Partition& p) {
  require_same_ground(h, p);
  SymIndexSet idx(p);
  const SubsetMask full = h.ground().full();
  std::vector<std::size_t> cell(full + 1);
  RatVector sums(idx.size());
  for (SubsetMask a = 0; a <= full; ++a) {
    cell[a] = idx.index_of(partition_vector(a, p));
    sums[cell[a]] += h(a);
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto k = idx.tuple_at(i);
    Integer orbit = 1;
    for (std::size_t l = 0; l < k.size(); ++l) orbit *= binomial(idx.sizes()[l], k[l]);
    sums[i] /= orbit;
  }
  SetFunction out(h.ground());
  for (SubsetMask a = 1; a <= full; ++a) out.set(a, sums[cell[a]]);
  return out;
}

std::optional<std::pair<SubsetMask, SubsetMask>> find_asymmetry(const SetFunction& h, const Partition& p) {
  require_same_ground(h, p);
  SymIndexSet idx(p);
  for (SubsetMask a = 0; a <= h.ground().full(); ++a) {
    SubsetMask rep = idx.representative(partition_vector(a, p));
    if (h(a) != h(rep)) return std::make_pair(rep, a);
  }
  return std::nullopt;
}

bool is_p_symmetric(const SetFunction& h, const Partition& p) { return !find_asymmetry(h, p).has_value(); }

SymVector to_sym(const SetFunction& h, const Partition& p) {
  if (auto bad = find_asymmetry(h, p))
    throw PreconditionError("function is not symmetric under " + p.to_string() + ": h" +
                            subset_to_string(bad->first) + " = " + to_string(h(bad->first)) + " but h" +
                            subset_to_string(bad->second) + " = " + to_string(h(bad->second)));
  SymIndexSet idx(p);
  SymVector s(idx);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    auto k = idx.tuple_at(i);
    s.set(k, h(idx.representative(k)));
  }
  return s;
}

SetFunction from_sym(const SymVector& s) {
  const auto& p = s.index().partition();
  SetFunction out(p.ground());
  for (SubsetMask a = 1; a <= p.ground().full(); ++a) out.set(a, s.at(partition_vector(a, p)));
  return out;
}

OrbitKind OrbitLabel::kind() const {
  int total = 0, touched = 0;
  for (int x : lambda_i) {
    total += x;
    touched += x > 0;
  }
  if (total == 1) return OrbitKind::A;
  return touched == 2 ? OrbitKind::B : OrbitKind::C;
}

std::vector<int> OrbitLabel::blocks() const {
  std::vector<int> out;
  for (int l = 0; l < static_cast<int>(lambda_i.size()); ++l)
    for (int r = 0; r < lambda_i[l]; ++r) out.push_back(l);
  return out;
}

static std::string join(const std::vector<int>& v, int offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
  return s;
}

std::string OrbitLabel::to_string() const {
  auto b = blocks();
  switch (kind()) {
    case OrbitKind::A:
      return "[1_t(" + std::to_string(b[0] + 1) + ")|0]";
    case OrbitKind::B:
      return "[1_t(" + join(b, 1) + ")|" + join(lambda_k) + "]";
    case OrbitKind::C:
      return "[2_t(" + std::to_string(b[0] + 1) + ")|" + join(lambda_k) + "]";
  }
  return {};
}

static std::vector<int> parse_ints(std::string_view s) {
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
    if (used == 0 || used != item.size()) throw ArgumentError("bad orbit label entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

OrbitLabel OrbitLabel::parse(std::string_view text, int t) {
  auto fail = [&] { return ArgumentError("bad orbit label '" + std::string(text) + "'"); };
  if (text.size() < 8 || text.front() != '[' || text.back() != ']') throw fail();
  auto bar = text.find('|');
  auto open = text.find('(');
  auto close = text.find(')');
  if (bar == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
      !(open < close && close < bar))
    throw fail();
  auto head = text.substr(1, open - 1);
  auto ls = parse_ints(text.substr(open + 1, close - open - 1));
  auto ks = text.substr(bar + 1, text.size() - bar - 2);
  for (int l : ls)
    if (l < 1 || l > t) throw fail();
  if (head == "1_t" && ls.size() == 1 && ks == "0") return type_a(t, ls[0] - 1);
  auto k = parse_ints(ks);
  if (static_cast<int>(k.size()) != t) throw fail();
  if (head == "1_t" && ls.size() == 2 && ls[0] < ls[1]) return type_b(ls[0] - 1, ls[1] - 1, k);
  if (head == "2_t" && ls.size() == 1) return type_c(ls[0] - 1, k);
  throw fail();
}

OrbitLabel OrbitLabel::type_a(int t, int l) {
  OrbitLabel r{PartitionVector(t, 0), PartitionVector(t, 0)};
  r.lambda_i.at(l) = 1;
  return r;
}

OrbitLabel OrbitLabel::type_b(int l1, int l2, PartitionVector k) {
  OrbitLabel r{PartitionVector(k.size(), 0), std::move(k)};
  r.lambda_i.at(l1) = 1;
  r.lambda_i.at(l2) = 1;
  return r;
}

OrbitLabel OrbitLabel::type_c(int l, PartitionVector k) {
  OrbitLabel r{PartitionVector(k.size(), 0), std::move(k)};
  r.lambda_i.at(l) = 2;
  return r;
}

bool OrbitLabel::operator<(const OrbitLabel& o) const {
  auto ka = static_cast<int>(kind()), kb = static_cast<int>(o.kind());
  if (ka != kb) return ka < kb;
  auto ba = blocks(), bb = o.blocks();
  if (ba != bb) return ba < bb;
  return lambda_k < o.lambda_k;
}

OrbitLabel facet_orbit_label(const FacetId& facet, const Partition& p) {
  if (facet.monotone) return OrbitLabel::type_a(p.t(), p.block_of(elements_of(facet.pair).at(0)));
  return OrbitLabel{partition_vector(facet.pair, p), partition_vector(facet.k, p)};
}

bool is_valid_label(const OrbitLabel& label, const Partition& p) {
  const auto sizes = p.block_sizes();
  const std::size_t t = sizes.size();
  if (label.lambda_i.size() != t || label.lambda_k.size() != t) return false;
  int total = 0;
  for (std::size_t l = 0; l < t; ++l) {
    if (label.lambda_i[l] < 0 || label.lambda_k[l] < 0) return false;
    if (label.lambda_i[l] + label.lambda_k[l] > sizes[l]) return false;
    total += label.lambda_i[l];
  }
  if (total == 1) return std::all_of(label.lambda_k.begin(), label.lambda_k.end(), [](int x) { return x == 0; });
  return total == 2;
}

std::vector<OrbitLabel> orbit_labels(const Partition& p) {
  const int t = p.t();
  SymIndexSet idx(p);
  const auto& sizes = idx.sizes();
  std::vector<OrbitLabel> out;
  for (int l = 0; l < t; ++l) out.push_back(OrbitLabel::type_a(t, l));
  for (int l1 = 0; l1 < t; ++l1)
    for (int l2 = l1 + 1; l2 < t; ++l2)
      for (std::size_t i = 0; i < idx.size(); ++i) {
        auto k = idx.tuple_at(i);
        if (k[l1] < sizes[l1] && k[l2] < sizes[l2]) out.push_back(OrbitLabel::type_b(l1, l2, k));
      }
  for (int l = 0; l < t; ++l)
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto k = idx.tuple_at(i);
      if (k[l] <= sizes[l] - 2) out.push_back(OrbitLabel::type_c(l, k));
    }
  return out;
}

std::size_t orbit_count_formula(const Partition& p) {
  const auto sizes = p.block_sizes();
  const std::size_t t = sizes.size();
  std::size_t prod = 1;
  for (int s : sizes) prod *= static_cast<std::size_t>(s + 1);
  std::size_t total = t;
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b)
      total += static_cast<std::size_t>(sizes[a]) * sizes[b] * (prod / ((sizes[a] + 1) * (sizes[b] + 1)));
  for (std::size_t l = 0; l < t; ++l) total += static_cast<std::size_t>(sizes[l] - 1) * (prod / (sizes[l] + 1));
  return total;
}

}  // namespace symcone
