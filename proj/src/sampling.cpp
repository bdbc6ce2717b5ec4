#include "symcone/sampling.hpp"

namespace symcone {

static int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SetFunction random_polymatroid(const GroundSet& ground, Rng& rng) {
  SetFunction h(ground);
  if (ground.size() == 0) return h;
  const int terms = uniform_int(rng, 1, 4);
  for (int t = 0; t < terms; ++t) {
    SubsetMask support = static_cast<SubsetMask>(uniform_int(rng, 1, static_cast<int>(ground.full())));
    int k = uniform_int(rng, 1, cardinality(support));
    int c = uniform_int(rng, 1, 3);
    for (SubsetMask a = 1; a <= ground.full(); ++a)
      h.set(a, h(a) + c * std::min(k, cardinality(a & support)));
  }
  return h;
}

SetFunction random_symmetric(const Partition& p, Rng& rng, SampleKind kind) {
  SymIndexSet idx(p);
  if (kind == SampleKind::Raw) {
    SymVector s(idx);
    for (std::size_t i = 1; i < idx.size(); ++i) s.set(idx.tuple_at(i), uniform_int(rng, -1, 4));
    return from_sym(s);
  }
  SetFunction h = symmetrize(random_polymatroid(p.ground(), rng), p);
  if (kind == SampleKind::Member) return h;
  SymVector d(idx);
  const int touched = uniform_int(rng, 1, 3);
  for (int r = 0; r < touched; ++r) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(idx.size()) - 1));
    d.set(idx.tuple_at(i), Rational(uniform_int(rng, -2, 2), uniform_int(rng, 1, 4)));
  }
  return h + from_sym(d);
}

SetFunction random_symmetric(const Partition& p, Rng& rng, std::size_t i) {
  static constexpr SampleKind kinds[] = {SampleKind::Member, SampleKind::Perturbed, SampleKind::Raw};
  return random_symmetric(p, rng, kinds[i % 3]);
}

}  // namespace symcone
