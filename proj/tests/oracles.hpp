#pragma once

// Reference computations that avoid the library's own shortcuts.

#include "symcone/cone.hpp"
#include "symcone/families.hpp"
#include "symcone/sampling.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using namespace symcone;

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n + C(n,2) 2^(n-2), counted by walking triples (i, j, K) directly.
inline long long elemental_count(int n) {
  long long c = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (long long k = 0; k < (1LL << n); ++k)
        if (!(k & (1LL << (i - 1))) && !(k & (1LL << (j - 1)))) ++c;
  return c;
}

// Every permutation fixing each block, by per-block next_permutation.
inline std::vector<BlockPermutation> block_permutations(const Partition& p) {
  std::vector<std::vector<int>> blocks;
  for (auto b : p.blocks()) blocks.push_back(elements_of(b));
  std::vector<BlockPermutation> out;
  std::vector<std::vector<int>> cur = blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t l) {
    if (l == blocks.size()) {
      std::vector<int> img(p.n());
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t i = 0; i < blocks[b].size(); ++i) img[blocks[b][i] - 1] = cur[b][i];
      out.emplace_back(p, img);
      return;
    }
    std::vector<int> perm = blocks[l];
    do {
      cur[l] = perm;
      rec(l + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return out;
}

inline SetFunction permutation_average(const SetFunction& h, const Partition& p) {
  auto perms = block_permutations(p);
  SetFunction sum(h.ground());
  for (const auto& s : perms) sum += apply_permutation(s, h);
  return Rational(1, static_cast<long>(perms.size())) * sum;
}

inline SetFunction random_rational_function(const GroundSet& g, Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  SetFunction f(g);
  for (SubsetMask a = 1; a <= g.full(); ++a) f.set(a, Rational(num(rng), den(rng)));
  return f;
}

// Distinct (λ(I), λ(K)) pairs over every elemental facet, computed by hand.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> facet_label_set(const Partition& p) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  const int n = p.n();
  const SubsetMask full = p.ground().full();
  auto lam = [&](SubsetMask a) {
    std::vector<int> v;
    for (auto b : p.blocks()) v.push_back(__builtin_popcount(a & b));
    return v;
  };
  for (int i = 1; i <= n; ++i) out.insert({lam(element_bit(i)), std::vector<int>(p.t(), 0)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (SubsetMask k = 0; k <= full; ++k)
        if (!(k & (element_bit(i) | element_bit(j)))) out.insert({lam(element_bit(i) | element_bit(j)), lam(k)});
  return out;
}

// g(A) = min_B h(B) + |A \ φ(B)|, evaluated with the images rebuilt per call.
inline SetFunction free_expansion_brute(const SetFunction& h, const std::vector<std::vector<int>>& images, int m) {
  GroundSet tg(m);
  SetFunction g(tg);
  for (SubsetMask a = 1; a <= tg.full(); ++a) {
    Rational best = -1;
    for (SubsetMask b = 0; b <= h.ground().full(); ++b) {
      SubsetMask img = 0;
      for (int i = 1; i <= h.n(); ++i)
        if (b & element_bit(i))
          for (int e : images[i - 1]) img |= element_bit(e);
      Rational v = h(b) + __builtin_popcount(a & ~img);
      if (best < 0 || v < best) best = v;
    }
    g.set(a, best);
  }
  return g;
}

// Rank 4 on 8 elements in pairs {1,2},{3,4},{5,6},{7,8}; the unions of two
// pairs are circuit-hyperplanes except the union of the first two.
inline Rational vamos_rank(SubsetMask a) {
  const SubsetMask pairs[4] = {0x3, 0xC, 0x30, 0xC0};
  int c = __builtin_popcount(a);
  if (c == 4)
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (!(x == 0 && y == 1) && a == (pairs[x] | pairs[y])) return 3;
  return std::min(c, 4);
}

// s_{j1,j2} = min{k, (m-n+1) j1 + j2} under [1,n-1].
inline Rational u_km_closed(int k, int m, int n, int j1, int j2) { return std::min(k, (m - n + 1) * j1 + j2); }

}  // namespace oracle
