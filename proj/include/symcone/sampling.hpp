#pragma once

#include "symcone/symmetry.hpp"

#include <random>

namespace symcone {

using Rng = std::mt19937_64;

// Nonnegative integer combination of rank functions min{k, |A ∩ S|}.
SetFunction random_polymatroid(const GroundSet& ground, Rng& rng);

enum class SampleKind { Member, Perturbed, Raw };

// p-symmetric sample. Member samples are symmetrized polymatroids, Perturbed
// ones add a small symmetric displacement, Raw ones are arbitrary small values.
SetFunction random_symmetric(const Partition& p, Rng& rng, SampleKind kind);

// Cycles through the three kinds.
SetFunction random_symmetric(const Partition& p, Rng& rng, std::size_t i);

}  // namespace symcone
