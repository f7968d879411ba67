#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srd/design.hpp"
#include "srd/resolution.hpp"

namespace srd {

struct ResolvedDesign {
  Design design;
  Resolution resolution;
};

// All k-subsets of a v-set in lexicographic order.
Design trivial_design(std::size_t v, std::size_t k);

// Circle method: point v-1 is fixed, the other v-1 points sit on a cycle.
// Round i pairs v-1 with i and (i + d) with (i - d) mod (v-1). Throws
// OddPointCount for odd v and InvalidArgument for v < 4.
ResolvedDesign round_robin_one_factorization(std::size_t v);

// One-factorization of K_{4n} whose first 2n-1 one-factors each contain a
// one-factor of the K_{2n} on points 0..2n-1: circle-method factors of both
// halves paired up, followed by the 2n cyclic bipartite factors between the
// halves.
ResolvedDesign sub_factorization_embedding(std::size_t n);

// Hyperplanes of AG(m, q). Point index of (x_0, ..., x_{m-1}) is
// sum rank(x_i) q^i. One class per normal direction; each direction is
// represented by its lexicographically least scalar multiple, classes ordered
// by that representative and blocks within a class by the constant term.
ResolvedDesign affine_hyperplane_design(std::size_t m, std::uint32_t q);

// A parallel class on Z_n, plus the fixed point n when has_infinity is set.
struct CyclicBaseSpec {
  std::uint32_t n = 0;
  bool has_infinity = false;
  std::vector<Block> base_class;

  std::size_t v() const noexcept { return n + (has_infinity ? 1 : 0); }
};

// Throws InvalidBaseClass unless the base class partitions the point set
// into equal-size blocks.
void validate_base_spec(const CyclicBaseSpec& spec);

// Translate t maps x < n to x + t mod n and fixes the point n. Class t of the
// resolution holds the translates of the base class by t, in base order.
ResolvedDesign cyclic_develop(const CyclicBaseSpec& spec);

}  // namespace srd
