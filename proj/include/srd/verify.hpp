#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "srd/design.hpp"
#include "srd/exact.hpp"

namespace srd {

// Returns (v, b, r, k) with t = 1 and lambda = r, or throws
// NonConstantReplication naming the first deviating point.
DesignParams verify_ibd(const Design& design);

// Maps a coverage count to the number of t-subsets of points covered exactly
// that many times. The design is a t-design iff the map has a single key.
using CoverageSpectrum = std::map<std::uint64_t, std::uint64_t>;

CoverageSpectrum t_coverage_spectrum(const Design& design, std::size_t t);

// The single coverage value when the spectrum is uniform.
std::optional<std::uint64_t> uniform_coverage(const CoverageSpectrum& spectrum);

// Full parameters if the design is a t-design, otherwise nullopt.
std::optional<DesignParams> as_t_design(const Design& design, std::size_t t);

struct LambdaValue {
  Rational value;
  bool integral = false;
};

// lambda_j = lambda * C(v-j, t-j) / C(k-j, t-j), evaluated exactly.
LambdaValue lambda_j(const DesignParams& params, std::int64_t j);

// Pair coverage of a design with t >= 2; throws NonIntegral if lambda_2 is not
// an integer.
std::int64_t pair_lambda(const DesignParams& params);

std::uint64_t blocks_containing(const Design& design,
                                std::span<const Point> points);

bool is_simple(const Design& design);
bool is_trivial(const Design& design);

IntersectionProfile intersection_profile(const Design& design);

struct NontrivialityBound {
  BigInt constructed_upper;  // C(v-1,k-1) * C(v/k, v/2k)
  BigInt trivial_blocks;     // C(v, v/2)
  bool holds = false;
};

// Requires 2k | v and v/k >= 4, otherwise throws DivisibilityViolation.
NontrivialityBound nontriviality_bound(std::int64_t v, std::int64_t k);
bool nontriviality_bound_holds(std::int64_t v, std::int64_t k);

}  // namespace srd
