#include "srd/verify.hpp"

#include <algorithm>
#include <vector>

#include "bit_rows.hpp"
#include "srd/error.hpp"

namespace srd {

DesignParams verify_ibd(const Design& design) {
  std::vector<std::uint64_t> replication(design.v(), 0);
  for (const Block& block : design.blocks()) {
    for (Point p : block) ++replication[p];
  }
  const std::uint64_t r = replication.front();
  for (std::size_t p = 0; p < replication.size(); ++p) {
    if (replication[p] != r) {
      throw Error(ErrorKind::NonConstantReplication,
                  "point " + std::to_string(p) + " lies in " +
                      std::to_string(replication[p]) + " blocks, point 0 in " +
                      std::to_string(r));
    }
  }
  const auto v = static_cast<std::int64_t>(design.v());
  const auto b = static_cast<std::int64_t>(design.b());
  const auto k = static_cast<std::int64_t>(design.k());
  return DesignParams{1, v, b, static_cast<std::int64_t>(r), k,
                      static_cast<std::int64_t>(r)};
}

namespace {

constexpr std::uint64_t kMaxSubsetTable = std::uint64_t{1} << 27;

// Pascal triangle up to n choose t, 64-bit with overflow checks.
std::vector<std::vector<std::uint64_t>> pascal(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::uint64_t>> c(n + 1,
                                            std::vector<std::uint64_t>(t + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= std::min(i, t); ++j) {
      c[i][j] = checked_add(c[i - 1][j - 1], j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
  return c;
}

}  // namespace

CoverageSpectrum t_coverage_spectrum(const Design& design, std::size_t t) {
  if (t < 1 || t > design.k()) {
    throw Error(ErrorKind::InvalidArgument,
                "strength t = " + std::to_string(t) + " not in [1, k]");
  }
  const std::size_t v = design.v();
  const auto choose = pascal(v, t);
  const std::uint64_t subsets = choose[v][t];
  if (subsets > kMaxSubsetTable) {
    throw Error(ErrorKind::TooLarge, "C(v, t) = " + std::to_string(subsets) +
                                         " t-subsets exceed the counter table");
  }

  if (design.b() > UINT32_MAX) {
    throw Error(ErrorKind::TooLarge, "too many blocks for 32-bit coverage counters");
  }

  // Each block increments the colex rank of every t-subset it contains.
  std::vector<std::uint32_t> coverage(subsets, 0);
  std::vector<std::size_t> pick(t);
  for (const Block& block : design.blocks()) {
    const auto& m = block.members();
    for (std::size_t i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      std::uint64_t rank = 0;
      for (std::size_t i = 0; i < t; ++i) rank += choose[m[pick[i]]][i + 1];
      ++coverage[rank];
      std::size_t i = t;
      while (i > 0 && pick[i - 1] == m.size() - t + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  CoverageSpectrum spectrum;
  for (auto c : coverage) ++spectrum[c];
  return spectrum;
}

std::optional<std::uint64_t> uniform_coverage(const CoverageSpectrum& spectrum) {
  if (spectrum.size() != 1) return std::nullopt;
  return spectrum.begin()->first;
}

std::optional<DesignParams> as_t_design(const Design& design, std::size_t t) {
  auto lambda = uniform_coverage(t_coverage_spectrum(design, t));
  if (!lambda) return std::nullopt;
  DesignParams p = verify_ibd(design);
  p.t = static_cast<std::int64_t>(t);
  p.lambda = static_cast<std::int64_t>(*lambda);
  return p;
}

LambdaValue lambda_j(const DesignParams& params, std::int64_t j) {
  if (j < 0 || j > params.t) {
    throw Error(ErrorKind::InvalidArgument,
                "level j = " + std::to_string(j) + " not in [0, t]");
  }
  const std::int64_t gap = params.t - j;
  Rational value(params.lambda * binomial(params.v - j, gap),
                 binomial(params.k - j, gap));
  return LambdaValue{value, is_integral(value)};
}

std::int64_t pair_lambda(const DesignParams& params) {
  if (params.t < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "pair coverage needs a design of strength at least 2");
  }
  return to_int64(lambda_j(params, 2).value, "lambda_2");
}

std::uint64_t blocks_containing(const Design& design,
                                std::span<const Point> points) {
  std::uint64_t n = 0;
  for (const Block& block : design.blocks()) {
    if (std::all_of(points.begin(), points.end(),
                    [&](Point p) { return block.contains(p); })) {
      ++n;
    }
  }
  return n;
}

bool is_simple(const Design& design) {
  std::vector<const Block*> sorted;
  sorted.reserve(design.b());
  for (const Block& block : design.blocks()) sorted.push_back(&block);
  std::sort(sorted.begin(), sorted.end(),
            [](const Block* a, const Block* b) { return *a < *b; });
  return std::adjacent_find(sorted.begin(), sorted.end(),
                            [](const Block* a, const Block* b) {
                              return *a == *b;
                            }) == sorted.end();
}

bool is_trivial(const Design& design) {
  // Distinct k-subsets numbering C(v, k) are all of them.
  return is_simple(design) &&
         BigInt(design.b()) == binomial(static_cast<std::int64_t>(design.v()),
                                        static_cast<std::int64_t>(design.k()));
}

IntersectionProfile intersection_profile(const Design& design) {
  const detail::BitRows rows(design);
  IntersectionProfile profile;
  profile.counts.assign(design.k() + 1, 0);
  const std::size_t b = design.b();
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      ++profile.counts[rows.intersection(i, j)];
    }
  }
  return profile;
}

NontrivialityBound nontriviality_bound(std::int64_t v, std::int64_t k) {
  if (k < 2) {
    throw Error(ErrorKind::InvalidArgument, "master block size must be >= 2");
  }
  if (v % (2 * k) != 0 || v / k < 4) {
    throw Error(ErrorKind::DivisibilityViolation,
                "need 2k | v and v/k >= 4, got v=" + std::to_string(v) +
                    " k=" + std::to_string(k));
  }
  NontrivialityBound bound;
  bound.constructed_upper = binomial(v - 1, k - 1) * binomial(v / k, v / (2 * k));
  bound.trivial_blocks = binomial(v, v / 2);
  bound.holds = bound.constructed_upper < bound.trivial_blocks;
  return bound;
}

bool nontriviality_bound_holds(std::int64_t v, std::int64_t k) {
  return nontriviality_bound(v, k).holds;
}

}  // namespace srd
