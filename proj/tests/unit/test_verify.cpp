#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srd/catalog.hpp"
#include "srd/generators.hpp"
#include "srd/reproduce.hpp"
#include "srd/verify.hpp"
#include "support.hpp"

using namespace srd;

namespace {

// Random k-subsets of [0, v), possibly repeating.
Design random_design(std::mt19937& rng, int v, int k, int b) {
  std::vector<Block> blocks;
  for (int i = 0; i < b; ++i) {
    auto s = oracle::sample_subset(rng, v, k);
    blocks.emplace_back(std::vector<Point>(s.begin(), s.end()));
  }
  return Design(PointSet(v), std::move(blocks), k);
}

CoverageSpectrum to_spectrum(const std::map<std::uint64_t, std::uint64_t>& m) {
  return CoverageSpectrum(m.begin(), m.end());
}

}  // namespace

TEST_CASE("verify_ibd") {
  CHECK(verify_ibd(trivial_design(6, 3)) == DesignParams::ibd(6, 20, 10, 3));
  CHECK(verify_ibd(Design(4, {Block{0, 1}, Block{2, 3}})) == DesignParams::ibd(4, 2, 1, 2));
  auto master = cyclic_develop(catalog_entry("3-(24,12,15)").base_spec);
  CHECK(verify_ibd(master.design) == DesignParams::ibd(24, 92, 23, 6));
  CHECK_ERROR(verify_ibd(Design(4, {Block{0, 1}, Block{1, 2}})),
              ErrorKind::NonConstantReplication);
}

TEST_CASE("coverage spectra") {
  auto ag32 = affine_hyperplane_design(3, 2).design;
  CHECK(t_coverage_spectrum(ag32, 3) == to_spectrum(oracle::spectrum(oracle::raw(ag32), 8, 3)));
  CHECK(t_coverage_spectrum(ag32, 3) == CoverageSpectrum{{1, 56}});
  CHECK(t_coverage_spectrum(trivial_design(6, 3), 3) == CoverageSpectrum{{1, 20}});
  auto built = build_catalog_design(catalog_entry("3-(24,12,15)"));
  CHECK(t_coverage_spectrum(built.design, 3) == CoverageSpectrum{{15, 2024}});
  CHECK_ERROR(t_coverage_spectrum(ag32, 5), ErrorKind::InvalidArgument);
  CHECK_ERROR(t_coverage_spectrum(ag32, 0), ErrorKind::InvalidArgument);
  CHECK(uniform_coverage(CoverageSpectrum{{1, 3}, {2, 1}}) == std::nullopt);
}

TEST_CASE("coverage spectra agree with brute force on random designs") {
  std::mt19937 rng(20240601);
  for (int round = 0; round < 30; ++round) {
    const int v = 5 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % (v - 3));
    const int b = 1 + static_cast<int>(rng() % 25);
    auto d = random_design(rng, v, k, b);
    for (int t = 1; t <= std::min(k, 4); ++t) {
      CHECK(t_coverage_spectrum(d, t) == to_spectrum(oracle::spectrum(oracle::raw(d), v, t)));
    }
  }
}

TEST_CASE("as_t_design") {
  auto ag32 = affine_hyperplane_design(3, 2).design;
  CHECK(as_t_design(ag32, 3) == DesignParams::t_design(3, 8, 4, 1));
  CHECK(as_t_design(ag32, 2) == DesignParams::t_design(2, 8, 4, 3));
  auto ag23 = affine_hyperplane_design(2, 3).design;
  CHECK(as_t_design(ag23, 3) == std::nullopt);
}

TEST_CASE("lambda_j") {
  auto ag = DesignParams::t_design(3, 8, 4, 1);
  // Pair coverage of AG(3,2) planes measured directly.
  auto pairs = oracle::spectrum(oracle::raw(affine_hyperplane_design(3, 2).design), 8, 2);
  REQUIRE(pairs.size() == 1);
  CHECK(lambda_j(ag, 2).value == Rational(pairs.begin()->first));
  CHECK(lambda_j(ag, 2).value == 3);
  CHECK(lambda_j(ag, 0).value == 14);
  CHECK(lambda_j(ag, 3).value == 1);
  CHECK(lambda_j(ag, 1).value == 7);
  CHECK(pair_lambda(DesignParams::t_design(3, 24, 12, 15)) == 33);
  CHECK(pair_lambda(DesignParams::t_design(3, 30, 15, 65)) == 140);
  // 2-(8,3,1) is not admissible: lambda_1 = 7/2.
  DesignParams bad{2, 8, 0, 0, 3, 1};
  CHECK_FALSE(lambda_j(bad, 1).integral);
  CHECK(lambda_j(bad, 1).value == Rational(7, 2));
}

TEST_CASE("lambda_j matches sampled subset coverage") {
  std::mt19937 rng(7);
  std::vector<std::pair<Design, DesignParams>> corpus{
      {affine_hyperplane_design(3, 2).design, DesignParams::t_design(3, 8, 4, 1)},
      {trivial_design(8, 4), DesignParams::t_design(4, 8, 4, 1)},
      {build_catalog_design(catalog_entry("3-(28,14,18)")).design,
       DesignParams::t_design(3, 28, 14, 18)},
  };
  for (const auto& [design, params] : corpus) {
    auto blocks = oracle::raw(design);
    for (int j = 0; j <= params.t; ++j) {
      auto expected = lambda_j(params, j);
      REQUIRE(expected.integral);
      for (int s = 0; s < 20; ++s) {
        auto subset = oracle::sample_subset(rng, static_cast<int>(params.v), j);
        CHECK(Rational(oracle::containing(blocks, subset)) == expected.value);
        std::vector<Point> pts(subset.begin(), subset.end());
        CHECK(Rational(blocks_containing(design, pts)) == expected.value);
      }
    }
  }
}

TEST_CASE("simplicity and triviality") {
  CHECK(is_simple(trivial_design(6, 3)));
  CHECK_FALSE(is_simple(Design(4, {Block{0, 1}, Block{0, 1}})));
  CHECK(is_simple(build_catalog_design(catalog_entry("3-(28,14,18)")).design));
  auto all = trivial_design(6, 3);
  CHECK(is_trivial(all));
  auto blocks = all.blocks();
  blocks.pop_back();
  CHECK_FALSE(is_trivial(Design(PointSet(6), blocks, 3)));
  blocks.push_back(blocks.front());
  CHECK_FALSE(is_trivial(Design(PointSet(6), blocks, 3)));
}

TEST_CASE("intersection profiles") {
  auto p15 = intersection_profile(build_catalog_design(catalog_entry("3-(24,12,15)")).design);
  CHECK(p15.counts ==
        std::vector<std::uint64_t>{69, 0, 46, 0, 506, 2208, 3864, 2208, 506, 0, 46, 0, 0});
  CHECK(p15.total() == 9453);
  auto p18 = intersection_profile(build_catalog_design(catalog_entry("3-(28,14,18)")).design);
  CHECK(p18.counts == std::vector<std::uint64_t>{81, 0, 0, 0, 54, 1080, 3132, 4428, 3132,
                                                 1080, 54, 0, 0, 0, 0});
  CHECK(intersection_profile(Design(4, {Block{0, 1}, Block{2, 3}})).counts ==
        std::vector<std::uint64_t>{1, 0, 0});
}

TEST_CASE("intersection profile properties on random designs") {
  std::mt19937 rng(99);
  for (int round = 0; round < 40; ++round) {
    const int v = 4 + static_cast<int>(rng() % 60);
    const int k = 2 + static_cast<int>(rng() % (v - 2));
    const int b = static_cast<int>(rng() % 30);
    auto d = random_design(rng, v, k, b);
    auto p = intersection_profile(d);
    CHECK(p.counts == oracle::profile(oracle::raw(d), k));
    CHECK(p.total() == oracle::choose(b, 2));
    CHECK(p.simple() == is_simple(d));
    CHECK(p.simple() == !oracle::has_repeat(oracle::raw(d)));
  }
}

TEST_CASE("nontriviality bound") {
  auto b24 = nontriviality_bound(24, 4);
  CHECK(b24.constructed_upper == 35420);
  CHECK(b24.trivial_blocks == 2704156);
  CHECK(b24.holds);
  auto b18 = nontriviality_bound(18, 3);
  CHECK(b18.trivial_blocks == 48620);
  CHECK(b18.holds);
  CHECK(nontriviality_bound_holds(8, 2));
  CHECK_ERROR(nontriviality_bound(12, 4), ErrorKind::DivisibilityViolation);
  CHECK_ERROR(nontriviality_bound(12, 5), ErrorKind::DivisibilityViolation);
  for (int v = 4; v <= 64; ++v) {
    for (int k = 2; 4 * k <= v; ++k) {
      if (v % (2 * k) != 0) continue;
      CAPTURE(v);
      CAPTURE(k);
      CHECK(nontriviality_bound_holds(v, k));
      // Independent evaluation in 64-bit (exact below v = 67).
      auto upper = oracle::choose(v - 1, k - 1) * oracle::choose(v / k, v / (2 * k));
      CHECK(nontriviality_bound(v, k).constructed_upper == upper);
      CHECK(upper < oracle::choose(v, v / 2));
    }
  }
}
