#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srd/generators.hpp"
#include "srd/resolution.hpp"
#include "srd/verify.hpp"
#include "support.hpp"

using namespace srd;

namespace {

Design k4() {
  return Design(4, {Block{0, 1}, Block{2, 3}, Block{0, 2}, Block{1, 3}, Block{0, 3},
                    Block{1, 2}});
}

Resolution k4_resolution() { return Resolution{{{{0, 1}}, {{2, 3}}, {{4, 5}}}}; }

// A 2-(6,3,2) design in which every block meets every other block.
Design unresolvable_6_3_2() {
  return Design(6, {Block{0, 1, 2}, Block{0, 1, 3}, Block{0, 2, 4}, Block{0, 3, 5},
                    Block{0, 4, 5}, Block{1, 2, 5}, Block{1, 3, 4}, Block{1, 4, 5},
                    Block{2, 3, 4}, Block{2, 3, 5}});
}

// Oracle re-check of a PRP witness using plain multisets.
bool witness_ok(const Design& d, const ParallelClass& a, const ParallelClass& b,
                const PrpWitness& w) {
  auto contents = [&](const ParallelClass& c) {
    std::multiset<oracle::RawBlock> out;
    for (auto ref : c.block_refs) {
      out.insert(oracle::RawBlock(d.block(ref).begin(), d.block(ref).end()));
    }
    return out;
  };
  auto is_class = [&](const ParallelClass& c) {
    std::vector<int> seen(d.v(), 0);
    for (auto ref : c.block_refs)
      for (auto p : d.block(ref)) ++seen[p];
    return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
  };
  auto before = contents(a);
  auto tmp = contents(b);
  before.insert(tmp.begin(), tmp.end());
  auto after = contents(w.first);
  tmp = contents(w.second);
  after.insert(tmp.begin(), tmp.end());
  auto first = contents(w.first);
  auto orig = contents(a);
  std::vector<oracle::RawBlock> common;
  std::set_intersection(first.begin(), first.end(), orig.begin(), orig.end(),
                        std::back_inserter(common));
  return is_class(w.first) && is_class(w.second) && before == after &&
         common.size() == w.alpha;
}

}  // namespace

TEST_CASE("verify_resolution") {
  CHECK(verify_resolution(k4(), k4_resolution()).ok);
  Resolution dup{{{{0, 1}}, {{2, 3}}, {{0, 1}}}};
  auto check = verify_resolution(k4(), dup);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.diagnostic.empty());
  CHECK_FALSE(verify_parallel_class(k4(), ParallelClass{{0, 2}}));
}

TEST_CASE("find_resolutions on small designs") {
  CHECK(find_resolutions(k4(), {10}).size() == 1);
  auto ag23 = affine_hyperplane_design(2, 3);
  auto found = find_resolutions(ag23.design, {10});
  REQUIRE(found.size() == 1);
  CHECK(same_resolution(ag23.design, found[0], ag23.resolution));
  CHECK(find_resolutions(unresolvable_6_3_2(), {10}).empty());
  CHECK(as_t_design(unresolvable_6_3_2(), 2).has_value());
  CHECK_ERROR(find_resolutions(k4(), {0}), ErrorKind::InvalidArgument);
}

TEST_CASE("resolution counts agree with exhaustive enumeration") {
  std::vector<Design> corpus{k4(), trivial_design(6, 3), trivial_design(6, 2),
                             trivial_design(8, 4), affine_hyperplane_design(2, 3).design,
                             affine_hyperplane_design(3, 2).design,
                             round_robin_one_factorization(8).design,
                             Design(4, {Block{0, 1}, Block{2, 3}, Block{0, 1}, Block{2, 3}})};
  for (const auto& d : corpus) {
    auto expected = oracle::count_resolutions(oracle::raw(d), static_cast<int>(d.v()));
    CAPTURE(d.b());
    CHECK(find_resolutions(d, {100000}).size() == expected);
  }
}

TEST_CASE("has_unique_resolution") {
  CHECK(has_unique_resolution(affine_hyperplane_design(2, 3).design));
  CHECK(has_unique_resolution(k4()));
  CHECK(has_unique_resolution(affine_hyperplane_design(3, 2).design));
  // Every class of the trivial (6,3) design is a block with its complement.
  CHECK(has_unique_resolution(trivial_design(6, 3)));
  CHECK_FALSE(has_unique_resolution(trivial_design(6, 2)));
  CHECK_ERROR(has_unique_resolution(unresolvable_6_3_2()), ErrorKind::NotResolvable);
  CHECK_ERROR(has_unique_resolution(trivial_design(10, 2), 5),
              ErrorKind::SearchBudgetExceeded);
}

TEST_CASE("canonical form is idempotent and ignores class order") {
  std::mt19937 rng(3);
  auto rr = round_robin_one_factorization(10);
  auto canon = canonical_resolution(rr.design, rr.resolution);
  CHECK(canonical_resolution(rr.design, canon) == canon);
  for (int i = 0; i < 10; ++i) {
    Resolution shuffled = rr.resolution;
    std::shuffle(shuffled.classes.begin(), shuffled.classes.end(), rng);
    for (auto& c : shuffled.classes) std::shuffle(c.block_refs.begin(), c.block_refs.end(), rng);
    CHECK(canonical_resolution(rr.design, shuffled) == canon);
    CHECK(same_resolution(rr.design, shuffled, rr.resolution));
  }
}

TEST_CASE("alpha-PRP on the sub-factorization example") {
  auto k8 = sub_factorization_embedding(2);
  const auto& cls = k8.resolution.classes;
  // Classes 0 and 1 contain K_4 one-factors on points 0..3 and 4..7.
  CHECK(is_alpha_prp(k8.design, cls[0], cls[1], 2));
  auto w = find_alpha_prp(k8.design, cls[0], cls[1], 2);
  REQUIRE(w);
  CHECK(validate_prp_witness(k8.design, cls[0], cls[1], *w));
  CHECK(witness_ok(k8.design, cls[0], cls[1], *w));
  CHECK_ERROR(is_alpha_prp(k8.design, cls[0], cls[1], 4), ErrorKind::BadAlpha);
  CHECK_ERROR(is_alpha_prp(k8.design, cls[0], cls[1], 0), ErrorKind::BadAlpha);
  auto violations = prp_violations(k8.design, k8.resolution);
  CHECK(std::any_of(violations.begin(), violations.end(),
                    [](const PrpViolation& v) { return v.alpha == 2; }));
  auto k12 = sub_factorization_embedding(3);
  auto v12 = prp_violations(k12.design, k12.resolution, {3});
  CHECK_FALSE(v12.empty());
}

TEST_CASE("AG(2,3) classes admit no replacement") {
  auto ag = affine_hyperplane_design(2, 3);
  const auto& cls = ag.resolution.classes;
  for (std::size_t alpha = 1; alpha <= 2; ++alpha) {
    CHECK_FALSE(is_alpha_prp(ag.design, cls[0], cls[1], alpha));
    CHECK_FALSE(is_alpha_prp(ag.design, cls[2], cls[3], alpha));
  }
  CHECK(prp_violations(ag.design, ag.resolution).empty());
  Design single(4, {Block{0, 1}, Block{2, 3}});
  CHECK(prp_violations(single, Resolution{{{{0, 1}}}}).empty());
}

TEST_CASE("every reported witness re-validates") {
  std::vector<ResolvedDesign> corpus{sub_factorization_embedding(2),
                                     sub_factorization_embedding(3),
                                     round_robin_one_factorization(8),
                                     cyclic_develop(CyclicBaseSpec{4, false, {Block{0, 1}, Block{2, 3}}})};
  for (const auto& rd : corpus) {
    for (const auto& v : prp_violations(rd.design, rd.resolution)) {
      const auto& a = rd.resolution.classes[v.first_class];
      const auto& b = rd.resolution.classes[v.second_class];
      CHECK(v.first_class < v.second_class);
      CHECK(v.witness.alpha == v.alpha);
      CHECK(validate_prp_witness(rd.design, a, b, v.witness));
      CHECK(witness_ok(rd.design, a, b, v.witness));
    }
  }
}

TEST_CASE("a unique resolution has no PRP violations") {
  std::vector<Design> corpus{k4(), affine_hyperplane_design(2, 3).design,
                             affine_hyperplane_design(3, 2).design, trivial_design(6, 3),
                             affine_hyperplane_design(2, 4).design,
                             affine_hyperplane_design(2, 5).design};
  for (const auto& d : corpus) {
    auto found = find_resolutions(d, {2});
    REQUIRE(found.size() == 1);
    CHECK(prp_violations(d, found[0]).empty());
  }
  // Conversely a violation yields a second resolution.
  auto k8 = sub_factorization_embedding(2);
  CHECK_FALSE(has_unique_resolution(k8.design));
}
