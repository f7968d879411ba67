#include <doctest.h>

#include "oracles.hpp"
#include "srd/generators.hpp"
#include "srd/verify.hpp"
#include "support.hpp"

using namespace srd;

TEST_CASE("trivial designs") {
  CHECK(trivial_design(4, 2).b() == 6);
  auto t63 = trivial_design(6, 3);
  CHECK(t63.b() == 20);
  CHECK(t_coverage_spectrum(t63, 3) == CoverageSpectrum{{1, 20}});
  auto t84 = trivial_design(8, 4);
  CHECK(t84.b() == 70);
  CHECK(t_coverage_spectrum(t84, 3) == CoverageSpectrum{{5, 56}});
  CHECK(oracle::spectrum(oracle::raw(t84), 8, 3) == std::map<std::uint64_t, std::uint64_t>{{5, 56}});
  CHECK(t84.block(0) == Block{0, 1, 2, 3});
  CHECK(t84.block(69) == Block{4, 5, 6, 7});
  CHECK_ERROR(trivial_design(4, 4), ErrorKind::InvalidArgument);
}

TEST_CASE("round-robin one-factorizations") {
  auto k4 = round_robin_one_factorization(4);
  CHECK(k4.resolution.classes.size() == 3);
  for (const auto& c : k4.resolution.classes) CHECK(c.block_refs.size() == 2);
  auto k8 = round_robin_one_factorization(8);
  CHECK(k8.resolution.classes.size() == 7);
  CHECK(oracle::spectrum(oracle::raw(k8.design), 8, 2) ==
        std::map<std::uint64_t, std::uint64_t>{{1, 28}});
  CHECK(verify_resolution(k8.design, k8.resolution).ok);
  auto k6 = round_robin_one_factorization(6);
  CHECK(k6.resolution.classes.size() == 5);
  CHECK(verify_ibd(k6.design) == DesignParams::ibd(6, 15, 5, 2));
  CHECK_ERROR(round_robin_one_factorization(7), ErrorKind::OddPointCount);
  CHECK_ERROR(round_robin_one_factorization(2), ErrorKind::InvalidArgument);
}

TEST_CASE("sub-factorization embedding") {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto rd = sub_factorization_embedding(n);
    CHECK(rd.design.v() == 4 * n);
    CHECK(verify_resolution(rd.design, rd.resolution).ok);
    CHECK(as_t_design(rd.design, 2) == DesignParams::bibd(4 * n, 2, 1));
  }
  // Exactly the first three one-factors of K_8 restrict to one-factors of the
  // K_4 on points 0..3.
  auto k8 = sub_factorization_embedding(2);
  std::size_t restricting = 0;
  for (const auto& c : k8.resolution.classes) {
    std::size_t inside = 0;
    for (auto ref : c.block_refs) {
      const auto& b = k8.design.block(ref);
      if (b.members()[1] < 4) ++inside;
    }
    if (inside == 2) ++restricting;
  }
  CHECK(restricting == 3);
  CHECK_ERROR(sub_factorization_embedding(1), ErrorKind::InvalidArgument);
}

TEST_CASE("affine hyperplane designs") {
  auto ag23 = affine_hyperplane_design(2, 3);
  CHECK(ag23.design.b() == 12);
  CHECK(ag23.resolution.classes.size() == 4);
  CHECK(as_t_design(ag23.design, 2) == DesignParams::bibd(9, 3, 1));
  auto ag28 = affine_hyperplane_design(2, 8);
  CHECK(as_t_design(ag28.design, 2) == DesignParams::bibd(64, 8, 1));
  CHECK(ag28.design.b() == 72);
  CHECK(verify_resolution(ag28.design, ag28.resolution).ok);
  auto ag32 = affine_hyperplane_design(3, 2);
  CHECK(ag32.design.b() == 14);
  CHECK(ag32.design.k() == 4);
  CHECK(oracle::spectrum(oracle::raw(ag32.design), 8, 3) ==
        std::map<std::uint64_t, std::uint64_t>{{1, 56}});
  CHECK_ERROR(affine_hyperplane_design(2, 6), ErrorKind::UnsupportedField);
  CHECK_ERROR(affine_hyperplane_design(1, 3), ErrorKind::InvalidArgument);
}

TEST_CASE("hyperplanes from different classes meet in q^(m-2) points") {
  for (auto [m, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{
           {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {2, 8}, {4, 2}, {3, 4}}) {
    CAPTURE(m);
    CAPTURE(q);
    auto rd = affine_hyperplane_design(m, q);
    std::size_t expected = 1;
    for (std::size_t i = 2; i < m; ++i) expected *= q;
    std::vector<std::size_t> class_of(rd.design.b());
    for (std::size_t c = 0; c < rd.resolution.classes.size(); ++c) {
      for (auto ref : rd.resolution.classes[c].block_refs) class_of[ref] = c;
    }
    auto blocks = oracle::raw(rd.design);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        oracle::RawBlock common;
        std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                              blocks[j].end(), std::back_inserter(common));
        CHECK(common.size() == (class_of[i] == class_of[j] ? 0 : expected));
      }
    }
  }
}

TEST_CASE("cyclic development") {
  CyclicBaseSpec wrap{4, false, {Block{0, 1}, Block{2, 3}}};
  auto rd = cyclic_develop(wrap);
  CHECK(rd.resolution.classes.size() == 4);
  CHECK_FALSE(is_simple(rd.design));
  CHECK(rd.design.block(2) == Block{1, 2});
  CHECK(rd.design.block(3) == Block{0, 3});
  CHECK_ERROR(validate_base_spec(CyclicBaseSpec{4, false, {Block{0, 1}, Block{1, 2}}}),
              ErrorKind::InvalidBaseClass);
  CHECK_ERROR(validate_base_spec(CyclicBaseSpec{5, false, {Block{0, 1}, Block{2, 3}}}),
              ErrorKind::InvalidBaseClass);
  CHECK_ERROR(validate_base_spec(CyclicBaseSpec{4, false, {Block{0, 1, 2}, Block{3, 0, 1}}}),
              ErrorKind::InvalidBaseClass);
  auto inf = cyclic_develop(CyclicBaseSpec{3, true, {Block{3, 0}, Block{1, 2}}});
  CHECK(inf.design.points().label(3) == "inf");
  CHECK(inf.design.block(2) == Block{3, 1});
  CHECK(as_t_design(inf.design, 2) == DesignParams::bibd(4, 2, 1));
}
