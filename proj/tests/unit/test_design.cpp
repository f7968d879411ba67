#include <doctest.h>

#include "srd/design.hpp"
#include "srd/exact.hpp"
#include "support.hpp"

using namespace srd;

TEST_CASE("blocks are sorted and reject repeated points") {
  Block b{5, 1, 3};
  CHECK(b.members() == std::vector<Point>{1, 3, 5});
  CHECK(b.contains(3));
  CHECK_FALSE(b.contains(2));
  CHECK_ERROR(Block({1, 2, 1}), ErrorKind::InvalidDesign);
  CHECK(Block{0, 1} < Block{0, 2});
}

TEST_CASE("point sets") {
  PointSet unlabeled(4);
  CHECK(unlabeled.label(2) == "2");
  PointSet labeled(3, {"a", "b", "inf"});
  CHECK(labeled.label(2) == "inf");
  CHECK_ERROR(PointSet(1), ErrorKind::InvalidDesign);
  CHECK_ERROR(PointSet(2, {"x", "x"}), ErrorKind::InvalidDesign);
  CHECK_ERROR(PointSet(3, {"x", "y"}), ErrorKind::InvalidDesign);
}

TEST_CASE("design validation") {
  Design d(4, {Block{0, 1}, Block{2, 3}});
  CHECK(d.v() == 4);
  CHECK(d.k() == 2);
  CHECK(d.b() == 2);
  CHECK_ERROR(Design(4, {Block{0, 1}, Block{1, 2, 3}}), ErrorKind::InvalidDesign);
  CHECK_ERROR(Design(4, {Block{0, 4}}), ErrorKind::InvalidDesign);
  CHECK_ERROR(Design(3, {Block{0, 1, 2}}), ErrorKind::InvalidDesign);
  CHECK_ERROR(Design(PointSet(4), {}, 1), ErrorKind::InvalidDesign);
  Design empty(PointSet(4), {}, 2);
  CHECK(empty.b() == 0);
}

TEST_CASE("t-design parameters derive b and r exactly") {
  auto ag32 = DesignParams::t_design(3, 8, 4, 1);
  CHECK(ag32.b == 14);
  CHECK(ag32.r == 7);
  auto table_row = DesignParams::bibd(24, 6, 5);
  CHECK(table_row.b == 92);
  CHECK(table_row.r == 23);
  CHECK(table_row.class_size() == 4);
  CHECK_ERROR(DesignParams::bibd(7, 3, 2).class_size(), ErrorKind::DivisibilityViolation);
  CHECK_ERROR(DesignParams::bibd(8, 3, 1), ErrorKind::NonIntegral);
  CHECK_ERROR(DesignParams::ibd(6, 20, 9, 3), ErrorKind::InvalidArgument);
  CHECK(DesignParams::ibd(6, 20, 10, 3).lambda == 10);
}

TEST_CASE("exact binomials and conversions") {
  CHECK(binomial(18, 9) == 48620);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  CHECK(is_integral(Rational(6, 3)));
  CHECK_FALSE(is_integral(Rational(7, 3)));
  CHECK_ERROR(to_int64(Rational(7, 3), "x"), ErrorKind::NonIntegral);
  CHECK_ERROR(to_int64(binomial(100, 50), "x"), ErrorKind::TooLarge);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK_ERROR(checked_mul(1ull << 40, 1ull << 30), ErrorKind::TooLarge);
}
