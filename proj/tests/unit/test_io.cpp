#include <doctest.h>

#include <filesystem>
#include <random>

#include "srd/catalog.hpp"
#include "srd/generators.hpp"
#include "srd/io.hpp"
#include "srd/reproduce.hpp"
#include "support.hpp"

using namespace srd;

TEST_CASE("parse a hand-written file") {
  const char* text =
      "# K_4 one-factorization\n"
      "design v=4 k=2 b=6\n"
      "class 0\n0 1\n2 3   # trailing comment\n"
      "class 1\n0 2\n1 3\n"
      "class 2\n0 3\n1 2\n";
  auto f = io::parse_text(text);
  CHECK(f.design.v() == 4);
  CHECK(f.design.b() == 6);
  REQUIRE(f.resolution);
  CHECK(f.resolution->classes.size() == 3);
  CHECK(f.resolution->classes[1].block_refs == std::vector<std::size_t>{2, 3});
  CHECK(f.design.block(5) == Block{1, 2});
}

TEST_CASE("labels") {
  auto f = io::parse_text("design v=3 k=2 b=1\nlabel 0 a\nlabel 1 b c\nlabel 2 inf\n0 2\n");
  CHECK(f.design.points().label(1) == "b c");
  CHECK(f.design.points().label(2) == "inf");
  CHECK_ERROR(io::parse_text("design v=3 k=2 b=1\nlabel 0 a\n0 2\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=3 k=2 b=1\nlabel 0 a\nlabel 0 b\n0 2\n"), ErrorKind::Parse);
}

TEST_CASE("malformed input") {
  CHECK_ERROR(io::parse_text(""), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("0 1\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2\n0 1\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=2\n0 1\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=1\n1 0\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=1\n0 4\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=1\n0 1 2\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=1\n0 x\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=2\n0 1\nclass 0\n2 3\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=2\nclass 1\n0 1\n2 3\n"), ErrorKind::Parse);
  CHECK_ERROR(io::parse_text("design v=4 k=2 b=2\nclass 0\n0 1\n1 2\n"),
              ErrorKind::InvalidResolution);
  CHECK_ERROR(io::parse_text("design v=4 k=4 b=1\n0 1 2 3\n"), ErrorKind::InvalidDesign);
  CHECK_ERROR(io::from_json(nlohmann::json::parse(R"({"v": 4, "k": 2, "b": 3, "blocks": [[0,1]]})")),
              ErrorKind::Parse);
}

TEST_CASE("text and JSON round trips") {
  std::vector<ResolvedDesign> corpus{
      affine_hyperplane_design(2, 3), sub_factorization_embedding(2),
      cyclic_develop(catalog_entry("3-(24,12,15)").base_spec),
      cyclic_develop(CyclicBaseSpec{4, false, {Block{0, 1}, Block{2, 3}}})};
  for (const auto& rd : corpus) {
    auto plain = io::parse_text(io::format_text(rd.design));
    CHECK(plain.design == rd.design);
    CHECK_FALSE(plain.resolution);

    auto with_res = io::parse_text(io::format_text(rd.design, rd.resolution));
    REQUIRE(with_res.resolution);
    CHECK(with_res.design.points() == rd.design.points());
    CHECK(with_res.resolution->classes.size() == rd.resolution.classes.size());
    for (std::size_t c = 0; c < rd.resolution.classes.size(); ++c) {
      for (std::size_t j = 0; j < rd.resolution.classes[c].block_refs.size(); ++j) {
        CHECK(with_res.design.block(with_res.resolution->classes[c].block_refs[j]) ==
              rd.design.block(rd.resolution.classes[c].block_refs[j]));
      }
    }

    auto json = io::from_json(io::to_json(rd.design, &rd.resolution));
    CHECK(json.design == rd.design);
    REQUIRE(json.resolution);
    CHECK(*json.resolution == rd.resolution);
    auto reparsed = io::from_json(nlohmann::json::parse(io::to_json(rd.design).dump()));
    CHECK(reparsed.design == rd.design);
  }
}

TEST_CASE("random designs round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    const std::size_t v = 3 + rng() % 20;
    const std::size_t k = 2 + rng() % (v - 2);
    std::vector<Block> blocks;
    for (std::size_t j = 0, b = rng() % 15; j < b; ++j) {
      std::vector<Point> pts(v);
      for (std::size_t p = 0; p < v; ++p) pts[p] = static_cast<Point>(p);
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(k);
      blocks.emplace_back(pts);
    }
    Design d(PointSet(v), blocks, k);
    CHECK(io::parse_text(io::format_text(d)).design == d);
    CHECK(io::from_json(io::to_json(d)).design == d);
  }
}

TEST_CASE("provenance listing") {
  auto built = build_catalog_design(catalog_entry("3-(24,12,15)"));
  auto text = io::format_provenance(built);
  CHECK(text.rfind("# block class indexing_block\n", 0) == 0);
  CHECK(text.find("\n0 0 0\n") != std::string::npos);
  CHECK(text.find("\n137 22 5\n") != std::string::npos);
}

TEST_CASE("files load by content") {
  auto dir = std::filesystem::temp_directory_path() / "srd_io_test";
  std::filesystem::create_directories(dir);
  auto ag = affine_hyperplane_design(2, 3);
  io::write_file(dir / "ag.txt", io::format_text(ag.design, ag.resolution));
  io::write_file(dir / "ag.json", io::to_json(ag.design, &ag.resolution).dump(1));
  auto a = io::load(dir / "ag.txt");
  auto b = io::load(dir / "ag.json");
  CHECK(a.design.b() == 12);
  CHECK(b.design == ag.design);
  CHECK(a.resolution->classes.size() == 4);
  CHECK_ERROR(io::load(dir / "missing.txt"), ErrorKind::Parse);
  std::filesystem::remove_all(dir);
}
