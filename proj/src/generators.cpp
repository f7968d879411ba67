#include "srd/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "srd/error.hpp"
#include "srd/galois.hpp"

namespace srd {

Design trivial_design(std::size_t v, std::size_t k) {
  if (k < 2 || k >= v) {
    throw Error(ErrorKind::InvalidArgument, "trivial design needs 2 <= k < v");
  }
  std::vector<Block> blocks;
  std::vector<Point> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Point>(i);
  while (true) {
    blocks.emplace_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == v - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Design(PointSet(v), std::move(blocks), k);
}

namespace {

ResolvedDesign from_classes(PointSet points,
                            const std::vector<std::vector<Block>>& classes) {
  std::vector<Block> blocks;
  Resolution res;
  for (const auto& cls : classes) {
    ParallelClass pc;
    for (const auto& block : cls) {
      pc.block_refs.push_back(blocks.size());
      blocks.push_back(block);
    }
    res.classes.push_back(std::move(pc));
  }
  const std::size_t k = blocks.front().size();
  return ResolvedDesign{Design(std::move(points), std::move(blocks), k),
                        std::move(res)};
}

std::vector<std::vector<Block>> circle_classes(std::size_t v, Point offset) {
  const auto m = static_cast<Point>(v - 1);
  std::vector<std::vector<Block>> classes;
  for (Point i = 0; i < m; ++i) {
    std::vector<Block> cls;
    cls.push_back(Block{offset + i, offset + m});
    for (Point d = 1; d < v / 2; ++d) {
      cls.push_back(Block{offset + (i + d) % m, offset + (i + m - d) % m});
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

ResolvedDesign round_robin_one_factorization(std::size_t v) {
  if (v % 2 != 0) {
    throw Error(ErrorKind::OddPointCount, "v = " + std::to_string(v));
  }
  if (v < 4) throw Error(ErrorKind::InvalidArgument, "v must be at least 4");
  return from_classes(PointSet(v), circle_classes(v, 0));
}

ResolvedDesign sub_factorization_embedding(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  const std::size_t half = 2 * n;
  const auto low = circle_classes(half, 0);
  const auto high = circle_classes(half, static_cast<Point>(half));
  std::vector<std::vector<Block>> classes;
  for (std::size_t i = 0; i < low.size(); ++i) {
    std::vector<Block> cls = low[i];
    cls.insert(cls.end(), high[i].begin(), high[i].end());
    classes.push_back(std::move(cls));
  }
  for (std::size_t s = 0; s < half; ++s) {
    std::vector<Block> cls;
    for (std::size_t j = 0; j < half; ++j) {
      cls.push_back(Block{static_cast<Point>(j),
                          static_cast<Point>(half + (j + s) % half)});
    }
    classes.push_back(std::move(cls));
  }
  return from_classes(PointSet(2 * half), classes);
}

ResolvedDesign affine_hyperplane_design(std::size_t m, std::uint32_t q) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 2");
  gf::FieldSpec spec;
  try {
    spec = gf::field(q);
  } catch (const Error& e) {
    throw Error(ErrorKind::UnsupportedField, e.what());
  }
  const gf::FieldTables f(spec);

  std::size_t v = 1;
  for (std::size_t i = 0; i < m; ++i) v *= q;
  auto coords = [&](std::size_t index) {
    std::vector<std::uint32_t> x(m);
    for (std::size_t i = 0; i < m; ++i, index /= q) x[i] = static_cast<std::uint32_t>(index % q);
    return x;
  };
  auto scale = [&](std::uint32_t s, std::vector<std::uint32_t> a) {
    for (auto& c : a) c = f.mul(s, c);
    return a;
  };

  std::set<std::vector<std::uint32_t>> directions;
  for (std::size_t index = 1; index < v; ++index) {
    auto a = coords(index);
    auto best = a;
    for (std::uint32_t s = 2; s < q; ++s) best = std::min(best, scale(s, a));
    directions.insert(best);
  }

  std::vector<std::vector<Block>> classes;
  for (const auto& a : directions) {
    std::vector<std::vector<Point>> by_value(q);
    for (std::size_t index = 0; index < v; ++index) {
      const auto x = coords(index);
      std::uint32_t dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot = f.add(dot, f.mul(a[i], x[i]));
      by_value[dot].push_back(static_cast<Point>(index));
    }
    std::vector<Block> cls;
    for (auto& members : by_value) cls.emplace_back(std::move(members));
    classes.push_back(std::move(cls));
  }
  return from_classes(PointSet(v), classes);
}

void validate_base_spec(const CyclicBaseSpec& spec) {
  const std::size_t v = spec.v();
  if (spec.n < 1 || v < 2) {
    throw Error(ErrorKind::InvalidBaseClass, "too few points");
  }
  if (spec.base_class.size() < 2) {
    throw Error(ErrorKind::InvalidBaseClass, "base class needs at least 2 blocks");
  }
  const std::size_t k = spec.base_class.front().size();
  std::vector<int> seen(v, 0);
  for (const auto& block : spec.base_class) {
    if (block.size() != k) {
      throw Error(ErrorKind::InvalidBaseClass, "base blocks differ in size");
    }
    for (Point p : block) {
      if (p >= v) {
        throw Error(ErrorKind::InvalidBaseClass,
                    "point " + std::to_string(p) + " outside the point set");
      }
      if (seen[p]++) {
        throw Error(ErrorKind::InvalidBaseClass,
                    "point " + std::to_string(p) + " in two base blocks");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::InvalidBaseClass, "base class does not cover all points");
  }
}

ResolvedDesign cyclic_develop(const CyclicBaseSpec& spec) {
  validate_base_spec(spec);
  std::vector<std::string> labels;
  if (spec.has_infinity) {
    for (std::uint32_t x = 0; x < spec.n; ++x) labels.push_back(std::to_string(x));
    labels.push_back("inf");
  }
  std::vector<std::vector<Block>> classes;
  for (std::uint32_t t = 0; t < spec.n; ++t) {
    std::vector<Block> cls;
    for (const auto& base : spec.base_class) {
      std::vector<Point> members;
      for (Point x : base) members.push_back(x == spec.n ? x : (x + t) % spec.n);
      cls.emplace_back(std::move(members));
    }
    classes.push_back(std::move(cls));
  }
  return from_classes(PointSet(spec.v(), std::move(labels)), classes);
}

}  // namespace srd
