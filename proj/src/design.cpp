#include "srd/design.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "srd/error.hpp"
#include "srd/exact.hpp"

namespace srd {

PointSet::PointSet(std::size_t size) : size_(size) {
  if (size < 2) {
    throw Error(ErrorKind::InvalidDesign, "point set needs at least 2 points");
  }
}

PointSet::PointSet(std::size_t size, std::vector<std::string> labels)
    : PointSet(size) {
  if (labels.empty()) return;
  if (labels.size() != size) {
    throw Error(ErrorKind::InvalidDesign,
                "expected " + std::to_string(size) + " labels, got " +
                    std::to_string(labels.size()));
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw Error(ErrorKind::InvalidDesign, "point labels are not distinct");
  }
  labels_ = std::move(labels);
}

std::string PointSet::label(Point p) const {
  if (p >= size_) {
    throw Error(ErrorKind::InvalidArgument,
                "point " + std::to_string(p) + " out of range");
  }
  return labels_.empty() ? std::to_string(p) : labels_[p];
}

Block::Block(std::vector<Point> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::InvalidDesign, "block repeats a point");
  }
}

Block::Block(std::initializer_list<Point> members)
    : Block(std::vector<Point>(members)) {}

bool Block::contains(Point p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

Design::Design(PointSet points, std::vector<Block> blocks, std::size_t k)
    : points_(std::move(points)), blocks_(std::move(blocks)), k_(k) {
  const std::size_t v = points_.size();
  if (k_ < 2 || k_ >= v) {
    throw Error(ErrorKind::InvalidDesign,
                "block size " + std::to_string(k_) + " not in [2, v) for v = " +
                    std::to_string(v));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& block = blocks_[i];
    if (block.size() != k_) {
      throw Error(ErrorKind::InvalidDesign,
                  "block " + std::to_string(i) + " has " +
                      std::to_string(block.size()) + " points, expected " +
                      std::to_string(k_));
    }
    if (block.members().back() >= v) {
      throw Error(ErrorKind::InvalidDesign,
                  "block " + std::to_string(i) + " has a point outside [0, " +
                      std::to_string(v) + ")");
    }
  }
}

namespace {

std::size_t first_block_size(const std::vector<Block>& blocks) {
  if (blocks.empty()) {
    throw Error(ErrorKind::InvalidDesign, "cannot infer k from zero blocks");
  }
  return blocks.front().size();
}

}  // namespace

Design::Design(std::size_t v, std::vector<Block> blocks)
    : Design(PointSet(v), blocks, first_block_size(blocks)) {}

DesignParams DesignParams::t_design(std::int64_t t, std::int64_t v,
                                    std::int64_t k, std::int64_t lambda) {
  if (t < 1 || t > k || k >= v || lambda < 0) {
    throw Error(ErrorKind::InvalidArgument,
                "invalid t-design parameters t=" + std::to_string(t) +
                    " v=" + std::to_string(v) + " k=" + std::to_string(k));
  }
  auto lam = [&](std::int64_t j) {
    Rational value(lambda * binomial(v - j, t - j), binomial(k - j, t - j));
    return to_int64(value, "lambda_" + std::to_string(j));
  };
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.b = lam(0);
  p.r = lam(1);
  return p;
}

DesignParams DesignParams::bibd(std::int64_t v, std::int64_t k,
                                std::int64_t lambda) {
  return t_design(2, v, k, lambda);
}

DesignParams DesignParams::ibd(std::int64_t v, std::int64_t b, std::int64_t r,
                               std::int64_t k) {
  if (b * k != v * r) {
    throw Error(ErrorKind::InvalidArgument, "IBD parameters violate bk = vr");
  }
  return DesignParams{1, v, b, r, k, r};
}

std::int64_t DesignParams::class_size() const {
  if (k <= 0 || v % k != 0) {
    throw Error(ErrorKind::DivisibilityViolation,
                "k = " + std::to_string(k) + " does not divide v = " +
                    std::to_string(v));
  }
  return v / k;
}

std::string DesignParams::to_string() const {
  std::ostringstream os;
  os << t << "-(" << v << "," << k << "," << lambda << ") b=" << b
     << " r=" << r;
  return os.str();
}

std::uint64_t IntersectionProfile::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum = checked_add(sum, c);
  return sum;
}

}  // namespace srd
