#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace srd {

using Point = std::uint32_t;

// A labeled point set. Cyclic designs use points 0..n-1 for Z_n and index n
// for the fixed point, labeled "inf".
class PointSet {
 public:
  explicit PointSet(std::size_t size);
  PointSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Falls back to the decimal index when unlabeled.
  std::string label(Point p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

// A set of points stored in strictly increasing order.
class Block {
 public:
  Block() = default;
  // Sorts the input; throws InvalidDesign on a repeated point.
  explicit Block(std::vector<Point> members);
  Block(std::initializer_list<Point> members);

  const std::vector<Point>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Point p) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  std::vector<Point> members_;
};

// A multiset of equal-size blocks. Block order is significant (resolutions and
// provenance refer to blocks by position) and duplicates are kept.
class Design {
 public:
  Design(PointSet points, std::vector<Block> blocks, std::size_t k);
  // Infers k from the first block; requires at least one block.
  Design(std::size_t v, std::vector<Block> blocks);

  const PointSet& points() const noexcept { return points_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t v() const noexcept { return points_.size(); }
  std::size_t b() const noexcept { return blocks_.size(); }
  std::size_t k() const noexcept { return k_; }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  PointSet points_;
  std::vector<Block> blocks_;
  std::size_t k_;
};

// Exact parameter bundle of a t-(v,k,lambda) design viewed as a (v,b,r,k)-IBD.
// For t = 1 lambda equals r.
struct DesignParams {
  std::int64_t t = 1;
  std::int64_t v = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;

  // Derives b and r from lambda; throws NonIntegral if they are not integers.
  static DesignParams t_design(std::int64_t t, std::int64_t v, std::int64_t k,
                               std::int64_t lambda);
  static DesignParams bibd(std::int64_t v, std::int64_t k, std::int64_t lambda);
  static DesignParams ibd(std::int64_t v, std::int64_t b, std::int64_t r,
                          std::int64_t k);

  // Blocks per parallel class, v/k. Throws DivisibilityViolation if k does not
  // divide v.
  std::int64_t class_size() const;

  std::string to_string() const;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// counts[i] = number of unordered pairs of distinct block instances meeting in
// exactly i points.
struct IntersectionProfile {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  bool simple() const { return counts.empty() || counts.back() == 0; }

  friend bool operator==(const IntersectionProfile&,
                         const IntersectionProfile&) = default;
};

}  // namespace srd
