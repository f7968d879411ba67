#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srd/design.hpp"

namespace srd::detail {

// Blocks as rows of a dense bit matrix, one bit per point.
class BitRows {
 public:
  BitRows(std::size_t points, std::size_t rows)
      : words_((points + 63) / 64), data_(words_ * rows, 0) {}

  explicit BitRows(const Design& design)
      : BitRows(design.v(), design.b()) {
    for (std::size_t i = 0; i < design.b(); ++i) {
      for (Point p : design.block(i)) set(i, p);
    }
  }

  std::size_t words() const noexcept { return words_; }

  void set(std::size_t row, Point p) {
    data_[row * words_ + p / 64] |= std::uint64_t{1} << (p % 64);
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * words_, words_};
  }

  std::size_t intersection(std::size_t a, std::size_t b) const {
    const std::uint64_t* x = data_.data() + a * words_;
    const std::uint64_t* y = data_.data() + b * words_;
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_; ++w) n += std::popcount(x[w] & y[w]);
    return n;
  }

  bool disjoint(std::size_t a, std::span<const std::uint64_t> mask) const {
    const std::uint64_t* x = data_.data() + a * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if (x[w] & mask[w]) return false;
    }
    return true;
  }

  bool contains_all(std::size_t a, std::span<const std::uint64_t> mask) const {
    const std::uint64_t* x = data_.data() + a * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if ((x[w] & mask[w]) != mask[w]) return false;
    }
    return true;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

inline void set_bit(std::vector<std::uint64_t>& mask, Point p) {
  mask[p / 64] |= std::uint64_t{1} << (p % 64);
}

inline bool test_bit(std::span<const std::uint64_t> mask, Point p) {
  return (mask[p / 64] >> (p % 64)) & 1U;
}

}  // namespace srd::detail
