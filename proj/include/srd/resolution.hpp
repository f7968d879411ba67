#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srd/design.hpp"

namespace srd {

// w = v/k indices into the parent design's block list. Position j within the
// class is the block the construction indexes as j.
struct ParallelClass {
  std::vector<std::size_t> block_refs;

  friend bool operator==(const ParallelClass&, const ParallelClass&) = default;
};

struct Resolution {
  std::vector<ParallelClass> classes;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct ResolutionCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

ResolutionCheck verify_parallel_class(const Design& design,
                                      const ParallelClass& cls);
ResolutionCheck verify_resolution(const Design& design, const Resolution& res);

// Canonical representative of a resolution as an unordered partition into
// classes of block contents. Duplicate block instances are interchangeable,
// so two resolutions that differ only in which copy of a repeated block sits
// in which class share a canonical form. Idempotent.
Resolution canonical_resolution(const Design& design, const Resolution& res);

bool same_resolution(const Design& design, const Resolution& a,
                     const Resolution& b);

struct SearchOptions {
  std::size_t limit = 1;
  std::uint64_t node_budget = 100'000'000;
};

// Exact-cover backtracking over block instances. Returns up to `limit`
// pairwise distinct canonical resolutions; empty means the design is not
// resolvable. Throws SearchBudgetExceeded if the budget runs out first.
std::vector<Resolution> find_resolutions(const Design& design,
                                         const SearchOptions& options = {});

// Throws NotResolvable if no resolution exists.
bool has_unique_resolution(const Design& design,
                           std::uint64_t node_budget = 100'000'000);

// Replacement classes for two parallel classes: together they use exactly the
// 2w blocks of the original pair.
struct PrpWitness {
  ParallelClass first;
  ParallelClass second;
  std::size_t alpha = 0;
};

// Every alpha in [1, w-1] realised by some replacement pair, with one witness
// per alpha, ordered by alpha.
std::vector<PrpWitness> prp_witnesses(const Design& design,
                                      const ParallelClass& class_a,
                                      const ParallelClass& class_b);

std::optional<PrpWitness> find_alpha_prp(const Design& design,
                                         const ParallelClass& class_a,
                                         const ParallelClass& class_b,
                                         std::size_t alpha);

// Throws BadAlpha unless 1 <= alpha <= w-1.
bool is_alpha_prp(const Design& design, const ParallelClass& class_a,
                  const ParallelClass& class_b, std::size_t alpha);

// Checks a witness against the defining equation: both replacement classes
// are parallel classes, their union equals the union of the originals as a
// block multiset, and `first` shares exactly alpha blocks with class_a.
bool validate_prp_witness(const Design& design, const ParallelClass& class_a,
                          const ParallelClass& class_b,
                          const PrpWitness& witness);

struct PrpViolation {
  std::size_t first_class = 0;
  std::size_t second_class = 0;
  std::size_t alpha = 0;
  PrpWitness witness;
};

// All (i, j, alpha) with i < j whose classes satisfy alpha-PRP. An empty
// filter means every alpha in [1, w-1].
std::vector<PrpViolation> prp_violations(
    const Design& design, const Resolution& res,
    const std::vector<std::size_t>& alpha_filter = {});

}  // namespace srd
