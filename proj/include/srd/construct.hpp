#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "srd/design.hpp"
#include "srd/exact.hpp"
#include "srd/resolution.hpp"

namespace srd {

// Which master class and which indexing block produced a constructed block.
struct Provenance {
  std::size_t master_class = 0;
  std::size_t indexing_block = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ConstructedDesign {
  Design design;
  std::vector<Provenance> provenance;  // parallel to design.blocks()
};

// Parameters of the indexing design on w points. lambda_prime is the
// 3-coverage (0 when k' = 2), lambda2_prime the pair coverage.
struct IndexingParams {
  std::int64_t w = 0;
  std::int64_t b_prime = 0;
  std::int64_t r_prime = 0;
  std::int64_t k_prime = 0;
  std::int64_t lambda_prime = 0;
  std::int64_t lambda2_prime = 0;
  // False when the measured design is not pair (resp. triple) balanced; the
  // corresponding coverage field is then meaningless.
  bool pair_balanced = true;
  bool triple_balanced = true;

  // All k'-subsets of a w-set.
  static IndexingParams trivial(std::int64_t w, std::int64_t k_prime);
  // Measured from a concrete design, which must be an IBD.
  static IndexingParams measure(const Design& indexing);
};

// For every class i of the master resolution and every indexing block C, the
// union of the blocks of class i at the positions listed in C. Output is
// ordered by (class index, indexing block index); duplicates are kept.
// Throws DimensionMismatch if the indexing design is not on v/k points.
ConstructedDesign union_construction(const Design& master,
                                     const Resolution& master_res,
                                     const Design& indexing);

// (v, r b', r r', k k') as a 1-design.
DesignParams predict_ibd_params(const DesignParams& master,
                                const IndexingParams& indexing);

// Pair coverage lambda r' + (r - lambda) lambda2'.
std::int64_t predict_bibd_lambda(const DesignParams& master,
                                 const IndexingParams& indexing);

// Number of constructed blocks containing a triple that lies in `alpha`
// master blocks: alpha r' + 3(lambda - alpha) lambda2'
// + (r - alpha - 3(lambda - alpha)) lambda'.
std::int64_t triple_coverage_by_alpha(const DesignParams& master,
                                      const IndexingParams& indexing,
                                      std::int64_t alpha);

enum class ThreeDesignCase {
  MasterIs3Design,
  MasterBlockSize2,
  KPrimeHalfW,
  Not3Design,
};

const char* to_string(ThreeDesignCase c) noexcept;

// Triple coverage written as c1 + alpha * c2. For k' > 2 the coefficients are
// those of a 3-(w,k',lambda') indexing design; for k' = 2 they are those of
// the pair design (lambda' = 0).
struct ThreeDesignAnalysis {
  Rational c1;
  Rational c2;
  ThreeDesignCase verdict = ThreeDesignCase::Not3Design;
  // Set for k = 2 with k' = 2, where only the lambda' = 0 counting argument
  // applies.
  bool pair_master_pair_indexing = false;

  bool is_three_design() const noexcept {
    return verdict != ThreeDesignCase::Not3Design;
  }
};

// The master params must describe at least a 2-design. lambda_prime scales
// c1 and c2 and defaults to 1 (coefficients per unit lambda').
ThreeDesignAnalysis classify_three_design(const DesignParams& master,
                                          std::int64_t k_prime,
                                          std::int64_t lambda_prime = 1);

// mu = lambda' (3 lambda w / (w - 4) + r); requires w even and w > 4.
std::int64_t predicted_mu(const DesignParams& master, std::int64_t lambda_prime);

// 3 lambda for masters with v/k = 4.
std::int64_t predicted_mu_w4(const DesignParams& master);

// lambda' (q^m - 4) / (q - 4) for q = 2^n > 4.
std::int64_t predicted_mu_affine(std::int64_t q, std::int64_t m,
                                 std::int64_t lambda_prime);

// Groups constructed blocks (i, C) by (i, class of C in the indexing
// resolution). The result is verified before it is returned.
Resolution inherited_resolution(const ConstructedDesign& constructed,
                                const Design& indexing,
                                const Resolution& indexing_res);

enum class SimplicityVerdict { SimpleGuaranteed, NotSimple, Unknown };

const char* to_string(SimplicityVerdict v) noexcept;

// k'-PRP-free resolution => simple. With a trivial indexing design a k'-PRP
// violation => not simple.
SimplicityVerdict simplicity_from_prp(const Design& master,
                                      const Resolution& master_res,
                                      std::size_t k_prime,
                                      bool indexing_is_trivial);

}  // namespace srd
