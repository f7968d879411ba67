#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "srd/catalog.hpp"
#include "srd/construct.hpp"
#include "srd/verify.hpp"

namespace srd {

// Develops a catalog master, builds the 3-design with the trivial indexing
// design on w points with block size w/2, and compares against the entry.
struct Reproduction {
  std::string name;
  DesignParams observed_master;  // t = 2 when pair balanced, else the IBD
  bool master_ok = false;
  std::int64_t predicted_mu = 0;
  CoverageSpectrum triple_spectrum;
  std::optional<std::uint64_t> observed_mu;
  bool mu_ok = false;
  IntersectionProfile profile;
  bool profile_ok = false;
  bool simple = false;
  std::uint64_t blocks = 0;

  bool ok() const { return master_ok && mu_ok && profile_ok && simple; }
};

// The trivial indexing design used for a master with w blocks per class.
Design halving_indexing_design(std::size_t w);

// Develops the entry's master and its translate resolution, then constructs.
ConstructedDesign build_catalog_design(const CatalogEntry& entry);

Reproduction reproduce(const CatalogEntry& entry);

}  // namespace srd
