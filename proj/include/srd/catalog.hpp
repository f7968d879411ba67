#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srd/design.hpp"
#include "srd/generators.hpp"

namespace srd {

// A cyclic resolvable master design whose construction with the trivial
// 3-(w, w/2, lambda') indexing design (or the pair design when w = 4) yields a
// simple 3-(v, v/2, mu) design.
struct CatalogEntry {
  std::string name;  // e.g. "3-(24,12,15)"
  DesignParams master_params;
  CyclicBaseSpec base_spec;
  std::int64_t expected_mu = 0;
  IntersectionProfile expected_profile;
  std::string source;
};

// Entries in table order.
const std::vector<CatalogEntry>& catalog();

// Throws UnknownEntry for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace srd
