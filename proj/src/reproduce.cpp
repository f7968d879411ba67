#include "srd/reproduce.hpp"

#include "srd/generators.hpp"

namespace srd {

Design halving_indexing_design(std::size_t w) { return trivial_design(w, w / 2); }

ConstructedDesign build_catalog_design(const CatalogEntry& entry) {
  const ResolvedDesign master = cyclic_develop(entry.base_spec);
  const std::size_t w = master.design.v() / master.design.k();
  return union_construction(master.design, master.resolution,
                            halving_indexing_design(w));
}

Reproduction reproduce(const CatalogEntry& entry) {
  Reproduction out;
  out.name = entry.name;

  const ResolvedDesign master = cyclic_develop(entry.base_spec);
  out.observed_master = verify_ibd(master.design);
  if (auto pair = as_t_design(master.design, 2)) out.observed_master = *pair;
  out.master_ok = out.observed_master == entry.master_params &&
                  verify_resolution(master.design, master.resolution).ok;

  const std::int64_t w = entry.master_params.class_size();
  out.predicted_mu =
      w == 4 ? predicted_mu_w4(entry.master_params)
             : predicted_mu(entry.master_params,
                            IndexingParams::trivial(w, w / 2).lambda_prime);

  const ConstructedDesign built = union_construction(
      master.design, master.resolution, halving_indexing_design(w));
  out.blocks = built.design.b();
  out.triple_spectrum = t_coverage_spectrum(built.design, 3);
  out.observed_mu = uniform_coverage(out.triple_spectrum);
  out.mu_ok = out.observed_mu &&
              static_cast<std::int64_t>(*out.observed_mu) == entry.expected_mu &&
              out.predicted_mu == entry.expected_mu;
  out.profile = intersection_profile(built.design);
  out.profile_ok = out.profile == entry.expected_profile;
  out.simple = is_simple(built.design);
  return out;
}

}  // namespace srd
