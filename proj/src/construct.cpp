#include "srd/construct.hpp"

#include <map>

#include "srd/error.hpp"
#include "srd/verify.hpp"

namespace srd {

IndexingParams IndexingParams::trivial(std::int64_t w, std::int64_t k_prime) {
  if (k_prime < 2 || k_prime >= w) {
    throw Error(ErrorKind::InvalidArgument,
                "indexing block size must be in [2, w)");
  }
  IndexingParams p;
  p.w = w;
  p.k_prime = k_prime;
  p.b_prime = to_int64(binomial(w, k_prime), "b'");
  p.r_prime = to_int64(binomial(w - 1, k_prime - 1), "r'");
  p.lambda2_prime = to_int64(binomial(w - 2, k_prime - 2), "lambda2'");
  p.lambda_prime =
      k_prime >= 3 ? to_int64(binomial(w - 3, k_prime - 3), "lambda'") : 0;
  return p;
}

IndexingParams IndexingParams::measure(const Design& indexing) {
  const DesignParams ibd = verify_ibd(indexing);
  IndexingParams p;
  p.w = ibd.v;
  p.b_prime = ibd.b;
  p.r_prime = ibd.r;
  p.k_prime = ibd.k;
  if (auto l2 = uniform_coverage(t_coverage_spectrum(indexing, 2))) {
    p.lambda2_prime = static_cast<std::int64_t>(*l2);
  } else {
    p.pair_balanced = false;
  }
  if (p.k_prime >= 3) {
    if (auto l3 = uniform_coverage(t_coverage_spectrum(indexing, 3))) {
      p.lambda_prime = static_cast<std::int64_t>(*l3);
    } else {
      p.triple_balanced = false;
    }
  }
  return p;
}

ConstructedDesign union_construction(const Design& master,
                                     const Resolution& master_res,
                                     const Design& indexing) {
  auto check = verify_resolution(master, master_res);
  if (!check) {
    throw Error(ErrorKind::InvalidResolution,
                "master resolution: " + check.diagnostic);
  }
  const std::size_t w = master.v() / master.k();
  if (indexing.v() != w) {
    throw Error(ErrorKind::DimensionMismatch,
                "indexing design has " + std::to_string(indexing.v()) +
                    " points but master classes have " + std::to_string(w) +
                    " blocks");
  }

  std::vector<Block> blocks;
  std::vector<Provenance> provenance;
  blocks.reserve(master_res.classes.size() * indexing.b());
  provenance.reserve(blocks.capacity());
  for (std::size_t i = 0; i < master_res.classes.size(); ++i) {
    const auto& refs = master_res.classes[i].block_refs;
    for (std::size_t c = 0; c < indexing.b(); ++c) {
      std::vector<Point> members;
      members.reserve(master.k() * indexing.k());
      for (Point j : indexing.block(c)) {
        const auto& part = master.block(refs[j]).members();
        members.insert(members.end(), part.begin(), part.end());
      }
      blocks.emplace_back(std::move(members));
      provenance.push_back(Provenance{i, c});
    }
  }
  return ConstructedDesign{
      Design(master.points(), std::move(blocks), master.k() * indexing.k()),
      std::move(provenance)};
}

namespace {

void require_dimension(const DesignParams& master,
                       const IndexingParams& indexing) {
  if (indexing.w != master.class_size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "indexing w = " + std::to_string(indexing.w) +
                    " but master v/k = " + std::to_string(master.class_size()));
  }
}

void require_pair_balanced(const IndexingParams& indexing) {
  if (!indexing.pair_balanced) {
    throw Error(ErrorKind::InvalidArgument, "indexing design is not a 2-design");
  }
}

}  // namespace

DesignParams predict_ibd_params(const DesignParams& master,
                                const IndexingParams& indexing) {
  require_dimension(master, indexing);
  return DesignParams::ibd(master.v, master.r * indexing.b_prime,
                           master.r * indexing.r_prime,
                           master.k * indexing.k_prime);
}

std::int64_t predict_bibd_lambda(const DesignParams& master,
                                 const IndexingParams& indexing) {
  require_dimension(master, indexing);
  require_pair_balanced(indexing);
  const std::int64_t lambda = pair_lambda(master);
  return lambda * indexing.r_prime + (master.r - lambda) * indexing.lambda2_prime;
}

std::int64_t triple_coverage_by_alpha(const DesignParams& master,
                                      const IndexingParams& indexing,
                                      std::int64_t alpha) {
  require_dimension(master, indexing);
  require_pair_balanced(indexing);
  if (!indexing.triple_balanced) {
    throw Error(ErrorKind::InvalidArgument, "indexing design is not a 3-design");
  }
  const std::int64_t lambda = pair_lambda(master);
  if (alpha < 0 || alpha > lambda) {
    throw Error(ErrorKind::InvalidArgument,
                "alpha = " + std::to_string(alpha) + " not in [0, lambda]");
  }
  const std::int64_t split_classes = 3 * (lambda - alpha);
  return alpha * indexing.r_prime + split_classes * indexing.lambda2_prime +
         (master.r - alpha - split_classes) * indexing.lambda_prime;
}

const char* to_string(ThreeDesignCase c) noexcept {
  switch (c) {
    case ThreeDesignCase::MasterIs3Design: return "MasterIs3Design";
    case ThreeDesignCase::MasterBlockSize2: return "MasterBlockSize2";
    case ThreeDesignCase::KPrimeHalfW: return "KPrimeHalfW";
    case ThreeDesignCase::Not3Design: return "Not3Design";
  }
  return "?";
}

ThreeDesignAnalysis classify_three_design(const DesignParams& master,
                                          std::int64_t k_prime,
                                          std::int64_t lambda_prime) {
  const std::int64_t w = master.class_size();
  if (k_prime < 2 || k_prime >= w) {
    throw Error(ErrorKind::InvalidArgument,
                "k' = " + std::to_string(k_prime) + " not in [2, w) for w = " +
                    std::to_string(w));
  }
  const std::int64_t lambda = pair_lambda(master);
  const std::int64_t r = master.r;

  ThreeDesignAnalysis out;
  if (k_prime == 2) {
    // Pair indexing design: lambda' = 0, r' = w - 1, lambda2' = 1.
    out.c1 = Rational(3 * lambda);
    out.c2 = Rational(w - 4);
  } else {
    const Rational lp(lambda_prime);
    const Rational spread(w - 2, k_prime - 2);
    out.c1 = lp * (3 * lambda * spread + r - 3 * lambda);
    out.c2 = lp * (Rational((w - 1) * (w - 2), (k_prime - 1) * (k_prime - 2)) -
                   3 * spread + 2);
  }

  if (master.t >= 3) {
    out.verdict = ThreeDesignCase::MasterIs3Design;
  } else if (master.k == 2) {
    out.verdict = ThreeDesignCase::MasterBlockSize2;
    out.pair_master_pair_indexing = k_prime == 2;
  } else if (out.c2 == 0) {
    out.verdict = ThreeDesignCase::KPrimeHalfW;
  } else {
    out.verdict = ThreeDesignCase::Not3Design;
  }
  return out;
}

std::int64_t predicted_mu(const DesignParams& master,
                          std::int64_t lambda_prime) {
  const std::int64_t w = master.class_size();
  if (w <= 4 || w % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "needs v/k even and greater than 4, got " + std::to_string(w));
  }
  const std::int64_t lambda = pair_lambda(master);
  const Rational mu =
      lambda_prime * (Rational(3 * lambda * w, w - 4) + master.r);
  return to_int64(mu, "mu");
}

std::int64_t predicted_mu_w4(const DesignParams& master) {
  if (master.class_size() != 4) {
    throw Error(ErrorKind::InvalidArgument, "needs v/k = 4");
  }
  return 3 * pair_lambda(master);
}

std::int64_t predicted_mu_affine(std::int64_t q, std::int64_t m,
                                 std::int64_t lambda_prime) {
  if (q <= 4 || (q & (q - 1)) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "q must be a power of 2 greater than 4, got " + std::to_string(q));
  }
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "m must be at least 2");
  BigInt qm = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
  const Rational mu(lambda_prime * (qm - 4), BigInt(q - 4));
  return to_int64(mu, "mu");
}

Resolution inherited_resolution(const ConstructedDesign& constructed,
                                const Design& indexing,
                                const Resolution& indexing_res) {
  auto check = verify_resolution(indexing, indexing_res);
  if (!check) {
    throw Error(ErrorKind::InvalidResolution,
                "indexing resolution: " + check.diagnostic);
  }
  std::vector<std::size_t> class_of(indexing.b());
  for (std::size_t c = 0; c < indexing_res.classes.size(); ++c) {
    for (auto ref : indexing_res.classes[c].block_refs) class_of[ref] = c;
  }
  if (constructed.provenance.size() != constructed.design.b()) {
    throw Error(ErrorKind::InvalidArgument, "provenance does not match blocks");
  }

  std::map<std::pair<std::size_t, std::size_t>, ParallelClass> groups;
  for (std::size_t i = 0; i < constructed.provenance.size(); ++i) {
    const auto& prov = constructed.provenance[i];
    if (prov.indexing_block >= indexing.b()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "provenance refers to a block outside the indexing design");
    }
    groups[{prov.master_class, class_of[prov.indexing_block]}]
        .block_refs.push_back(i);
  }
  Resolution res;
  for (auto& [key, cls] : groups) res.classes.push_back(std::move(cls));
  auto out_check = verify_resolution(constructed.design, res);
  if (!out_check) {
    throw Error(ErrorKind::InvalidResolution,
                "inherited resolution: " + out_check.diagnostic);
  }
  return res;
}

const char* to_string(SimplicityVerdict v) noexcept {
  switch (v) {
    case SimplicityVerdict::SimpleGuaranteed: return "SimpleGuaranteed";
    case SimplicityVerdict::NotSimple: return "NotSimple";
    case SimplicityVerdict::Unknown: return "Unknown";
  }
  return "?";
}

SimplicityVerdict simplicity_from_prp(const Design& master,
                                      const Resolution& master_res,
                                      std::size_t k_prime,
                                      bool indexing_is_trivial) {
  if (prp_violations(master, master_res, {k_prime}).empty()) {
    return SimplicityVerdict::SimpleGuaranteed;
  }
  return indexing_is_trivial ? SimplicityVerdict::NotSimple
                             : SimplicityVerdict::Unknown;
}

}  // namespace srd
