#include "srd/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bit_rows.hpp"
#include "srd/error.hpp"

namespace srd {

namespace {

std::size_t class_size_of(const Design& design) {
  if (design.v() % design.k() != 0) {
    throw Error(ErrorKind::DivisibilityViolation,
                "k = " + std::to_string(design.k()) + " does not divide v = " +
                    std::to_string(design.v()));
  }
  return design.v() / design.k();
}

ResolutionCheck fail(std::string why) { return ResolutionCheck{false, std::move(why)}; }

// Content id per block instance: equal blocks share an id, ids follow sorted
// block order.
std::vector<std::size_t> content_ids(const Design& design) {
  std::vector<Block> distinct(design.blocks());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> ids(design.b());
  for (std::size_t i = 0; i < design.b(); ++i) {
    ids[i] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), design.block(i)) -
        distinct.begin());
  }
  return ids;
}

using ContentPartition = std::vector<std::vector<std::size_t>>;

ContentPartition content_partition(const std::vector<std::size_t>& ids,
                                   const Resolution& res) {
  ContentPartition out;
  out.reserve(res.classes.size());
  for (const auto& cls : res.classes) {
    std::vector<std::size_t> c;
    c.reserve(cls.block_refs.size());
    for (auto ref : cls.block_refs) c.push_back(ids.at(ref));
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Resolution realise(const ContentPartition& partition,
                   const std::vector<std::size_t>& ids) {
  std::map<std::size_t, std::vector<std::size_t>> instances;
  for (std::size_t i = 0; i < ids.size(); ++i) instances[ids[i]].push_back(i);
  std::map<std::size_t, std::size_t> next;
  Resolution res;
  for (const auto& cls : partition) {
    ParallelClass pc;
    for (auto id : cls) pc.block_refs.push_back(instances[id][next[id]++]);
    res.classes.push_back(std::move(pc));
  }
  return res;
}

}  // namespace

ResolutionCheck verify_parallel_class(const Design& design,
                                      const ParallelClass& cls) {
  if (design.v() % design.k() != 0) {
    return fail("k does not divide v");
  }
  const std::size_t w = design.v() / design.k();
  if (cls.block_refs.size() != w) {
    return fail("class has " + std::to_string(cls.block_refs.size()) +
                " blocks, expected " + std::to_string(w));
  }
  std::vector<bool> covered(design.v(), false);
  for (auto ref : cls.block_refs) {
    if (ref >= design.b()) {
      return fail("block ref " + std::to_string(ref) + " out of range");
    }
    for (Point p : design.block(ref)) {
      if (covered[p]) {
        return fail("point " + std::to_string(p) + " covered twice in class");
      }
      covered[p] = true;
    }
  }
  // w disjoint k-blocks cover all v = wk points.
  return ResolutionCheck{true, {}};
}

ResolutionCheck verify_resolution(const Design& design, const Resolution& res) {
  std::vector<std::size_t> uses(design.b(), 0);
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    auto check = verify_parallel_class(design, res.classes[i]);
    if (!check) return fail("class " + std::to_string(i) + ": " + check.diagnostic);
    for (auto ref : res.classes[i].block_refs) ++uses[ref];
  }
  for (std::size_t i = 0; i < uses.size(); ++i) {
    if (uses[i] != 1) {
      return fail("block " + std::to_string(i) + " used " +
                  std::to_string(uses[i]) + " times");
    }
  }
  return ResolutionCheck{true, {}};
}

Resolution canonical_resolution(const Design& design, const Resolution& res) {
  auto check = verify_resolution(design, res);
  if (!check) throw Error(ErrorKind::InvalidResolution, check.diagnostic);
  const auto ids = content_ids(design);
  return realise(content_partition(ids, res), ids);
}

bool same_resolution(const Design& design, const Resolution& a,
                     const Resolution& b) {
  return canonical_resolution(design, a) == canonical_resolution(design, b);
}

namespace {

// Builds classes one at a time. Each new class starts with the lowest unused
// block instance; the rest of the class is filled by covering the lowest
// uncovered point. Among equal blocks only the lowest unused copy is tried.
class ResolutionSearch {
 public:
  ResolutionSearch(const Design& design, const SearchOptions& options)
      : design_(design),
        options_(options),
        rows_(design),
        w_(class_size_of(design)),
        ids_(content_ids(design)),
        used_(design.b(), false),
        next_copy_(*std::max_element(ids_.begin(), ids_.end()) + 1, 0),
        copies_(next_copy_.size()),
        by_point_(design.v()),
        mask_(rows_.words(), 0) {
    for (std::size_t i = 0; i < design.b(); ++i) copies_[ids_[i]].push_back(i);
    // One representative per content for each point, in input order.
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      for (Point p : design.block(copies_[c].front())) by_point_[p].push_back(c);
    }
    for (auto& list : by_point_) {
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return copies_[a].front() < copies_[b].front();
      });
    }
  }

  std::vector<Resolution> run() {
    start_class();
    std::vector<Resolution> out;
    for (const auto& partition : found_order_) out.push_back(realise(partition, ids_));
    return out;
  }

 private:
  bool done() const { return found_order_.size() >= options_.limit; }

  void tick() {
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "resolution search exceeded " +
                      std::to_string(options_.node_budget) + " nodes");
    }
  }

  void place(std::size_t inst) {
    used_[inst] = true;
    ++next_copy_[ids_[inst]];
    current_.block_refs.push_back(inst);
    for (Point p : design_.block(inst)) detail::set_bit(mask_, p);
  }

  void unplace(std::size_t inst) {
    used_[inst] = false;
    --next_copy_[ids_[inst]];
    current_.block_refs.pop_back();
    auto row = rows_.row(inst);
    for (std::size_t i = 0; i < mask_.size(); ++i) mask_[i] &= ~row[i];
  }

  void start_class() {
    while (lowest_unused_ < used_.size() && used_[lowest_unused_]) ++lowest_unused_;
    if (lowest_unused_ == used_.size()) {
      record();
      return;
    }
    const std::size_t saved_lowest = lowest_unused_;
    const std::size_t first = lowest_unused_;
    tick();
    place(first);
    fill_class();
    unplace(first);
    lowest_unused_ = saved_lowest;
  }

  void fill_class() {
    if (current_.block_refs.size() == w_) {
      auto saved_mask = mask_;
      classes_.push_back(std::move(current_));
      current_ = {};
      std::fill(mask_.begin(), mask_.end(), 0);
      start_class();
      current_ = std::move(classes_.back());
      classes_.pop_back();
      mask_ = std::move(saved_mask);
      return;
    }
    Point p = 0;
    while (detail::test_bit(mask_, p)) ++p;
    for (std::size_t c : by_point_[p]) {
      if (done()) return;
      if (next_copy_[c] == copies_[c].size()) continue;
      const std::size_t inst = copies_[c][next_copy_[c]];
      if (!rows_.disjoint(inst, mask_)) continue;
      tick();
      place(inst);
      fill_class();
      unplace(inst);
    }
  }

  void record() {
    Resolution res{classes_};
    auto partition = content_partition(ids_, res);
    if (seen_.insert(partition).second) found_order_.push_back(std::move(partition));
  }

  const Design& design_;
  SearchOptions options_;
  detail::BitRows rows_;
  std::size_t w_;
  std::vector<std::size_t> ids_;
  std::vector<bool> used_;
  std::vector<std::size_t> next_copy_;
  std::vector<std::vector<std::size_t>> copies_;
  std::vector<std::vector<std::size_t>> by_point_;
  std::vector<std::uint64_t> mask_;
  std::vector<ParallelClass> classes_;
  ParallelClass current_;
  std::size_t lowest_unused_ = 0;
  std::uint64_t nodes_ = 0;
  std::set<ContentPartition> seen_;
  std::vector<ContentPartition> found_order_;
};

}  // namespace

std::vector<Resolution> find_resolutions(const Design& design,
                                         const SearchOptions& options) {
  if (options.limit == 0) {
    throw Error(ErrorKind::InvalidArgument, "resolution limit must be positive");
  }
  class_size_of(design);
  if (design.b() == 0) return {Resolution{}};
  return ResolutionSearch(design, options).run();
}

bool has_unique_resolution(const Design& design, std::uint64_t node_budget) {
  auto found = find_resolutions(design, SearchOptions{2, node_budget});
  if (found.empty()) {
    throw Error(ErrorKind::NotResolvable, "design has no resolution");
  }
  return found.size() == 1;
}

namespace {

std::size_t content_overlap(const Design& design,
                            const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b) {
  std::vector<Block> x, y;
  for (auto r : a) x.push_back(design.block(r));
  for (auto r : b) y.push_back(design.block(r));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<Block> common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(common));
  return common.size();
}

void require_class(const Design& design, const ParallelClass& cls,
                   const char* which) {
  auto check = verify_parallel_class(design, cls);
  if (!check) {
    throw Error(ErrorKind::InvalidResolution,
                std::string(which) + ": " + check.diagnostic);
  }
}

// Depth-first enumeration of every parallel class inside a small block pool.
class PoolClasses {
 public:
  PoolClasses(const Design& design, std::vector<std::size_t> pool)
      : design_(design), pool_(std::move(pool)), rows_(design.v(), pool_.size()),
        mask_(rows_.words(), 0), taken_(pool_.size(), false) {
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      for (Point p : design.block(pool_[i])) rows_.set(i, p);
    }
    w_ = design.v() / design.k();
  }

  template <typename Fn>
  void each(Fn&& visit) {
    descend(visit);
  }

 private:
  template <typename Fn>
  void descend(Fn& visit) {
    if (count_ == w_) {
      visit(taken_);
      return;
    }
    Point p = 0;
    while (detail::test_bit(mask_, p)) ++p;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (taken_[i] || !detail::test_bit(rows_.row(i), p) ||
          !rows_.disjoint(i, mask_)) {
        continue;
      }
      taken_[i] = true;
      ++count_;
      auto saved = mask_;
      for (Point q : design_.block(pool_[i])) detail::set_bit(mask_, q);
      descend(visit);
      mask_ = std::move(saved);
      --count_;
      taken_[i] = false;
    }
  }

  const Design& design_;
  std::vector<std::size_t> pool_;
  detail::BitRows rows_;
  std::vector<std::uint64_t> mask_;
  std::vector<bool> taken_;
  std::size_t count_ = 0;
  std::size_t w_ = 0;
};

}  // namespace

std::vector<PrpWitness> prp_witnesses(const Design& design,
                                      const ParallelClass& class_a,
                                      const ParallelClass& class_b) {
  require_class(design, class_a, "first class");
  require_class(design, class_b, "second class");
  const std::size_t w = class_a.block_refs.size();
  std::vector<std::size_t> pool = class_a.block_refs;
  pool.insert(pool.end(), class_b.block_refs.begin(), class_b.block_refs.end());

  std::map<std::size_t, PrpWitness> by_alpha;
  PoolClasses classes(design, pool);
  classes.each([&](const std::vector<bool>& taken) {
    PrpWitness witness;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      (taken[i] ? witness.first : witness.second).block_refs.push_back(pool[i]);
    }
    if (!verify_parallel_class(design, witness.second)) return;
    witness.alpha = content_overlap(design, witness.first.block_refs,
                                    class_a.block_refs);
    if (witness.alpha >= 1 && witness.alpha <= w - 1) {
      by_alpha.emplace(witness.alpha, std::move(witness));
    }
  });

  std::vector<PrpWitness> out;
  for (auto& [alpha, witness] : by_alpha) out.push_back(std::move(witness));
  return out;
}

namespace {

void require_alpha(const Design& design, std::size_t alpha) {
  const std::size_t w = class_size_of(design);
  if (alpha < 1 || alpha + 1 > w) {
    throw Error(ErrorKind::BadAlpha, "alpha = " + std::to_string(alpha) +
                                         " not in [1, " + std::to_string(w - 1) +
                                         "]");
  }
}

}  // namespace

std::optional<PrpWitness> find_alpha_prp(const Design& design,
                                         const ParallelClass& class_a,
                                         const ParallelClass& class_b,
                                         std::size_t alpha) {
  require_alpha(design, alpha);
  for (auto& witness : prp_witnesses(design, class_a, class_b)) {
    if (witness.alpha == alpha) return witness;
  }
  return std::nullopt;
}

bool is_alpha_prp(const Design& design, const ParallelClass& class_a,
                  const ParallelClass& class_b, std::size_t alpha) {
  return find_alpha_prp(design, class_a, class_b, alpha).has_value();
}

bool validate_prp_witness(const Design& design, const ParallelClass& class_a,
                          const ParallelClass& class_b,
                          const PrpWitness& witness) {
  if (!verify_parallel_class(design, witness.first) ||
      !verify_parallel_class(design, witness.second)) {
    return false;
  }
  auto contents = [&](const ParallelClass& x, const ParallelClass& y) {
    std::vector<Block> out;
    for (auto r : x.block_refs) out.push_back(design.block(r));
    for (auto r : y.block_refs) out.push_back(design.block(r));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (contents(witness.first, witness.second) != contents(class_a, class_b)) {
    return false;
  }
  const std::size_t w = class_a.block_refs.size();
  return witness.alpha >= 1 && witness.alpha < w &&
         content_overlap(design, witness.first.block_refs,
                         class_a.block_refs) == witness.alpha;
}

std::vector<PrpViolation> prp_violations(
    const Design& design, const Resolution& res,
    const std::vector<std::size_t>& alpha_filter) {
  for (auto alpha : alpha_filter) require_alpha(design, alpha);
  auto check = verify_resolution(design, res);
  if (!check) throw Error(ErrorKind::InvalidResolution, check.diagnostic);

  std::vector<PrpViolation> out;
  const std::size_t r = res.classes.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (auto& witness :
           prp_witnesses(design, res.classes[i], res.classes[j])) {
        if (!alpha_filter.empty() &&
            std::find(alpha_filter.begin(), alpha_filter.end(),
                      witness.alpha) == alpha_filter.end()) {
          continue;
        }
        out.push_back(PrpViolation{i, j, witness.alpha, std::move(witness)});
      }
    }
  }
  return out;
}

}  // namespace srd
