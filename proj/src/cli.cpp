#include "srd/cli.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srd/catalog.hpp"
#include "srd/construct.hpp"
#include "srd/error.hpp"
#include "srd/generators.hpp"
#include "srd/io.hpp"
#include "srd/reproduce.hpp"
#include "srd/resolution.hpp"
#include "srd/verify.hpp"

namespace srd::cli {

namespace {

using Json = nlohmann::ordered_json;

// Collects a command's results; rendered as text or JSON once the command
// finishes (or fails part-way).
struct Report {
  bool json = false;
  Json data = Json::object();
  std::ostringstream text;
  int status = kSuccess;

  void fail(int code) {
    if (status == kSuccess || code > status) status = code;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_spectrum(const CoverageSpectrum& spectrum) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [coverage, count] : spectrum) {
    if (!first) os << ", ";
    os << coverage << ": " << count;
    first = false;
  }
  os << '}';
  return os.str();
}

Json spectrum_json(const CoverageSpectrum& spectrum) {
  Json out = Json::object();
  for (auto [coverage, count] : spectrum) out[std::to_string(coverage)] = count;
  return out;
}

std::string format_counts(const std::vector<std::uint64_t>& counts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << ']';
  return os.str();
}

Json params_json(const DesignParams& p) {
  return Json{{"t", p.t}, {"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k},
              {"lambda", p.lambda}};
}

std::string ibd_text(const DesignParams& p) {
  std::ostringstream os;
  os << "(v,b,r,k) = (" << p.v << "," << p.b << "," << p.r << "," << p.k << ")";
  return os.str();
}

// Strongest t <= 3 for which the design is balanced, else its IBD params.
std::optional<DesignParams> strongest_params(const Design& design) {
  std::optional<DesignParams> best;
  try {
    best = verify_ibd(design);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::size_t t = 2; t <= std::min<std::size_t>(3, design.k()); ++t) {
    auto p = as_t_design(design, t);
    if (!p) break;
    best = p;
  }
  return best;
}

void emit_design(Report& rep, const Design& design, const Resolution* res,
                 const std::string& out_path, std::ostream& out) {
  std::string body = rep.json ? io::to_json(design, res).dump(2) + "\n"
                              : (res ? io::format_text(design, *res)
                                     : io::format_text(design));
  if (out_path.empty()) {
    out << body;
  } else {
    io::write_file(out_path, body);
  }
}

// Master design and the resolution to use, by priority: classes in the master
// file, an explicit resolution file, an automatic search.
struct ResolvedInput {
  Design design;
  Resolution resolution;
  std::string source;
};

ResolvedInput resolve_input(const std::string& path, const std::string& res_path,
                            bool auto_resolve, std::uint64_t budget) {
  io::DesignFile file = io::load(path);
  if (file.resolution) {
    return {std::move(file.design), std::move(*file.resolution), "file"};
  }
  if (!res_path.empty()) {
    io::DesignFile res_file = io::load(res_path);
    if (!res_file.resolution) {
      throw Error(ErrorKind::Parse, res_path + " has no class lines");
    }
    // Map the resolution file's blocks onto instances of the master design.
    std::vector<Block> sorted_master = file.design.blocks();
    std::vector<Block> sorted_res = res_file.design.blocks();
    std::sort(sorted_master.begin(), sorted_master.end());
    std::sort(sorted_res.begin(), sorted_res.end());
    if (file.design.v() != res_file.design.v() || sorted_master != sorted_res) {
      throw Error(ErrorKind::InvalidResolution,
                  "resolution file does not resolve the master design");
    }
    std::map<Block, std::vector<std::size_t>> instances;
    for (std::size_t i = file.design.b(); i-- > 0;) {
      instances[file.design.block(i)].push_back(i);
    }
    Resolution res;
    for (const auto& cls : res_file.resolution->classes) {
      ParallelClass mapped;
      for (auto ref : cls.block_refs) {
        auto& pool = instances[res_file.design.block(ref)];
        mapped.block_refs.push_back(pool.back());
        pool.pop_back();
      }
      res.classes.push_back(std::move(mapped));
    }
    return {std::move(file.design), std::move(res), "resolution file"};
  }
  if (auto_resolve) {
    auto found = find_resolutions(file.design, SearchOptions{1, budget});
    if (found.empty()) {
      throw Error(ErrorKind::NotResolvable, path + " has no resolution");
    }
    return {std::move(file.design), std::move(found.front()), "auto-resolved"};
  }
  throw Error(ErrorKind::InvalidArgument,
              "no resolution: give a resolution file or --auto-resolve");
}

void check_expectation(Report& rep, const std::string& name,
                       const std::string& expected, const std::string& observed,
                       bool ok) {
  rep.data["expectations"].push_back(
      Json{{"name", name}, {"expected", expected}, {"observed", observed},
           {"ok", ok}});
  rep.text << "expect " << name << ": " << (ok ? "ok" : "FAILED") << " (expected "
           << expected << ", observed " << observed << ")\n";
  if (!ok) rep.fail(kPropertyFailure);
}

// ---------------------------------------------------------------------------

void cmd_verify(Report& rep, const std::string& path,
                const std::vector<std::size_t>& strengths,
                std::optional<std::int64_t> expect_lambda, bool expect_simple) {
  const Design design = io::load(path).design;
  rep.data["command"] = "verify";
  rep.data["file"] = path;
  rep.text << "verify " << path << '\n';

  try {
    auto ibd = verify_ibd(design);
    rep.data["ibd"] = params_json(ibd);
    rep.text << "ibd: " << ibd_text(ibd) << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonConstantReplication) throw;
    rep.data["ibd"] = nullptr;
    rep.text << "ibd: no (" << e.what() << ")\n";
  }

  std::optional<CoverageSpectrum> last;
  rep.data["spectra"] = Json::array();
  for (auto t : strengths) {
    auto spectrum = t_coverage_spectrum(design, t);
    Json entry{{"t", t}, {"spectrum", spectrum_json(spectrum)}};
    rep.text << "spectrum t=" << t << ": " << format_spectrum(spectrum);
    if (auto lambda = uniform_coverage(spectrum)) {
      entry["lambda"] = *lambda;
      rep.text << " -> " << t << "-design, lambda = " << *lambda;
    } else {
      entry["lambda"] = nullptr;
    }
    rep.text << '\n';
    rep.data["spectra"].push_back(entry);
    last = spectrum;
  }

  const bool simple = is_simple(design);
  const bool trivial = is_trivial(design);
  rep.data["simple"] = simple;
  rep.data["trivial"] = trivial;
  rep.text << "simple: " << yes_no(simple) << "\ntrivial: " << yes_no(trivial)
           << '\n';

  if (expect_lambda) {
    if (!last) {
      throw Error(ErrorKind::InvalidArgument, "--expect-lambda needs --t");
    }
    auto lambda = uniform_coverage(*last);
    check_expectation(rep, "lambda", std::to_string(*expect_lambda),
                      lambda ? std::to_string(*lambda) : format_spectrum(*last),
                      lambda && static_cast<std::int64_t>(*lambda) == *expect_lambda);
  }
  if (expect_simple) check_expectation(rep, "simple", "yes", yes_no(simple), simple);
}

struct ConstructArgs {
  std::string master, master_res, indexing, out, provenance;
  bool auto_resolve = false;
  std::uint64_t budget = 100'000'000;
};

// v = q^m and k = q^(m-1) with q = w.
std::optional<std::int64_t> affine_dimension(const DesignParams& master,
                                             std::int64_t w) {
  std::int64_t power = w;
  for (std::int64_t m = 2; power <= master.v; ++m) {
    if (power * w == master.v && power == master.k) return m;
    power *= w;
  }
  return std::nullopt;
}

void compare(Report& rep, Json& checks, const std::string& name,
             const std::string& predicted, const std::string& observed) {
  const bool ok = predicted == observed;
  checks.push_back(Json{{"name", name}, {"predicted", predicted},
                        {"observed", observed}, {"ok", ok}});
  rep.text << name << ": predicted " << predicted << ", observed " << observed
           << (ok ? "" : "  MISMATCH") << '\n';
  if (!ok) rep.fail(kPropertyFailure);
}

void cmd_construct(Report& rep, const ConstructArgs& args) {
  rep.data["command"] = "construct";
  rep.text << "construct " << args.master << " x " << args.indexing << '\n';
  ResolvedInput master = resolve_input(args.master, args.master_res,
                                       args.auto_resolve, args.budget);
  const Design indexing = io::load(args.indexing).design;
  rep.data["resolution_source"] = master.source;
  rep.text << "master resolution: " << master.source
           << (master.source == "auto-resolved" ? " (search result, not a fixed resolution)"
                                                : "")
           << '\n';

  const ConstructedDesign built =
      union_construction(master.design, master.resolution, indexing);
  if (!args.out.empty()) io::write_file(args.out, io::format_text(built.design));
  if (!args.provenance.empty()) {
    io::write_file(args.provenance, io::format_provenance(built));
  }

  const auto master_params = strongest_params(master.design);
  if (!master_params) {
    throw Error(ErrorKind::NonConstantReplication, "master design is not an IBD");
  }
  const IndexingParams ip = IndexingParams::measure(indexing);
  rep.data["master"] = params_json(*master_params);
  rep.data["indexing"] = Json{{"w", ip.w}, {"b'", ip.b_prime}, {"r'", ip.r_prime},
                              {"k'", ip.k_prime}};
  rep.text << "master: " << master_params->to_string() << '\n'
           << "indexing: (w,b',r',k') = (" << ip.w << "," << ip.b_prime << ","
           << ip.r_prime << "," << ip.k_prime << ")\n"
           << "constructed: " << built.design.b() << " blocks of size "
           << built.design.k() << '\n';
  rep.data["constructed_blocks"] = built.design.b();

  Json checks = Json::array();
  compare(rep, checks, "ibd", ibd_text(predict_ibd_params(*master_params, ip)),
          ibd_text(verify_ibd(built.design)));

  if (master_params->t >= 2 && ip.pair_balanced) {
    auto pair = uniform_coverage(t_coverage_spectrum(built.design, 2));
    compare(rep, checks, "pair lambda",
            std::to_string(predict_bibd_lambda(*master_params, ip)),
            pair ? std::to_string(*pair) : "unbalanced");
  }

  auto triples = t_coverage_spectrum(built.design, 3);
  auto mu = uniform_coverage(triples);
  rep.data["triple_spectrum"] = spectrum_json(triples);
  rep.text << "spectrum t=3: " << format_spectrum(triples) << '\n';

  if (master_params->t >= 2) {
    const std::int64_t lp = ip.k_prime >= 3 && ip.triple_balanced ? ip.lambda_prime : 1;
    const auto analysis = classify_three_design(*master_params, ip.k_prime, lp);
    rep.data["classification"] =
        Json{{"case", to_string(analysis.verdict)}, {"c1", to_string(analysis.c1)},
             {"c2", to_string(analysis.c2)},
             {"pair_master_pair_indexing", analysis.pair_master_pair_indexing}};
    rep.text << "classification: " << to_string(analysis.verdict)
             << " (c1 = " << to_string(analysis.c1)
             << ", c2 = " << to_string(analysis.c2) << ")\n";
    if (analysis.pair_master_pair_indexing) {
      rep.text << "note: k = 2 with k' = 2; only the lambda' = 0 count applies\n";
    }
    compare(rep, checks, "3-design", yes_no(analysis.is_three_design()),
            yes_no(mu.has_value()));

    const std::int64_t w = ip.w;
    const std::string observed_mu = mu ? std::to_string(*mu) : "unbalanced";
    if (analysis.verdict == ThreeDesignCase::KPrimeHalfW) {
      if (w == 4 && ip.k_prime == 2) {
        compare(rep, checks, "mu (v/k = 4)",
                std::to_string(predicted_mu_w4(*master_params)), observed_mu);
      } else if (w > 4 && w % 2 == 0 && ip.triple_balanced) {
        compare(rep, checks, "mu",
                std::to_string(predicted_mu(*master_params, ip.lambda_prime)),
                observed_mu);
        auto m = affine_dimension(*master_params, w);
        if (m && (w & (w - 1)) == 0) {
          compare(rep, checks, "mu (affine)",
                  std::to_string(predicted_mu_affine(w, *m, ip.lambda_prime)),
                  observed_mu);
        }
      }
    }
  }
  rep.data["checks"] = checks;

  const bool simple = is_simple(built.design);
  const auto verdict = simplicity_from_prp(master.design, master.resolution,
                                           ip.k_prime, is_trivial(indexing));
  rep.data["simple"] = simple;
  rep.data["prp_verdict"] = to_string(verdict);
  rep.text << "simple: " << yes_no(simple) << "\nprp verdict: "
           << to_string(verdict) << '\n';
  if ((verdict == SimplicityVerdict::SimpleGuaranteed && !simple) ||
      (verdict == SimplicityVerdict::NotSimple && simple)) {
    rep.text << "prp verdict contradicts the observed simplicity\n";
    rep.fail(kPropertyFailure);
  }
}

void cmd_resolve(Report& rep, const std::string& path, std::size_t limit,
                 std::uint64_t budget, const std::string& out_path,
                 std::ostream& out) {
  rep.data["command"] = "resolve";
  rep.text << "resolve " << path << '\n';
  const Design design = io::load(path).design;
  auto found = find_resolutions(design, SearchOptions{limit, budget});
  rep.data["found"] = found.size();
  rep.text << "resolutions found: " << found.size() << " (limit " << limit << ")\n";
  if (limit >= 2 && !found.empty()) {
    rep.data["unique"] = found.size() == 1;
    rep.text << "unique: " << yes_no(found.size() == 1) << '\n';
  }
  if (found.empty()) {
    rep.fail(kPropertyFailure);
    return;
  }
  if (!out_path.empty()) {
    Report silent;
    silent.json = rep.json;
    emit_design(silent, design, &found.front(), out_path, out);
  }
}

void cmd_prp(Report& rep, const std::string& path, const std::string& res_path,
             bool auto_resolve, std::uint64_t budget,
             const std::vector<std::size_t>& alphas, bool expect_free) {
  rep.data["command"] = "prp";
  rep.text << "prp " << path << '\n';
  ResolvedInput input = resolve_input(path, res_path, auto_resolve, budget);
  auto violations = prp_violations(input.design, input.resolution, alphas);
  rep.data["classes"] = input.resolution.classes.size();
  rep.data["violations"] = Json::array();
  for (const auto& v : violations) {
    rep.data["violations"].push_back(
        Json{{"first", v.first_class}, {"second", v.second_class}, {"alpha", v.alpha}});
    rep.text << "violation: classes (" << v.first_class << ", " << v.second_class
             << ") alpha = " << v.alpha << '\n';
  }
  const bool free = violations.empty();
  rep.data["prp_free"] = free;
  if (free) {
    if (alphas.empty()) {
      rep.text << "PRP-free\n";
    } else {
      rep.text << "PRP-free for alpha in {";
      for (std::size_t i = 0; i < alphas.size(); ++i) rep.text << (i ? ", " : "") << alphas[i];
      rep.text << "}\n";
    }
  }
  if (expect_free && !free) rep.fail(kPropertyFailure);
}

Block parse_block_spec(const std::string& spec, std::uint32_t n) {
  std::istringstream is(spec);
  std::vector<Point> members;
  std::string token;
  while (is >> token) {
    if (token == "inf") {
      members.push_back(n);
    } else {
      try {
        std::size_t used = 0;
        auto value = std::stoul(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        members.push_back(static_cast<Point>(value));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad point '" + token + "' in base block");
      }
    }
  }
  return Block(std::move(members));
}

void cmd_develop(Report& rep, const std::string& entry, std::uint32_t n,
                 bool infinity, const std::vector<std::string>& blocks,
                 const std::string& out_path, std::ostream& out) {
  CyclicBaseSpec spec;
  if (!entry.empty()) {
    spec = catalog_entry(entry).base_spec;
  } else {
    if (n == 0 || blocks.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "develop needs --catalog or --n with --block");
    }
    spec.n = n;
    spec.has_infinity = infinity;
    for (const auto& b : blocks) spec.base_class.push_back(parse_block_spec(b, n));
  }
  auto developed = cyclic_develop(spec);
  emit_design(rep, developed.design, &developed.resolution, out_path, out);
}

std::size_t to_size(const std::string& s) {
  try {
    std::size_t used = 0;
    auto value = std::stoul(s, &used);
    if (used == s.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "expected a number, got '" + s + "'");
}

void cmd_gen(Report& rep, const std::string& kind,
             const std::vector<std::string>& params, const std::string& out_path,
             std::ostream& out) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::InvalidArgument,
                  "gen " + kind + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (kind == "trivial") {
    need(2);
    emit_design(rep, trivial_design(to_size(params[0]), to_size(params[1])),
                nullptr, out_path, out);
    return;
  }
  std::optional<ResolvedDesign> resolved;
  if (kind == "round-robin") {
    need(1);
    resolved = round_robin_one_factorization(to_size(params[0]));
  } else if (kind == "sub-factorization") {
    need(1);
    resolved = sub_factorization_embedding(to_size(params[0]));
  } else if (kind == "affine") {
    need(2);
    resolved = affine_hyperplane_design(to_size(params[0]),
                                        static_cast<std::uint32_t>(to_size(params[1])));
  } else if (kind == "catalog") {
    need(1);
    resolved = cyclic_develop(catalog_entry(params[0]).base_spec);
  } else if (kind == "constructed") {
    need(1);
    auto built = build_catalog_design(catalog_entry(params[0]));
    emit_design(rep, built.design, nullptr, out_path, out);
    return;
  } else {
    throw Error(ErrorKind::InvalidArgument,
                "unknown generator '" + kind +
                    "' (trivial, round-robin, sub-factorization, affine, catalog, "
                    "constructed)");
  }
  emit_design(rep, resolved->design, &resolved->resolution, out_path, out);
}

void cmd_profile(Report& rep, const std::string& path) {
  const Design design = io::load(path).design;
  const auto profile = intersection_profile(design);
  const std::uint64_t pairs =
      design.b() * (design.b() == 0 ? 0 : design.b() - 1) / 2;
  rep.data["command"] = "profile";
  rep.data["file"] = path;
  rep.data["profile"] = profile.counts;
  rep.data["sum"] = profile.total();
  rep.data["pairs"] = pairs;
  rep.data["simple"] = profile.simple();
  rep.text << "profile: " << format_counts(profile.counts) << '\n'
           << "sum: " << profile.total() << " (C(b,2) = " << pairs << ")\n"
           << "simple: " << yes_no(profile.simple()) << '\n';
}

void cmd_reproduce(Report& rep, const std::string& name, bool all) {
  std::vector<const CatalogEntry*> entries;
  if (all) {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    if (name.empty()) {
      throw Error(ErrorKind::InvalidArgument, "reproduce needs a name or --all");
    }
    entries.push_back(&catalog_entry(name));
  }
  rep.data["command"] = "reproduce";
  rep.data["entries"] = Json::array();
  std::size_t passed = 0;
  for (const auto* entry : entries) {
    const Reproduction r = reproduce(*entry);
    Json j{{"name", r.name},
           {"master", params_json(r.observed_master)},
           {"master_ok", r.master_ok},
           {"blocks", r.blocks},
           {"mu_expected", entry->expected_mu},
           {"mu_predicted", r.predicted_mu},
           {"mu_observed", r.observed_mu ? Json(*r.observed_mu) : Json(nullptr)},
           {"profile", r.profile.counts},
           {"profile_ok", r.profile_ok},
           {"simple", r.simple},
           {"ok", r.ok()}};
    rep.data["entries"].push_back(j);
    rep.text << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << '\n'
             << "  master " << r.observed_master.to_string()
             << (r.master_ok ? "" : "  MISMATCH") << '\n'
             << "  blocks " << r.blocks << ", mu predicted " << r.predicted_mu
             << ", observed "
             << (r.observed_mu ? std::to_string(*r.observed_mu)
                               : format_spectrum(r.triple_spectrum))
             << ", expected " << entry->expected_mu << '\n'
             << "  profile " << format_counts(r.profile.counts)
             << (r.profile_ok ? " matches" : " DIFFERS") << '\n';
    if (!r.profile_ok) {
      rep.text << "  expected " << format_counts(entry->expected_profile.counts)
               << '\n';
    }
    rep.text << "  simple " << yes_no(r.simple) << '\n';
    if (r.ok()) ++passed;
  }
  rep.data["passed"] = passed;
  rep.data["total"] = entries.size();
  rep.text << passed << "/" << entries.size() << " pass\n";
  if (passed != entries.size()) rep.fail(kPropertyFailure);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchBudgetExceeded: return kBudgetExhausted;
    case ErrorKind::NonConstantReplication:
    case ErrorKind::NotResolvable:
      return kPropertyFailure;
    default: return kUsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Resolvable-design unions: build and verify 3-designs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured (JSON) output");

  std::function<void(Report&)> action;

  // verify
  std::string verify_file;
  std::vector<std::size_t> verify_t;
  std::optional<std::int64_t> expect_lambda;
  bool expect_simple = false;
  auto* verify = app.add_subcommand("verify", "Check IBD parameters, t-coverage, simplicity");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--t", verify_t, "Strength(s) to test");
  verify->add_option("--expect-lambda", expect_lambda);
  verify->add_flag("--expect-simple", expect_simple);
  verify->callback([&] {
    action = [&](Report& r) {
      cmd_verify(r, verify_file, verify_t, expect_lambda, expect_simple);
    };
  });

  // construct
  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Union blocks of each master class");
  construct->add_option("--master", cargs.master)->required();
  construct->add_option("--master-res", cargs.master_res);
  construct->add_flag("--auto-resolve", cargs.auto_resolve);
  construct->add_option("--indexing", cargs.indexing)->required();
  construct->add_option("--out", cargs.out);
  construct->add_option("--provenance", cargs.provenance);
  construct->add_option("--budget", cargs.budget);
  construct->callback([&] { action = [&](Report& r) { cmd_construct(r, cargs); }; });

  // resolve
  std::string resolve_file, resolve_out;
  std::size_t resolve_limit = 2;
  std::uint64_t resolve_budget = 100'000'000;
  auto* resolve = app.add_subcommand("resolve", "Search for resolutions");
  resolve->add_option("file", resolve_file)->required();
  resolve->add_option("--limit", resolve_limit);
  resolve->add_option("--budget", resolve_budget);
  resolve->add_option("--out", resolve_out);
  resolve->callback([&] {
    action = [&](Report& r) {
      cmd_resolve(r, resolve_file, resolve_limit, resolve_budget, resolve_out, out);
    };
  });

  // prp
  std::string prp_file, prp_res;
  bool prp_auto = false, prp_expect_free = false;
  std::uint64_t prp_budget = 100'000'000;
  std::vector<std::size_t> prp_alpha;
  auto* prp = app.add_subcommand("prp", "List partial-replacement violations");
  prp->add_option("file", prp_file)->required();
  prp->add_option("--res", prp_res);
  prp->add_flag("--auto-resolve", prp_auto);
  prp->add_option("--alpha", prp_alpha);
  prp->add_option("--budget", prp_budget);
  prp->add_flag("--expect-free", prp_expect_free);
  prp->callback([&] {
    action = [&](Report& r) {
      cmd_prp(r, prp_file, prp_res, prp_auto, prp_budget, prp_alpha, prp_expect_free);
    };
  });

  // develop
  std::string dev_catalog, dev_out;
  std::uint32_t dev_n = 0;
  bool dev_inf = false;
  std::vector<std::string> dev_blocks;
  auto* develop = app.add_subcommand("develop", "Develop a base parallel class through Z_n");
  develop->add_option("--catalog", dev_catalog);
  develop->add_option("--n", dev_n);
  develop->add_flag("--infinity", dev_inf);
  develop->add_option("--block", dev_blocks, "Base block, e.g. \"inf 0 1 7\"");
  develop->add_option("--out", dev_out);
  develop->callback([&] {
    action = [&](Report& r) {
      cmd_develop(r, dev_catalog, dev_n, dev_inf, dev_blocks, dev_out, out);
    };
  });

  // gen
  std::string gen_kind, gen_out;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "Emit a generated design");
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("params", gen_params);
  gen->add_option("--out", gen_out);
  gen->callback([&] {
    action = [&](Report& r) { cmd_gen(r, gen_kind, gen_params, gen_out, out); };
  });

  // profile
  std::string profile_file;
  auto* profile = app.add_subcommand("profile", "Block intersection profile");
  profile->add_option("file", profile_file)->required();
  profile->callback([&] { action = [&](Report& r) { cmd_profile(r, profile_file); }; });

  // reproduce
  std::string reproduce_name;
  bool reproduce_all = false;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Rebuild catalog designs");
  reproduce_cmd->add_option("name", reproduce_name);
  reproduce_cmd->add_flag("--all", reproduce_all);
  reproduce_cmd->callback([&] {
    action = [&](Report& r) { cmd_reproduce(r, reproduce_name, reproduce_all); };
  });

  std::vector<const char*> argv{"srdesign"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  Report rep;
  rep.json = json;
  try {
    action(rep);
  } catch (const Error& e) {
    rep.fail(exit_code_for(e.kind()));
    rep.data["error"] = e.what();
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    rep.fail(kUsageError);
    rep.data["error"] = e.what();
    err << "error: " << e.what() << '\n';
  }
  rep.data["status"] = rep.status;

  const bool writes_design_to_stdout =
      (gen->parsed() && gen_out.empty()) || (develop->parsed() && dev_out.empty());
  if (!writes_design_to_stdout || rep.status != kSuccess) {
    if (rep.json) {
      out << rep.data.dump(2) << '\n';
    } else {
      out << rep.text.str();
    }
  }
  return rep.status;
}

}  // namespace srd::cli
