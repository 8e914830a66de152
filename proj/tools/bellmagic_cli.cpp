// Copyright 2026 The bellmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "bellmagic/channels.hpp"
#include "bellmagic/distill.hpp"
#include "bellmagic/geometry.hpp"
#include "bellmagic/lhvsim.hpp"
#include "bellmagic/polytopes.hpp"
#include "bellmagic/witness.hpp"

namespace {

namespace bm = bellmagic;
using bm::polytopes::FacetClass;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInvalidInput = 2;

struct Options {
  std::string cache_dir;
  std::string channel_file;
  std::string family;
  std::string criterion;
  std::string format = "text";
  std::string which = "both";
  std::string ruleset_file;
  double theta = M_PI / 4;
  double s = 0.0;
  double p = 0.0;
  bool have_s = false;
  bool have_p = false;
  double tol = 1e-9;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 21;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool stabilizer_orbit = false;
};

nlohmann::json table_json(const bm::qcore::CGTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back(t.entries[r][c]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json violation_json(const bm::witness::ViolationReport& r) {
  return nlohmann::json{{"facet_index", r.facet_index},
                        {"class", bm::polytopes::facet_class_name(r.cls)},
                        {"value", r.value},
                        {"violated", r.violated},
                        {"margin", r.margin}};
}

nlohmann::json cache_json(const bm::witness::WitnessContext& ctx) {
  return nlohmann::json{
      {"lhv",
       {{"vertex_hash", ctx.lhv.vertex_hash},
        {"facet_hash", ctx.lhv.facet_hash}}},
      {"clifford",
       {{"vertex_hash", ctx.clifford.vertex_hash},
        {"facet_hash", ctx.clifford.facet_hash}}}};
}

void print_table(const bm::qcore::CGTable& t) {
  // Column = first tensor factor, row = second.
  static const char* kRows[4] = {".I", ".X", ".Y", ".Z"};
  std::printf("          I.        X.        Y.        Z.\n");
  for (int r = 0; r < 4; ++r) {
    std::printf("%s", kRows[r]);
    for (int c = 0; c < 4; ++c) {
      std::printf("  %+.5f", t.entries[r][c]);
    }
    std::printf("\n");
  }
}

bm::channels::Channel resolve_channel(const Options& opt) {
  if (!opt.channel_file.empty()) {
    if (!opt.family.empty()) {
      throw std::invalid_argument(
          "give either --channel-file or --family, not both");
    }
    std::ifstream in(opt.channel_file);
    if (!in) {
      throw std::invalid_argument("cannot open channel file '" +
                                  opt.channel_file + "'");
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("channel file is not valid JSON: " +
                                  std::string(e.what()));
    }
    return bm::channels::channel_from_json(j);
  }
  if (opt.family == "dephased_phase") {
    if (opt.have_p) {
      throw std::invalid_argument("dephased_phase takes --s, not --p");
    }
    return bm::channels::make_dephased_phase_gate({opt.theta, opt.s});
  }
  if (opt.family == "depolarized_phase") {
    if (opt.have_s) {
      throw std::invalid_argument("depolarized_phase takes --p, not --s");
    }
    return bm::channels::make_depolarized_phase_gate({opt.theta, opt.p});
  }
  if (!opt.family.empty()) {
    throw std::invalid_argument("unknown channel family '" + opt.family +
                                "' (for clifford_mixture use --channel-file)");
  }
  throw std::invalid_argument("specify a channel via --channel-file or "
                              "--family with --theta and --s/--p");
}

std::pair<std::size_t, std::size_t> census_pair(
    const bm::polytopes::PolytopeData& p, FacetClass a, FacetClass b) {
  return {p.census.at(a), p.census.at(b)};
}

int cmd_polytopes_build(const Options& opt) {
  const auto lhv = bm::polytopes::load_or_build_lhv(opt.cache_dir);
  const auto cliff = bm::polytopes::load_or_build_clifford(opt.cache_dir);
  std::printf("LHV: %zu (%zu/%zu/%zu), Clifford: %zu (%zu/%zu)\n",
              lhv.facets.size(), lhv.census.at(FacetClass::kPositivity),
              lhv.census.at(FacetClass::kChsh),
              lhv.census.at(FacetClass::kI3322), cliff.facets.size(),
              cliff.census.at(FacetClass::kAlpha),
              cliff.census.at(FacetClass::kBeta));
  const bool ok = lhv.facets.size() == 684 &&
                  lhv.census.at(FacetClass::kPositivity) == 36 &&
                  lhv.census.at(FacetClass::kChsh) == 72 &&
                  lhv.census.at(FacetClass::kI3322) == 576 &&
                  cliff.facets.size() == 120 &&
                  cliff.census.at(FacetClass::kAlpha) == 48 &&
                  cliff.census.at(FacetClass::kBeta) == 72;
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_polytopes_show(const Options& opt) {
  nlohmann::json out;
  for (const std::string name : {"lhv", "clifford"}) {
    if (opt.which != "both" && opt.which != name) {
      continue;
    }
    const auto poly = name == "lhv"
                          ? bm::polytopes::load_or_build_lhv(opt.cache_dir)
                          : bm::polytopes::load_or_build_clifford(opt.cache_dir);
    if (opt.format == "json") {
      out[name] = bm::polytopes::polytope_to_json(poly);
      continue;
    }
    std::printf("%s: %zu vertices, %zu facets (affine dim %zu)\n",
                poly.name.c_str(), poly.vertices.vertices.size(),
                poly.facets.size(), poly.hull.affine_dim);
    for (const auto& [cls, count] : poly.census) {
      std::printf("  %-10s %zu\n",
                  bm::polytopes::facet_class_name(cls).c_str(), count);
    }
    std::printf("  vertex_hash %s\n  facet_hash  %s\n",
                poly.vertex_hash.c_str(), poly.facet_hash.c_str());
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt) {
  const bm::channels::Channel channel = resolve_channel(opt);
  const auto ctx = bm::witness::WitnessContext::make(opt.cache_dir);
  const bm::qcore::CGTable t = bm::channels::cg_table(channel);

  const auto uqc = bm::witness::uqc_witness(ctx, t);
  const auto dom = bm::witness::beta_dominance(ctx, t, opt.tol);

  nlohmann::json out;
  out["channel"] = bm::channels::channel_to_json(channel);
  out["table"] = table_json(t);
  out["cache"] = cache_json(ctx);
  out["chsh"] =
      violation_json(bm::witness::min_facet_value(ctx.lhv, t, FacetClass::kChsh));
  out["beta"] = violation_json(
      bm::witness::min_facet_value(ctx.clifford, t, FacetClass::kBeta));
  out["pair_dominance"] = {{"holds", dom.holds},
                           {"chsh_violations", dom.chsh_violations.size()}};
  out["uqc"] = bm::witness::uqc_report_to_json(uqc, ctx);
  if (uqc.measurement) {
    const bm::distill::ParityMeasurement m{
        uqc.measurement->first, uqc.measurement->second, uqc.measurement->sign};
    try {
      out["ancilla"] = bm::distill::ancilla_to_json(
          bm::distill::prepare_ancilla(channel, m));
    } catch (const std::runtime_error& e) {
      out["ancilla"] = {{"error", e.what()}};
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_scan(const Options& opt, bool criterion_given) {
  if (opt.family.empty()) {
    throw std::invalid_argument("scan needs --family");
  }
  const bm::witness::Family family = bm::witness::family_from_name(opt.family);
  if (!(opt.from < opt.to)) {
    throw std::invalid_argument("scan needs --from < --to");
  }
  if (opt.steps < 2) {
    throw std::invalid_argument("scan needs --steps >= 2");
  }
  const auto ctx = bm::witness::WitnessContext::make(opt.cache_dir);
  const std::string param =
      family == bm::witness::Family::kDephasedPhase ? "s" : "p";

  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < opt.steps; ++i) {
    const double x = opt.from + (opt.to - opt.from) *
                                    static_cast<double>(i) /
                                    static_cast<double>(opt.steps - 1);
    const bm::qcore::CGTable t =
        bm::witness::family_table(family, opt.theta, x);
    const auto chsh =
        bm::witness::min_facet_value(ctx.lhv, t, FacetClass::kChsh);
    const auto beta =
        bm::witness::min_facet_value(ctx.clifford, t, FacetClass::kBeta);
    const bool inside = bm::geometry::is_inside(bm::geometry::lp_membership(
        t.rounded_coords(), ctx.clifford.vertices));
    points.push_back({{param, x},
                      {"chsh_min", chsh.value},
                      {"beta_min", beta.value},
                      {"inside_clifford", inside}});
  }

  std::vector<bm::witness::Criterion> criteria;
  if (criterion_given) {
    criteria.push_back(bm::witness::criterion_from_name(opt.criterion));
  } else {
    criteria = {bm::witness::Criterion::kChsh, bm::witness::Criterion::kBeta,
                bm::witness::Criterion::kMembership};
  }
  nlohmann::json thresholds = nlohmann::json::array();
  for (const auto crit : criteria) {
    try {
      const auto th = bm::witness::threshold_scan(
          ctx, family, opt.theta, crit, opt.from, opt.to, opt.tol);
      thresholds.push_back({{"criterion", bm::witness::criterion_name(th.criterion)},
                            {"parameter", th.parameter},
                            {"critical", th.critical},
                            {"bracket_width", th.bracket_width},
                            {"iterations", th.iterations}});
    } catch (const std::invalid_argument&) {
      if (criterion_given) {
        throw;  // an explicitly requested non-bracketing range is an input error
      }
    }
  }

  if (opt.format == "json") {
    nlohmann::json out{{"family", opt.family},  {"theta", opt.theta},
                       {"from", opt.from},      {"to", opt.to},
                       {"steps", opt.steps},    {"points", points},
                       {"thresholds", thresholds}, {"cache", cache_json(ctx)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::printf("%s,chsh_min,beta_min,inside_clifford\n", param.c_str());
  for (const auto& pt : points) {
    std::printf("%.12g,%.12g,%.12g,%d\n", pt.at(param).get<double>(),
                pt.at("chsh_min").get<double>(),
                pt.at("beta_min").get<double>(),
                pt.at("inside_clifford").get<bool>() ? 1 : 0);
  }
  for (const auto& th : thresholds) {
    std::printf("# threshold,%s,%s=%.12f,width=%.3g,iterations=%d\n",
                th.at("criterion").get<std::string>().c_str(),
                th.at("parameter").get<std::string>().c_str(),
                th.at("critical").get<double>(),
                th.at("bracket_width").get<double>(),
                th.at("iterations").get<int>());
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  int failures = 0;
  int checks = 0;
  const auto report = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
    }
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  };

  std::optional<bm::witness::WitnessContext> ctx;
  try {
    ctx = bm::witness::WitnessContext::make(opt.cache_dir,
                                            bm::polytopes::CacheMode::kStrict);
  } catch (const std::exception& e) {
    report(false, std::string("load polytopes: ") + e.what());
    std::printf("verify: %d/%d checks passed\n", checks - failures, checks);
    return kExitPropertyFailure;
  }

  {
    const auto [chsh, i3322] =
        census_pair(ctx->lhv, FacetClass::kChsh, FacetClass::kI3322);
    const bool ok = ctx->lhv.facets.size() == 684 &&
                    ctx->lhv.census.at(FacetClass::kPositivity) == 36 &&
                    chsh == 72 && i3322 == 576;
    report(ok, "LHV census: 684 facets in classes 36/72/576");
  }
  {
    const auto [alpha, beta] =
        census_pair(ctx->clifford, FacetClass::kAlpha, FacetClass::kBeta);
    report(ctx->clifford.facets.size() == 120 && alpha == 48 && beta == 72,
           "Clifford census: 120 facets in classes 48/72");
  }
  {
    bool ok = ctx->pairings.size() == 72;
    for (const auto& p : ctx->pairings) {
      const auto& chsh = ctx->lhv.facets[p.chsh_index].functional;
      const auto& beta = ctx->clifford.facets[p.beta_index].functional;
      int extra = 0;
      for (int r = 0; r < 4 && ok; ++r) {
        for (int c = 0; c < 4; ++c) {
          const bm::Rational d = chsh.coeff[r][c] - beta.coeff[r][c];
          if (r == 0 && c == 0) {
            ok = ok && d == 1;
          } else if (d != 0) {
            ++extra;
            ok = ok && (d == 1 || d == -1);
          }
        }
      }
      ok = ok && extra == 1;
    }
    report(ok, "facet pairing: 72 CHSH/beta pairs differ in the unit entry "
               "and exactly one correlation entry");
  }
  {
    std::size_t done = 0;
    bool ok = true;
    for (std::size_t i = 0; i < ctx->lhv.facets.size() && ok; ++i) {
      if (ctx->lhv.facets[i].cls != FacetClass::kI3322) {
        continue;
      }
      try {
        bm::witness::decompose_3322(*ctx, i);
        ++done;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    report(ok && done == 576,
           "every I3322 facet splits into four CHSH facets (576/576)");
  }
  {
    std::size_t inside = 0;
    const auto tables = bm::lhvsim::stabilizer_state_tables();
    for (const auto& t : tables) {
      if (bm::geometry::is_inside(bm::geometry::lp_membership(
              t.rounded_coords(), ctx->lhv.vertices))) {
        ++inside;
      }
    }
    report(tables.size() == 60 && inside == 60,
           "stabilizer-state tables: 60/60 inside the LHV polytope");
  }
  {
    const std::size_t n = opt.samples == 0 ? 1000 : opt.samples;
    std::mt19937_64 rng(opt.seed);
    std::size_t good = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto channel =
          bm::channels::sample_cptp_channel(rng, 1 + static_cast<int>(i % 4));
      const bm::qcore::CGTable t = bm::channels::cg_table(channel);
      bool holds = true;
      for (const auto& p : ctx->pairings) {
        const double b =
            ctx->clifford.facets[p.beta_index].functional.evaluate(t);
        const double c = ctx->lhv.facets[p.chsh_index].functional.evaluate(t);
        if (b > c + opt.tol) {
          holds = false;
          break;
        }
      }
      if (holds) {
        ++good;
      }
    }
    report(good == n, "paired beta value never exceeds the CHSH value (" +
                          std::to_string(good) + "/" + std::to_string(n) +
                          " random channels)");
  }
  std::printf("verify: %d/%d checks passed\n", checks - failures, checks);
  return failures == 0 ? kExitOk : kExitPropertyFailure;
}

int cmd_lhv(const Options& opt) {
  bm::lhvsim::LHVRuleSet rules = bm::lhvsim::phi_ruleset();
  if (!opt.ruleset_file.empty()) {
    std::ifstream in(opt.ruleset_file);
    if (!in) {
      throw std::invalid_argument("cannot open ruleset file '" +
                                  opt.ruleset_file + "'");
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("ruleset file is not valid JSON: " +
                                  std::string(e.what()));
    }
    rules = bm::lhvsim::ruleset_from_json(j);
  }
  const std::size_t n = opt.samples == 0 ? 1000000 : opt.samples;
  const auto exact = bm::lhvsim::exact_table(rules);
  const auto sampled = bm::lhvsim::sample_table(rules, n, opt.seed);
  const double diff = bm::qcore::CGTable::max_abs_diff(exact, sampled);

  const auto lhv = bm::polytopes::load_or_build_lhv(opt.cache_dir);
  const bool inside = bm::geometry::is_inside(
      bm::geometry::lp_membership(exact.rounded_coords(), lhv.vertices));

  std::size_t orbit_inside = 0, orbit_total = 0;
  if (opt.stabilizer_orbit) {
    for (const auto& t : bm::lhvsim::stabilizer_state_tables()) {
      ++orbit_total;
      if (bm::geometry::is_inside(bm::geometry::lp_membership(
              t.rounded_coords(), lhv.vertices))) {
        ++orbit_inside;
      }
    }
  }

  if (opt.format == "json") {
    nlohmann::json out{{"ruleset", bm::lhvsim::ruleset_to_json(rules)},
                       {"exact", table_json(exact)},
                       {"sampled", table_json(sampled)},
                       {"n", n},
                       {"seed", opt.seed},
                       {"generator", bm::lhvsim::kGeneratorId},
                       {"max_abs_diff", diff},
                       {"exact_inside_lhv", inside}};
    if (opt.stabilizer_orbit) {
      out["stabilizer_orbit"] = {{"inside", orbit_inside},
                                 {"total", orbit_total}};
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("exact table:\n");
    print_table(exact);
    std::printf("sampled table (n=%zu, seed=%llu, %s):\n", n,
                static_cast<unsigned long long>(opt.seed),
                bm::lhvsim::kGeneratorId);
    print_table(sampled);
    std::printf("max |sampled - exact| = %.6f\n", diff);
    std::printf("exact table inside LHV polytope: %s\n", inside ? "yes" : "NO");
    if (opt.stabilizer_orbit) {
      std::printf("%zu/%zu inside LHV polytope\n", orbit_inside, orbit_total);
    }
  }
  const bool ok = inside && (!opt.stabilizer_orbit ||
                             (orbit_total == 60 && orbit_inside == 60));
  return ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "bellmagic: decides what a noisy single-qubit operation is good for\n"
      "when everything else is a perfect stabilizer circuit -- whether it\n"
      "can violate a bipartite Bell inequality, and whether it opens the\n"
      "door to universal quantum computation via magic-state distillation.\n"
      "\n"
      "Angles are radians. Mind the naming trap: U_z(pi/4) = diag(1, e^{i pi/4})\n"
      "is the gate conventionally called the \"pi-over-eight\" gate, so the\n"
      "standard magic gate is --theta 0.7853981633974483 (pi/4), not pi/8."};
  app.require_subcommand(1);

  const auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "Directory for cached facet systems (kept in memory only "
                    "when omitted)");
  };
  const auto add_channel = [&](CLI::App* cmd) {
    cmd->add_option("--channel-file", opt.channel_file,
                    "JSON channel spec (kraus list or named family)");
    cmd->add_option("--family", opt.family,
                    "Channel family: dephased_phase | depolarized_phase");
    cmd->add_option("--theta", opt.theta,
                    "Target rotation angle in radians (default pi/4, the "
                    "pi-over-eight gate)");
    cmd->add_option("--s", opt.s, "Gaussian dephasing spread (dephased_phase)");
    cmd->add_option("--p", opt.p, "Depolarizing weight (depolarized_phase)");
  };

  CLI::App* polytopes =
      app.add_subcommand("polytopes", "Build or inspect the facet systems");
  polytopes->require_subcommand(1);
  CLI::App* build = polytopes->add_subcommand(
      "build", "Enumerate both polytopes, cache them, print the census");
  add_cache(build);
  CLI::App* show =
      polytopes->add_subcommand("show", "Print censuses and content hashes");
  add_cache(show);
  show->add_option("--which", opt.which, "lhv | clifford | both")
      ->check(CLI::IsMember({"lhv", "clifford", "both"}));
  show->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "Full pipeline for one channel: expectation table, Bell scan, "
      "polytope verdict, recommended parity measurement, ancilla report");
  add_channel(analyze);
  add_cache(analyze);
  analyze->add_option("--tol", opt.tol, "Dominance slack tolerance");

  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep a channel family and bisect criterion thresholds");
  add_channel(scan);
  add_cache(scan);
  scan->add_option("--from", opt.from, "Range start for s (dephased) or p "
                                       "(depolarized)")->required();
  scan->add_option("--to", opt.to, "Range end")->required();
  scan->add_option("--steps", opt.steps, "Grid points in [from, to]");
  CLI::Option* crit = scan->add_option(
      "--criterion", opt.criterion, "chsh | beta | membership (default: all)");
  crit->check(CLI::IsMember({"chsh", "beta", "membership"}));
  scan->add_option("--tol", opt.tol, "Bisection tolerance");
  scan->add_option("--format", opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Re-check the structural claims: censuses, facet pairing, "
                "I3322 decompositions, stabilizer locality, dominance sweep");
  add_cache(verify);
  verify->add_option("--samples", opt.samples,
                     "Random channels for the dominance sweep (default 1000)");
  verify->add_option("--seed", opt.seed, "Seed for the dominance sweep");
  verify->add_option("--tol", opt.tol, "Dominance slack tolerance");

  CLI::App* lhv = app.add_subcommand(
      "lhv", "Shared-randomness model: exact and sampled tables");
  add_cache(lhv);
  lhv->add_option("--ruleset-file", opt.ruleset_file,
                  "JSON ruleset (default: the maximally-entangled-pair rules)");
  lhv->add_option("--samples", opt.samples,
                  "Draws per setting pair (default 1000000)");
  lhv->add_option("--seed", opt.seed, "Sampling seed");
  lhv->add_flag("--stabilizer-orbit", opt.stabilizer_orbit,
                "Also test every two-qubit stabilizer state for membership");
  lhv->add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  opt.have_s = analyze->count("--s") > 0 || scan->count("--s") > 0;
  opt.have_p = analyze->count("--p") > 0 || scan->count("--p") > 0;
  if (opt.tol <= 0) {
    std::cerr << "error: --tol must be positive\n";
    return kExitInvalidInput;
  }

  try {
    if (build->parsed()) {
      return cmd_polytopes_build(opt);
    }
    if (show->parsed()) {
      return cmd_polytopes_show(opt);
    }
    if (analyze->parsed()) {
      return cmd_analyze(opt);
    }
    if (scan->parsed()) {
      return cmd_scan(opt, crit->count() > 0);
    }
    if (verify->parsed()) {
      return cmd_verify(opt);
    }
    if (lhv->parsed()) {
      return cmd_lhv(opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitInvalidInput;
}
