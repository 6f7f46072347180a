#include "gelfand/run.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "gelfand/descend.hpp"
#include "gelfand/orbits.hpp"
#include "gelfand/random.hpp"

namespace gelfand {

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail_with(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skipped(std::string detail) { return {CheckStatus::Skipped, std::move(detail)}; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool is_counterexample(ErrorCode code) {
  return code == ErrorCode::InvariantViolation || code == ErrorCode::CounterexampleFound;
}

class Checks {
 public:
  // Library errors that signal a broken invariant become a failed check;
  // anything else propagates and aborts the run.
  Outcome run(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const Error& e) {
      if (!is_counterexample(e.code())) throw;
      out = fail_with(e.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    results.push_back({name, out.status, out.detail, dt.count()});
    return out;
  }

  std::vector<CheckResult> results;
};

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.subcommand.empty()) j["subcommand"] = c.subcommand;
  j["q"] = c.q;
  j["n"] = c.n;
  if (c.input_path) j["input"] = *c.input_path;
  if (c.from_g) j["from_g"] = true;
  j["seed"] = c.seed;
  j["max_group_size"] = c.max_group_size;
  return j;
}

Field parse_field(std::uint64_t q) {
  if (!prime_power(q)) fail(ErrorCode::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
  return field_of_order(q);
}

// Ring axioms on all triples for small fields, otherwise on seeded samples.
Outcome field_axioms(const Field& f, std::uint64_t seed) {
  const std::uint64_t q = f.size();
  Rng rng(seed);
  const bool exhaustive = q <= 16;
  const std::uint64_t trials = exhaustive ? q * q * q : 20000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Code a = static_cast<Code>(exhaustive ? t / (q * q) : rng.below(q));
    const Code b = static_cast<Code>(exhaustive ? (t / q) % q : rng.below(q));
    const Code c = static_cast<Code>(exhaustive ? t % q : rng.below(q));
    const bool ok = f.add(a, f.add(b, c)) == f.add(f.add(a, b), c) && f.add(a, b) == f.add(b, a) &&
                    f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c) && f.mul(a, b) == f.mul(b, a) &&
                    f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) && f.add(a, f.neg(a)) == 0 &&
                    f.add(a, 0) == a && f.mul(a, 1) == a;
    if (!ok) {
      return fail_with("axiom fails at (" + f.format(a) + ", " + f.format(b) + ", " + f.format(c) + ")");
    }
  }
  for (Code a = 1; a < q; ++a) {
    if (f.mul(a, f.inv(a)) != 1) return fail_with("bad inverse of " + f.format(a));
  }
  return pass(std::to_string(trials) + (exhaustive ? " triples (all)" : " sampled triples"));
}

Outcome frobenius_order(const Field& f) {
  const std::uint32_t d = f.absolute_degree();
  for (Code a = 0; a < f.size(); ++a) {
    Code x = a;
    for (std::uint32_t k = 0; k < d; ++k) x = f.frobenius(x);
    if (x != a) return fail_with("Frobenius^" + std::to_string(d) + " moves " + f.format(a));
  }
  // The generator of the field over F_p is moved by every smaller power.
  if (d > 1) {
    for (Code g = 0; g < f.size(); ++g) {
      Code x = g;
      bool moved_all = true;
      for (std::uint32_t k = 1; k < d; ++k) {
        x = f.frobenius(x);
        if (x == g) moved_all = false;
      }
      if (moved_all) return pass("order " + std::to_string(d));
    }
    return fail_with("no element with full Frobenius orbit");
  }
  return pass("order 1");
}

Outcome square_roots(const Field& f) {
  std::uint64_t squares = 0;
  for (const auto& z : elements(f)) {
    if (z.is_zero()) continue;
    auto r = square_root(z);
    if (r) {
      if (!(*r * *r == z)) return fail_with("bad root of " + z.to_string());
      ++squares;
    }
  }
  const std::uint64_t expected = f.characteristic() == 2 ? f.size() - 1 : (f.size() - 1) / 2;
  if (squares != expected) {
    return fail_with(std::to_string(squares) + " nonzero squares, expected " + std::to_string(expected));
  }
  return pass(std::to_string(squares) + " nonzero squares");
}

Json coset_list(const DoubleCosetTable& table) {
  Json out = Json::array();
  for (const auto& c : table.cosets()) {
    Json j;
    j["size"] = c.size;
    j["class_tag"] = c.class_tag ? invariant_to_json(*c.class_tag) : Json(nullptr);
    j["representative"] = matrix_to_json(c.representative);
    out.push_back(j);
  }
  return out;
}

Outcome group_order_check(const DoubleCosetTable& table) {
  const auto& ctx = table.context();
  const std::uint64_t expected = gl_order(ctx.field().size(), ctx.dim());
  std::uint64_t sum = 0;
  for (const auto& c : table.cosets()) sum += c.size;
  if (sum != expected || table.total() != expected) {
    return fail_with("coset sizes sum to " + std::to_string(sum) + ", |GL| = " + std::to_string(expected));
  }
  return pass("sizes sum to " + std::to_string(expected));
}

Outcome bijection_check(const DoubleCosetTable& table) {
  const std::size_t classes = table.classes().size();
  const std::size_t cosets = table.cosets().size();
  for (const auto& c : table.cosets()) {
    if (!c.class_tag) return fail_with("coset without d(x): " + c.representative.to_string());
  }
  if (!table.merged_classes().empty()) {
    return fail_with("class " + table.classes()[table.merged_classes().front()].invariant.to_string() +
                     " shares a coset with another class");
  }
  if (classes != cosets) {
    return fail_with(std::to_string(cosets) + " cosets for " + std::to_string(classes) + " classes");
  }
  return pass(std::to_string(cosets) + " cosets = " + std::to_string(classes) + " classes");
}

Outcome goodness_check(const DoubleCosetTable& table) {
  const GoodnessReport g = verify_good(table);
  if (!g.all_stable) return fail_with(g.counterexamples.front());
  return pass(std::to_string(g.cosets.size()) + " cosets with verified witnesses");
}

Outcome stability_scan(const DoubleCosetTable& table, std::uint64_t seed) {
  constexpr std::uint64_t kExhaustiveBound = 2'000'000;
  constexpr std::uint64_t kSamples = 500;
  const bool exhaustive = table.total() <= kExhaustiveBound;
  const StabilityScan s = exhaustive ? scan_sigma_stability(table) : sample_sigma_stability(table, kSamples, seed);
  if (s.violations > 0) {
    return fail_with(std::to_string(s.violations) + " violations, first " + s.first_violation->to_string());
  }
  return pass(std::to_string(s.checked) + (exhaustive ? " elements (all)" : " sampled elements"));
}

Outcome transpose_witnesses(const DoubleCosetTable& table) {
  for (const auto& cls : table.classes()) transpose_witness(table.context(), cls.representative);
  return pass(std::to_string(table.classes().size()) + " class representatives");
}

Outcome stabilizer_check(const DoubleCosetTable& table) {
  for (const auto& s : verify_stabilizers(table)) {
    if (!s.orbit_stabilizer || !s.matches_centralizer) {
      return fail_with("coset " + std::to_string(s.coset) + ": stabilizer " + std::to_string(s.stabilizer_order) +
                       ", centralizer of s(g) " + std::to_string(s.centralizer_order));
    }
  }
  return pass("orbit-stabilizer and centralizer orders agree");
}

Json descendant_json(const DescendantReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json j;
    j["factor"] = polynomial_to_json(c.factor);
    j["ext_field"] = field_to_json(c.ext_field);
    j["e_dim"] = c.e_dim;
    j["pair"] = c.pair_name();
    comps.push_back(j);
  }
  Json j;
  j["components"] = comps;
  j["pair"] = r.pair_name();
  j["predicted_H_x_order"] = r.predicted_centralizer_order;
  j["brute_force_H_x_order"] =
      r.brute_force_centralizer_order ? Json(*r.brute_force_centralizer_order) : Json(nullptr);
  j["verified"] = r.verified;
  return j;
}

// Descendants of s(g) for every coset seed d(x) and representative, and for
// seeded random g; elements that are not semisimple are counted and skipped.
Outcome descendants_check(const DoubleCosetTable& table, std::uint64_t seed, Json& out) {
  const auto& ctx = table.context();
  std::vector<Matrix> sources;
  for (const auto& c : table.cosets()) {
    if (c.seed) sources.push_back(embed_d(*c.seed));
    sources.push_back(c.representative);
  }
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) sources.push_back(random_invertible(ctx.field(), ctx.dim(), rng));

  DescendantOptions opts;
  opts.sp_elements = &table.sp_elements();
  out = Json::array();
  std::size_t verified = 0, non_semisimple = 0;
  for (const auto& g : sources) {
    const Matrix x = symmetrize(ctx, g);
    if (!is_semisimple(x)) {
      ++non_semisimple;
      continue;
    }
    const DescendantReport r = descendant(make_sigma_symmetric(ctx, x), opts);
    Json j = descendant_json(r);
    j["x"] = matrix_to_json(x);
    out.push_back(j);
    if (!r.verified) {
      return fail_with("|H_x| = " + std::to_string(r.brute_force_centralizer_order.value_or(0)) + ", predicted " +
                       std::to_string(r.predicted_centralizer_order) + " for x = " + x.to_string());
    }
    ++verified;
  }
  return pass(std::to_string(verified) + " descendants verified, " + std::to_string(non_semisimple) +
              " non-semisimple s(g) skipped");
}

// theta and sigma are involutions, Sp is the fixed group of theta, and
// invariant factors agree with explicit conjugators.
Outcome property_suite(const SymplecticContext& ctx, std::uint64_t seed) {
  Rng rng(seed);
  const Field& f = ctx.field();
  constexpr int kTrials = 200;
  for (int t = 0; t < kTrials; ++t) {
    const Matrix g = random_invertible(f, ctx.dim(), rng);
    if (!(theta(ctx, theta(ctx, g)) == g)) return fail_with("theta^2 != id at " + g.to_string());
    if (!(sigma(ctx, sigma(ctx, g)) == g)) return fail_with("sigma^2 != id at " + g.to_string());
    if ((theta(ctx, g) == g) != is_in_sp(ctx, g)) return fail_with("Sp membership mismatch at " + g.to_string());
    if (!(sigma(ctx, symmetrize(ctx, g)) == symmetrize(ctx, g))) return fail_with("s(g) not sigma-fixed");

    const std::size_t n = ctx.half_dim();
    const Matrix x = random_invertible(f, n, rng);
    const Matrix k = random_invertible(f, n, rng);
    const Matrix y = k * x * inverse(k);
    if (!(invariant_factors(x) == invariant_factors(y)) || !find_conjugator(x, y)) {
      return fail_with("conjugate pair not recognised: " + x.to_string());
    }
    const Matrix z = random_invertible(f, n, rng);
    const bool same = invariant_factors(x) == invariant_factors(z);
    const auto c = find_conjugator(x, z);
    if (same != c.has_value()) return fail_with("invariants and conjugator disagree on " + x.to_string());
    if (c && !(*c * x == z * *c)) return fail_with("bad conjugator");
  }
  const Outcome axioms = field_axioms(f, seed);
  if (axioms.status != CheckStatus::Pass) return axioms;
  return pass(std::to_string(kTrials) + " seeded trials");
}

Outcome sp_order_check(const SymplecticContext& ctx, const std::vector<Matrix>& sp) {
  const std::uint64_t expected = sp_order(ctx.field().size(), ctx.half_dim());
  if (sp.size() != expected) {
    return fail_with("enumerated " + std::to_string(sp.size()) + ", expected " + std::to_string(expected));
  }
  return pass("|Sp| = " + std::to_string(expected));
}

Json run_fields(const RunConfig& cfg, Checks& checks) {
  const Field f = parse_field(cfg.q);
  checks.run("field_axioms", [&] { return field_axioms(f, cfg.seed); });
  checks.run("frobenius_order", [&] { return frobenius_order(f); });
  checks.run("square_roots", [&] { return square_roots(f); });
  Json j;
  j["field"] = field_to_json(f);
  j["modulus"] = f.is_prime_field() ? Json(nullptr) : Json(f.modulus().to_string());
  return j;
}

Json run_orbits(const RunConfig& cfg, Checks& checks, ResourceLimits limits) {
  const SymplecticContext ctx(parse_field(cfg.q), cfg.n);
  const DoubleCosetTable table = enumerate_double_cosets(ctx, limits);
  checks.run("group_order", [&] { return group_order_check(table); });
  checks.run("class_bijection", [&] { return bijection_check(table); });

  Json j;
  j["q"] = cfg.q;
  j["n"] = cfg.n;
  j["cosets"] = coset_list(table);
  const std::string& sub = cfg.command == "hecke" ? "hecke" : cfg.subcommand;
  bool stable = checks.run("sigma_stable", [&] { return goodness_check(table); }).status == CheckStatus::Pass;
  if (sub == "verify-good") {
    checks.run("transpose_witness", [&] { return transpose_witnesses(table); });
    stable &= checks.run("sigma_stability_scan", [&] { return stability_scan(table, cfg.seed); }).status ==
              CheckStatus::Pass;
  }
  j["sigma_stable"] = stable;
  j["hecke_commutative"] = nullptr;
  if (sub == "hecke") {
    HeckeTable hecke;
    checks.run("hecke_commutativity", [&] {
      hecke = hecke_commutativity(table);
      return hecke.commutative ? pass(std::to_string(hecke.count) + " cosets") : fail_with("c[i][j][k] != c[j][i][k]");
    });
    j["hecke_commutative"] = hecke.commutative;
  }
  return j;
}

Json run_descend(const RunConfig& cfg, Checks& checks, ResourceLimits limits) {
  if (!cfg.input_path) fail(ErrorCode::InvalidInput, "descend needs --matrix");
  const SymplecticContext ctx(parse_field(cfg.q), cfg.n);
  const Matrix m = read_matrix_file(*cfg.input_path);
  if (!(m.field() == ctx.field())) {
    fail(ErrorCode::FieldMismatch, "'/field': matrix is over " + m.field().describe() + ", expected " +
                                       ctx.field().describe());
  }
  if (m.rows() != ctx.dim()) {
    fail(ErrorCode::DimensionMismatch, "'/size': expected " + std::to_string(ctx.dim()) + " for n = " +
                                           std::to_string(cfg.n));
  }
  const SigmaSymmetricElement x = cfg.from_g ? symmetrize_to_element(ctx, m) : make_sigma_symmetric(ctx, m);

  DescendantOptions opts;
  opts.limits = limits;
  DescendantReport report;
  Json j;
  checks.run("restricted_forms", [&] {
    report = descendant(x, opts);
    return pass(std::to_string(report.components.size()) + " orthogonal components, forms non-degenerate");
  });
  checks.run("centralizer_order", [&] {
    if (!report.brute_force_centralizer_order) return skipped("|Sp| above the brute-force bound");
    if (!report.verified) {
      return fail_with("brute force " + std::to_string(*report.brute_force_centralizer_order) + ", predicted " +
                       std::to_string(report.predicted_centralizer_order));
    }
    return pass(std::to_string(report.predicted_centralizer_order) + " = " + report.pair_name());
  });
  j = descendant_json(report);
  j["x"] = matrix_to_json(x.matrix());
  return j;
}

Json run_verify_all(const RunConfig& cfg, Checks& checks, ResourceLimits limits) {
  const SymplecticContext ctx(parse_field(cfg.q), cfg.n);
  const DoubleCosetTable table = enumerate_double_cosets(ctx, limits);
  checks.run("sp_order", [&] { return sp_order_check(ctx, table.sp_elements()); });
  checks.run("group_order", [&] { return group_order_check(table); });
  checks.run("class_bijection", [&] { return bijection_check(table); });
  checks.run("transpose_witness", [&] { return transpose_witnesses(table); });
  const bool good = checks.run("sigma_stable", [&] { return goodness_check(table); }).status == CheckStatus::Pass;
  const bool scan = checks.run("sigma_stability_scan", [&] { return stability_scan(table, cfg.seed); }).status ==
                    CheckStatus::Pass;
  HeckeTable hecke;
  checks.run("hecke_commutativity", [&] {
    hecke = hecke_commutativity(table);
    return hecke.commutative ? pass(std::to_string(hecke.count) + " cosets") : fail_with("c[i][j][k] != c[j][i][k]");
  });
  checks.run("stabilizers", [&] { return stabilizer_check(table); });
  Json descendants;
  checks.run("descendants", [&] { return descendants_check(table, cfg.seed, descendants); });
  checks.run("property_suite", [&] { return property_suite(ctx, cfg.seed); });

  Json j;
  j["q"] = cfg.q;
  j["n"] = cfg.n;
  j["sp_order"] = table.sp_elements().size();
  j["cosets"] = coset_list(table);
  j["sigma_stable"] = good && scan;
  j["hecke_commutative"] = hecke.commutative;
  j["descendants"] = descendants;
  return j;
}

}  // namespace

std::uint64_t default_max_group_size() {
  if (const char* env = std::getenv("GELFAND_MAX_GROUP_SIZE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return ResourceLimits{}.max_group_size;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  Checks checks;
  const ResourceLimits limits{config.max_group_size};
  try {
    if (config.n == 0) fail(ErrorCode::InvalidInput, "n must be at least 1");
    Json body;
    if (config.command == "fields") {
      body = run_fields(config, checks);
    } else if (config.command == "orbits" || config.command == "hecke") {
      if (config.command == "orbits" && config.subcommand != "enumerate" && config.subcommand != "verify-good" &&
          config.subcommand != "hecke") {
        fail(ErrorCode::InvalidInput, "unknown orbits subcommand '" + config.subcommand + "'");
      }
      body = run_orbits(config, checks, limits);
    } else if (config.command == "descend") {
      body = run_descend(config, checks, limits);
    } else if (config.command == "verify-all") {
      body = run_verify_all(config, checks, limits);
    } else {
      fail(ErrorCode::InvalidInput, "unknown command '" + config.command + "'");
    }

    Json report;
    report["tool_version"] = kToolVersion;
    report["config"] = config_json(config);
    for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
    Json list = Json::array();
    bool all_pass = true;
    for (const auto& c : checks.results) {
      Json cj;
      cj["name"] = c.name;
      cj["status"] = status_name(c.status);
      cj["detail"] = c.detail;
      list.push_back(cj);
      if (c.status == CheckStatus::Fail) all_pass = false;
    }
    report["checks"] = list;
    report["status"] = all_pass ? "pass" : "fail";
    result.report = std::move(report);
    result.exit_code = all_pass ? 0 : 1;
  } catch (const Error& e) {
    result.report = nullptr;
    result.error = e.what();
    result.exit_code = is_counterexample(e.code()) ? 1 : 2;
  }
  result.checks = std::move(checks.results);
  return result;
}

std::string render_text(const RunConfig& config, const RunResult& result) {
  std::ostringstream out;
  out << "gelfand " << kToolVersion << "  " << config.command;
  if (!config.subcommand.empty()) out << ' ' << config.subcommand;
  out << "  q=" << config.q << " n=" << config.n << "\n";
  if (!result.error.empty()) {
    out << "error: " << result.error << "\n";
    return out.str();
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %-8s %9s  %s\n", "check", "status", "time", "detail");
  out << line;
  for (const auto& c : result.checks) {
    std::snprintf(line, sizeof line, "%-24s %-8s %8.3fs  ", c.name.c_str(), status_name(c.status), c.seconds);
    out << line << c.detail << "\n";
  }
  if (result.report.contains("cosets")) {
    out << "cosets: " << result.report["cosets"].size() << "\n";
  }
  if (result.report.contains("components")) out << "descendant: " << result.report["pair"].get<std::string>() << "\n";
  out << "result: " << (result.exit_code == 0 ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace gelfand
