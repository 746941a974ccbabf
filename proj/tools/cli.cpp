#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "iris/crosscheck.hpp"
#include "iris/error.hpp"
#include "iris/iris_poly.hpp"
#include "iris/kernel.hpp"
#include "iris/quadrature.hpp"
#include "iris/serialize.hpp"
#include "iris/theorem2.hpp"

namespace iris::cli {
namespace {

struct Options {
  bool no_timing = false;

  // compute
  std::string matrix = "-";
  std::string engine = "theorem2";
  std::string mode = "sparse";
  std::string alpha_kind;  // engine-dependent default
  std::string alpha_file;
  std::string p = "min";
  std::string beta = "auto";
  std::string k = "auto";
  std::string validate = "brute";
  bool unsafe = false;

  // alpha / validate
  std::string kind = "lemma1";
  std::size_t n = 0;
  bool override_condition = false;
  std::string method = "brute";

  // crosscheck / bench
  std::string engines = "ryser,theorem2";
  std::string n_range = "3";
  std::string entries = "binary";
  std::uint64_t trials = 10;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  unsigned threads = 0;
  std::string csv;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) fail_input(what + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return parse_u64(v, name);
}

PChoice parse_p(const std::string& text) {
  if (text == "min" || text == "minimal") return {PPolicy::minimal, 0};
  if (text == "cube") return {PPolicy::cube, 0};
  const std::uint64_t v = parse_u64(text, "--p");
  if (v == 0) fail_input("--p: prime indices start at 1");
  return {PPolicy::explicit_value, v};
}

std::optional<std::uint64_t> parse_auto(const std::string& text, const std::string& flag) {
  if (text == "auto") return std::nullopt;
  return parse_u64(text, flag);
}

ValidationPolicy parse_validation(const std::string& text, bool unsafe) {
  if (text == "brute") return ValidationPolicy::brute;
  if (text == "probe") return ValidationPolicy::probe;
  if (text == "skip") {
    if (!unsafe) fail_input("--validate skip requires --unsafe");
    return ValidationPolicy::skip;
  }
  fail_input("--validate: expected brute, probe or skip");
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_u64(text, "--n");
    return {n, n};
  }
  return {parse_u64(text.substr(0, dots), "--n"), parse_u64(text.substr(dots + 2), "--n")};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) fail_input("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

AlphaMatrix build_alpha(const std::string& kind, std::size_t n, const Options& o, std::istream& in) {
  if (kind == "file") {
    if (o.alpha_file.empty()) fail_input("--alpha-kind file needs --alpha-file");
    Json j;
    try {
      j = Json::parse(read_source(o.alpha_file, in));
    } catch (const Json::parse_error& e) {
      fail_input(std::string("alpha file: ") + e.what());
    }
    AlphaMatrix alpha = alpha_from_json(j);
    if (n != 0 && alpha.n() != n) fail_input("alpha has " + std::to_string(alpha.n()) + " columns, expected " + std::to_string(n));
    return alpha;
  }
  if (n == 0) fail_input("n must be at least 1");
  if (kind == "identity") return identity_alpha(n);
  const std::uint64_t p = resolve_p(parse_p(o.p), n);
  if (kind == "theorem1") return theorem1_alpha(n, p, o.override_condition);
  if (kind == "lemma1") return lemma1_alpha(n, p, parse_auto(o.beta, "--beta"), o.override_condition);
  fail_input("unknown alpha kind '" + kind + "'");
}

Json float_json(std::complex<double> v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json cmd_compute(const Options& o, std::istream& in) {
  const auto start = std::chrono::steady_clock::now();
  const ComplexIntMatrix a = parse_matrix(read_source(o.matrix, in));
  const std::size_t n = a.n();
  const std::string engine = o.engine == "theorem2-sparse" || o.engine == "theorem2-bigint" ? "theorem2" : o.engine;
  Json out{{"engine", engine}};
  if (engine == "naive" || engine == "ryser" || engine == "laplace") {
    const GaussianBigInt v = engine == "naive"   ? naive_permanent(a)
                             : engine == "ryser" ? ryser_permanent(a)
                                                 : laplace_permanent(a);
    out["permanent"] = to_json(v);
    out["exact"] = true;
    out["alpha"] = nullptr;
    out["validated"] = false;
  } else if (engine == "grid") {
    out["permanent"] = float_json(grid_permanent(a));
    out["exact"] = false;
    out["alpha"] = nullptr;
    out["validated"] = false;
  } else if (engine == "quadrature") {
    const AlphaMatrix alpha = build_alpha(o.alpha_kind.empty() ? "theorem1" : o.alpha_kind, n, o, in);
    const QuadratureGrid grid = quadrature_grid(alpha);
    out["permanent"] = float_json(quadrature_permanent(a, alpha, env_or("IRIS_GRID_CAP", kDefaultGridCap)));
    out["exact"] = false;
    out["alpha"] = to_json(alpha);
    out["grid"] = Json::array({grid.n1, grid.n2});
    out["validated"] = false;
  } else if (engine == "theorem2") {
    EngineConfig config;
    if (o.mode == "sparse")
      config.mode = EngineMode::sparse;
    else if (o.mode == "bigint")
      config.mode = EngineMode::bigint;
    else
      fail_input("--mode: expected sparse or bigint");
    config.k = parse_auto(o.k, "--k");
    config.p = parse_p(o.p);
    config.beta = parse_auto(o.beta, "--beta");
    config.validation = parse_validation(o.validate, o.unsafe);
    config.bit_guard = env_or("IRIS_BIT_GUARD", kDefaultBitGuard);
    const std::string kind = o.alpha_kind.empty() ? "lemma1" : o.alpha_kind;
    if (kind != "lemma1") config.alpha = build_alpha(kind, n, o, in);
    const Theorem2Result r = theorem2_permanent(a, config);
    out["permanent"] = to_json(r.value);
    out["exact"] = true;
    out["mode"] = to_string(config.mode);
    out["alpha"] = to_json(r.report.alpha);
    out["validated"] = r.report.certification == AlphaCertification::brute ||
                       r.report.certification == AlphaCertification::probe;
    out["report"] = to_json(r.report, !o.no_timing);
  } else {
    fail_input("unknown engine '" + o.engine + "'");
  }
  if (!o.no_timing) out["elapsed_ms"] = ms_since(start);
  return out;
}

Json cmd_alpha(const Options& o, std::istream& in) {
  const AlphaMatrix alpha = build_alpha(o.kind, o.n, o, in);
  Json out = to_json(alpha);
  if (alpha.provenance().p && alpha.n() >= 2) out["condition"] = theorem1_condition(*alpha.provenance().p, alpha.n());
  return out;
}

struct ValidateOutcome {
  Json json;
  bool valid = true;
};

ValidateOutcome cmd_validate(const Options& o, std::istream& in) {
  const AlphaMatrix alpha = build_alpha(o.kind, o.n, o, in);
  if (o.method == "brute") {
    const ValidationReport r = validate_alpha(alpha);
    return {to_json(r, !o.no_timing), r.valid};
  }
  if (o.method != "probe") fail_input("--method: expected brute or probe");
  const auto start = std::chrono::steady_clock::now();
  const ProbeResult r = rb_minus_probe(alpha);
  Json witnesses = Json::array();
  Json compositions = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(w);
    if (const auto x = probe_witness_to_composition(w)) compositions.push_back(to_json(*x));
  }
  Json out{{"method", "probe"},
           {"valid", compositions.empty()},
           {"combinations", r.combinations},
           {"witnesses", std::move(witnesses)},
           {"compositions", compositions}};
  if (!o.no_timing) out["elapsed_ms"] = ms_since(start);
  return {out, compositions.empty()};
}

TrialSpec trial_spec(const Options& o) {
  TrialSpec spec;
  std::tie(spec.n_min, spec.n_max) = parse_range(o.n_range);
  spec.entries = parse_entry_kind(o.entries);
  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.engines = split_list(o.engines);
  spec.p_policy = parse_p(o.p);
  spec.validation = parse_validation(o.validate, o.unsafe);
  spec.tolerance = o.tolerance;
  spec.k = parse_auto(o.k, "--k");
  spec.bit_guard = env_or("IRIS_BIT_GUARD", kDefaultBitGuard);
  spec.grid_cap = env_or("IRIS_GRID_CAP", kDefaultGridCap);
  spec.threads = o.threads;
  return spec;
}

Json error_json(ErrorKind kind, const std::string& message) {
  const char* name = kind == ErrorKind::input        ? "input"
                     : kind == ErrorKind::validation ? "validation"
                                                     : "resource_guard";
  return Json{{"error", Json{{"kind", name}, {"message", message}}}};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation:
      return kValidationFailed;
    case ErrorKind::resource_guard:
      return kResourceGuard;
    case ErrorKind::input:
      break;
  }
  return kInputError;
}

void add_alpha_flags(CLI::App* app, Options& o) {
  app->add_option("--p", o.p, "prime window start: min, cube or an index");
  app->add_option("--beta", o.beta, "Lemma-1 beta: auto or an integer");
  app->add_option("--alpha-file", o.alpha_file, "alpha JSON for --alpha-kind/--kind file");
  app->add_flag("--override-condition", o.override_condition, "build theorem1/lemma1 alpha even when the prime condition fails");
}

void add_harness_flags(CLI::App* app, Options& o) {
  app->add_option("--engines", o.engines, "comma-separated engine list");
  app->add_option("--n", o.n_range, "dimension or range a..b");
  app->add_option("--entries", o.entries, "binary, integer:M or gaussian:M");
  app->add_option("--trials", o.trials, "trials (per n for bench)");
  app->add_option("--seed", o.seed, "64-bit seed");
  app->add_option("--p", o.p, "prime window start: min, cube or an index");
  app->add_option("--k", o.k, "theorem2-bigint exponent: auto or an integer");
  app->add_option("--validate", o.validate, "brute, probe or skip");
  app->add_flag("--unsafe", o.unsafe, "allow --validate skip");
  app->add_option("--tolerance", o.tolerance, "absolute tolerance for float engines");
  app->add_option("--threads", o.threads, "worker threads (0: all cores)");
}

}  // namespace

ComplexIntMatrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail_input("matrix input is empty");
  if (text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      fail_input(std::string("malformed matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  std::vector<std::vector<GaussianBigInt>> rows;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::istringstream tokens(line);
    std::vector<GaussianBigInt> row;
    for (std::string tok; tokens >> tok;) row.push_back(GaussianBigInt::from_decimal(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  std::vector<GaussianBigInt> entries;
  for (auto& row : rows) {
    if (row.size() != n) fail_input("matrix grid is not square");
    for (auto& e : row) entries.push_back(std::move(e));
  }
  return ComplexIntMatrix(n, std::move(entries));
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact matrix permanents: oracles, Iris-function engines, alpha lab and cross-checks", "iris"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--no-timing", o.no_timing, "omit elapsed times so output is byte-stable");

  auto* compute = app.add_subcommand("compute", "permanent of one matrix");
  compute->add_option("--matrix", o.matrix, "matrix file, '-' for stdin");
  compute->add_option("--engine", o.engine, "naive, ryser, laplace, grid, quadrature or theorem2");
  compute->add_option("--mode", o.mode, "theorem2 evaluation: sparse or bigint");
  compute->add_option("--alpha-kind", o.alpha_kind, "identity, theorem1, lemma1 or file");
  compute->add_option("--k", o.k, "bigint exponent: auto or an integer");
  compute->add_option("--validate", o.validate, "brute, probe or skip");
  compute->add_flag("--unsafe", o.unsafe, "allow --validate skip");
  add_alpha_flags(compute, o);

  auto* alpha = app.add_subcommand("alpha", "construct an exponent matrix");
  alpha->add_option("--kind", o.kind, "identity, theorem1, lemma1 or file");
  alpha->add_option("--n", o.n, "dimension");
  add_alpha_flags(alpha, o);

  auto* validate = app.add_subcommand("validate", "certify an exponent matrix");
  validate->add_option("--kind", o.kind, "identity, theorem1, lemma1 or file");
  validate->add_option("--n", o.n, "dimension");
  validate->add_option("--method", o.method, "brute (compositions) or probe (kernel, theorem1 alpha)");
  add_alpha_flags(validate, o);

  auto* crosscheck = app.add_subcommand("crosscheck", "randomized engine cross-verification");
  add_harness_flags(crosscheck, o);

  auto* bench = app.add_subcommand("bench", "engine timings");
  add_harness_flags(bench, o);
  bench->add_option("--csv", o.csv, "also write the table as CSV to this path");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, err, err);
      out << Json::object().dump() << '\n';
      return kOk;
    }
    out << error_json(ErrorKind::input, e.what()).dump() << '\n';
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (compute->parsed()) {
      out << cmd_compute(o, in).dump() << '\n';
    } else if (alpha->parsed()) {
      out << cmd_alpha(o, in).dump() << '\n';
    } else if (validate->parsed()) {
      const ValidateOutcome r = cmd_validate(o, in);
      out << r.json.dump() << '\n';
      if (!r.valid) {
        err << r.json.dump() << '\n';
        return kValidationFailed;
      }
    } else if (crosscheck->parsed()) {
      const TrialSpec spec = trial_spec(o);
      const CrosscheckResult r = run_crosscheck(spec);
      out << to_json_lines(spec, r);
      if (r.summary.discrepant_trials > 0) {
        err << r.summary.discrepant_trials << " of " << r.summary.trials << " trials disagree\n";
        return kDiscrepancies;
      }
    } else if (bench->parsed()) {
      const std::vector<BenchRow> rows = iris::bench(trial_spec(o));
      Json table = Json::array();
      for (const auto& row : rows) {
        Json j = to_json(row);
        if (o.no_timing) {
          j.erase("median_ms");
          j.erase("worst_ms");
        }
        table.push_back(std::move(j));
      }
      out << table.dump() << '\n';
      if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        if (!f) fail_input("cannot write '" + o.csv + "'");
        f << bench_csv(rows);
      }
    }
  } catch (const AlphaValidationError& e) {
    Json detail = error_json(ErrorKind::validation, e.what());
    detail["error"]["witness"] = e.report().witness ? to_json(*e.report().witness) : Json(nullptr);
    detail["error"]["report"] = to_json(e.report(), false);
    out << error_json(ErrorKind::validation, e.what()).dump() << '\n';
    err << detail.dump() << '\n';
    return kValidationFailed;
  } catch (const IrisError& e) {
    const Json j = error_json(e.kind(), e.what());
    out << j.dump() << '\n';
    err << j.dump() << '\n';
    return exit_code(e.kind());
  }
  return kOk;
}

}  // namespace iris::cli
