#include "iris/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "iris/error.hpp"
#include "iris/iris_poly.hpp"
#include "iris/quadrature.hpp"

namespace iris {
namespace {

const std::vector<std::string> kEngines = {"naive",      "ryser",           "laplace",        "grid",
                                           "quadrature", "theorem2-sparse", "theorem2-bigint"};

bool is_theorem2(const std::string& e) { return e == "theorem2-sparse" || e == "theorem2-bigint"; }

long entry_bound(const EntryKind& e) { return e.kind == EntryKind::Kind::binary ? 1 : e.bound; }

// Per-dimension state shared by every trial of that size.
struct Prepared {
  std::size_t n = 0;
  std::optional<AlphaMatrix> row_alpha;  // Lemma-1, for theorem2-*
  AlphaCertification cert = AlphaCertification::none;
  std::uint64_t checked = 0;
  std::optional<std::string> row_error;
  std::optional<AlphaMatrix> two_row_alpha;  // Theorem-1, for quadrature
  std::optional<std::string> two_row_error;
};

Prepared prepare(std::size_t n, const TrialSpec& spec, bool need_row, bool need_two_row) {
  Prepared prep;
  prep.n = n;
  if (need_row) {
    try {
      const std::uint64_t p = resolve_p(spec.p_policy, n);
      prep.row_alpha = lemma1_alpha(n, p, std::nullopt);
      prep.cert = certify(*prep.row_alpha, spec.validation, kValidationCap, &prep.checked);
    } catch (const AlphaValidationError& e) {
      std::string w;
      if (e.report().witness) w = " witness " + to_json(*e.report().witness).dump();
      prep.row_error = std::string(e.what()) + w;
    } catch (const IrisError& e) {
      prep.row_error = e.what();
    }
  }
  if (need_two_row) {
    try {
      prep.two_row_alpha = theorem1_alpha(n, resolve_p(spec.p_policy, n));
    } catch (const IrisError& e) {
      prep.two_row_error = e.what();
    }
  }
  return prep;
}

EngineValue run_builtin(const std::string& engine, const ComplexIntMatrix& a, const Prepared& prep,
                        const TrialSpec& spec) {
  if (engine == "naive") return naive_permanent(a, spec.caps.naive);
  if (engine == "ryser") return ryser_permanent(a, spec.caps.ryser);
  if (engine == "laplace") return laplace_permanent(a, spec.caps.laplace);
  if (engine == "grid") return grid_permanent(a, spec.caps.grid);
  if (engine == "quadrature") {
    if (prep.two_row_error) throw IrisError(ErrorKind::input, *prep.two_row_error);
    return quadrature_permanent(a, *prep.two_row_alpha, spec.grid_cap);
  }
  if (prep.row_error) throw IrisError(ErrorKind::validation, *prep.row_error);
  if (engine == "theorem2-sparse") return per_m_sparse(a, *prep.row_alpha, prep.cert);
  const BitCount k = spec.k.value_or(auto_k(a.bound(), a.n()));
  return per_m_bigint(a, *prep.row_alpha, k, prep.cert, spec.bit_guard).value;
}

bool agree(const EngineValue& x, const EngineValue& y, double tol) {
  const auto* ex = std::get_if<GaussianBigInt>(&x);
  const auto* ey = std::get_if<GaussianBigInt>(&y);
  if (ex && ey) return *ex == *ey;
  const std::complex<double> fx = ex ? to_complex_double(*ex) : std::get<std::complex<double>>(x);
  const std::complex<double> fy = ey ? to_complex_double(*ey) : std::get<std::complex<double>>(y);
  return std::abs(fx - fy) <= tol;
}

Json value_json(const EngineOutcome& o) {
  Json out{{"engine", o.engine}};
  if (o.error) {
    out["error"] = *o.error;
  } else if (const auto* g = std::get_if<GaussianBigInt>(&*o.value)) {
    out["exact"] = true;
    out["value"] = to_json(*g);
  } else {
    const auto f = std::get<std::complex<double>>(*o.value);
    out["exact"] = false;
    out["value"] = Json{{"re", f.real()}, {"im", f.imag()}};
  }
  return out;
}

Json context_for(const Prepared& prep, const std::vector<std::string>& engines, const TrialSpec& spec,
                 const ComplexIntMatrix& a) {
  Json ctx = Json::object();
  const bool t2 = std::any_of(engines.begin(), engines.end(), is_theorem2);
  if (t2) {
    Json c{{"p_policy", spec.p_policy.policy == PPolicy::minimal ? "minimal"
                        : spec.p_policy.policy == PPolicy::cube  ? "cube"
                                                                 : "explicit"},
           {"validation", to_string(spec.validation)},
           {"certification", to_string(prep.cert)}};
    if (prep.row_alpha) c["alpha"] = to_json(*prep.row_alpha);
    if (prep.row_error) c["error"] = *prep.row_error;
    if (std::find(engines.begin(), engines.end(), "theorem2-bigint") != engines.end())
      c["k"] = spec.k.value_or(auto_k(a.bound(), a.n()));
    ctx["theorem2"] = std::move(c);
  }
  if (std::find(engines.begin(), engines.end(), "quadrature") != engines.end()) {
    Json c = Json::object();
    if (prep.two_row_alpha) {
      c["alpha"] = to_json(*prep.two_row_alpha);
      const QuadratureGrid g = quadrature_grid(*prep.two_row_alpha);
      c["grid"] = Json::array({g.n1, g.n2});
    }
    if (prep.two_row_error) c["error"] = *prep.two_row_error;
    ctx["quadrature"] = std::move(c);
  }
  return ctx;
}

std::vector<std::string> checked_engines(const TrialSpec& spec, const std::vector<CustomEngine>& extra) {
  std::vector<std::string> names;
  for (const auto& e : spec.engines) {
    const std::string c = canonical_engine_name(e);
    if (std::find(names.begin(), names.end(), c) != names.end()) fail_input("engine listed twice: " + c);
    names.push_back(c);
  }
  if (names.size() + extra.size() < 2) fail_input("crosscheck needs at least two engines");
  if (spec.trials == 0) fail_input("crosscheck needs at least one trial");
  if (spec.n_min == 0 || spec.n_min > spec.n_max) fail_input("invalid n range");

  const bool any_float = std::any_of(names.begin(), names.end(), is_float_engine);
  if (any_float && !spec.tolerance) fail_input("float engines need an explicit tolerance");
  if (spec.tolerance && !(*spec.tolerance >= 0)) fail_input("tolerance must be nonnegative");

  const auto cap_check = [&](const std::string& engine, std::size_t cap) {
    if (std::find(names.begin(), names.end(), engine) != names.end() && spec.n_max > cap)
      fail_guard(engine + ": n=" + std::to_string(spec.n_max) + " exceeds cap " + std::to_string(cap));
  };
  cap_check("naive", spec.caps.naive);
  cap_check("ryser", spec.caps.ryser);
  cap_check("laplace", spec.caps.laplace);
  cap_check("grid", spec.caps.grid);

  const mpz_class bound(entry_bound(spec.entries));
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    const bool t2 = std::any_of(names.begin(), names.end(), is_theorem2);
    if (t2 && spec.validation == ValidationPolicy::brute && composition_count(n) > kValidationCap)
      fail_guard("brute validation at n=" + std::to_string(n) + " exceeds the enumeration cap");
    if (std::find(names.begin(), names.end(), "theorem2-bigint") != names.end()) {
      const BitCount k = spec.k.value_or(auto_k(bound, n));
      mpz_class z;
      mpz_setbit(z.get_mpz_t(), k);
      if (!(z > modulus_floor(bound, n))) fail_input("k=" + std::to_string(k) + " too small at n=" + std::to_string(n));
      const AlphaMatrix alpha = lemma1_alpha(n, resolve_p(spec.p_policy, n), std::nullopt, true);
      const Exponent bits = static_cast<Exponent>(k) * (static_cast<Exponent>(n) * alpha.row_max(0) + 1);
      if (bits > spec.bit_guard)
        fail_guard("theorem2-bigint at n=" + std::to_string(n) + " needs ~" + exponent_to_string(bits) +
                   " bits, above the guard " + std::to_string(spec.bit_guard));
    }
    if (std::find(names.begin(), names.end(), "quadrature") != names.end()) {
      const AlphaMatrix alpha = theorem1_alpha(n, resolve_p(spec.p_policy, n), true);
      if (quadrature_grid(alpha).points() > spec.grid_cap)
        fail_guard("quadrature grid at n=" + std::to_string(n) + " exceeds the grid cap");
    }
  }
  return names;
}

template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::string canonical_engine_name(const std::string& name) {
  if (name == "theorem2") return "theorem2-sparse";
  if (std::find(kEngines.begin(), kEngines.end(), name) == kEngines.end())
    fail_input("unknown engine '" + name + "'");
  return name;
}

bool is_float_engine(const std::string& canonical) { return canonical == "grid" || canonical == "quadrature"; }

CrosscheckResult run_crosscheck(const TrialSpec& spec, const std::vector<CustomEngine>& extra) {
  const std::vector<std::string> names = checked_engines(spec, extra);
  std::vector<std::string> all = names;
  for (const auto& e : extra) all.push_back(e.name);

  const bool need_row = std::any_of(names.begin(), names.end(), is_theorem2);
  const bool need_two_row = std::find(names.begin(), names.end(), "quadrature") != names.end();
  std::map<std::size_t, Prepared> prepared;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) prepared.emplace(n, prepare(n, spec, need_row, need_two_row));

  const double tol = spec.tolerance.value_or(0.0);
  const std::size_t engine_count = all.size();
  struct TrialOutcome {
    std::vector<EngineOutcome> results;
    std::vector<char> pair_agree;  // upper triangle, row-major
    std::optional<DiscrepancyRecord> record;
  };
  std::vector<TrialOutcome> outcomes(spec.trials);

  parallel_for(spec.trials, spec.threads, [&](std::uint64_t trial) {
    SplitMix64 rng = substream(spec.seed, trial);
    const std::size_t n = spec.n_min + rng.below(spec.n_max - spec.n_min + 1);
    const ComplexIntMatrix a = random_matrix(n, spec.entries, rng);
    const Prepared& prep = prepared.at(n);

    TrialOutcome& out = outcomes[trial];
    for (std::size_t e = 0; e < engine_count; ++e) {
      EngineOutcome o{all[e], std::nullopt, std::nullopt};
      try {
        o.value = e < names.size() ? run_builtin(all[e], a, prep, spec) : extra[e - names.size()].run(a);
      } catch (const std::exception& ex) {
        o.error = ex.what();
      }
      out.results.push_back(std::move(o));
    }
    std::vector<std::pair<std::string, std::string>> bad;
    for (std::size_t i = 0; i < engine_count; ++i) {
      for (std::size_t j = i + 1; j < engine_count; ++j) {
        const auto& x = out.results[i];
        const auto& y = out.results[j];
        const bool ok = x.value && y.value && agree(*x.value, *y.value, tol);
        out.pair_agree.push_back(ok);
        if (!ok) bad.emplace_back(x.engine, y.engine);
      }
    }
    if (!bad.empty()) {
      out.record = DiscrepancyRecord{trial, spec.seed, n, a, out.results, std::move(bad),
                                     context_for(prep, names, spec, a)};
    }
  });

  CrosscheckResult result;
  result.summary.trials = spec.trials;
  for (std::size_t i = 0; i < engine_count; ++i)
    for (std::size_t j = i + 1; j < engine_count; ++j) result.summary.pairs.push_back({all[i], all[j], 0, 0});
  for (auto& o : outcomes) {
    for (std::size_t p = 0; p < o.pair_agree.size(); ++p) {
      if (o.pair_agree[p])
        ++result.summary.pairs[p].agreements;
      else
        ++result.summary.pairs[p].discrepancies;
    }
    if (o.record) {
      ++result.summary.discrepant_trials;
      result.records.push_back(std::move(*o.record));
    }
  }
  return result;
}

Json to_json(const TrialSpec& spec) {
  Json engines = Json::array();
  for (const auto& e : spec.engines) engines.push_back(canonical_engine_name(e));
  Json out{{"n_min", spec.n_min},
           {"n_max", spec.n_max},
           {"entries", to_string(spec.entries)},
           {"trials", spec.trials},
           {"seed", spec.seed},
           {"engines", std::move(engines)},
           {"p_policy", spec.p_policy.policy == PPolicy::minimal ? "minimal"
                        : spec.p_policy.policy == PPolicy::cube  ? "cube"
                                                                 : std::to_string(spec.p_policy.value)},
           {"validation", to_string(spec.validation)}};
  out["tolerance"] = spec.tolerance ? Json(*spec.tolerance) : Json(nullptr);
  out["k"] = spec.k ? Json(*spec.k) : Json("auto");
  return out;
}

Json to_json(const DiscrepancyRecord& r) {
  Json results = Json::array();
  for (const auto& o : r.results) results.push_back(value_json(o));
  Json pairs = Json::array();
  for (const auto& [a, b] : r.disagreeing) pairs.push_back(Json::array({a, b}));
  return Json{{"type", "discrepancy"}, {"trial", r.trial},   {"seed", r.seed},
              {"n", r.n},              {"matrix", to_json(r.matrix)}, {"results", std::move(results)},
              {"disagreeing", std::move(pairs)}, {"context", r.context}};
}

Json to_json(const CrosscheckSummary& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs)
    pairs.push_back(Json{{"engines", Json::array({p.first, p.second})},
                         {"agreements", p.agreements},
                         {"discrepancies", p.discrepancies}});
  return Json{{"type", "summary"}, {"trials", s.trials}, {"discrepant_trials", s.discrepant_trials}, {"pairs", std::move(pairs)}};
}

std::string to_json_lines(const TrialSpec& spec, const CrosscheckResult& result) {
  std::ostringstream out;
  for (const auto& r : result.records) out << to_json(r).dump() << '\n';
  Json summary = to_json(result.summary);
  summary["spec"] = to_json(spec);
  out << summary.dump() << '\n';
  return out.str();
}

std::vector<BenchRow> bench(const TrialSpec& spec) {
  const std::vector<std::string> names = checked_engines(spec, {});
  const bool need_row = std::any_of(names.begin(), names.end(), is_theorem2);
  const bool need_two_row = std::find(names.begin(), names.end(), "quadrature") != names.end();
  std::vector<BenchRow> rows;
  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    const Prepared prep = prepare(n, spec, need_row, need_two_row);
    std::vector<ComplexIntMatrix> matrices;
    for (std::uint64_t t = 0; t < spec.trials; ++t) {
      SplitMix64 rng = substream(spec.seed, (static_cast<std::uint64_t>(n) << 32) | t);
      matrices.push_back(random_matrix(n, spec.entries, rng));
    }
    for (const auto& engine : names) {
      BenchRow row;
      row.engine = engine;
      row.n = n;
      row.trials = spec.trials;
      std::vector<double> times;
      for (const auto& a : matrices) {
        const auto start = std::chrono::steady_clock::now();
        if (engine == "theorem2-sparse" && prep.row_alpha && !prep.row_error) {
          const SparseIrisPoly poly = iris_poly(a, *prep.row_alpha);
          row.term_count = std::max(row.term_count.value_or(0), poly.size());
        } else if (engine == "theorem2-bigint" && prep.row_alpha && !prep.row_error) {
          const BitCount k = spec.k.value_or(auto_k(a.bound(), n));
          const auto r = per_m_bigint(a, *prep.row_alpha, k, prep.cert, spec.bit_guard);
          row.bit_count = std::max(row.bit_count.value_or(0), r.trace.iris_bits);
        } else {
          (void)run_builtin(engine, a, prep, spec);
        }
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      }
      std::sort(times.begin(), times.end());
      row.median_ms = times.size() % 2 ? times[times.size() / 2]
                                       : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
      row.worst_ms = times.back();
      if (is_theorem2(engine) && prep.row_alpha) {
        row.max_exponent = static_cast<Exponent>(n) * prep.row_alpha->row_max(0);
        row.term_bound = composition_count(n);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Json to_json(const BenchRow& row) {
  Json out{{"engine", row.engine}, {"n", row.n}, {"trials", row.trials}, {"median_ms", row.median_ms}, {"worst_ms", row.worst_ms}};
  if (row.max_exponent) out["max_exponent"] = exponent_json(*row.max_exponent);
  if (row.term_count) out["term_count"] = *row.term_count;
  if (row.term_bound) out["term_bound"] = *row.term_bound;
  if (row.bit_count) out["bit_count"] = *row.bit_count;
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "engine,n,trials,median_ms,worst_ms,max_exponent,term_count,term_bound,bit_count\n";
  for (const auto& r : rows) {
    out << r.engine << ',' << r.n << ',' << r.trials << ',' << r.median_ms << ',' << r.worst_ms << ','
        << (r.max_exponent ? exponent_to_string(*r.max_exponent) : "") << ','
        << (r.term_count ? std::to_string(*r.term_count) : "") << ','
        << (r.term_bound ? std::to_string(*r.term_bound) : "") << ','
        << (r.bit_count ? std::to_string(*r.bit_count) : "") << '\n';
  }
  return out.str();
}

}  // namespace iris
