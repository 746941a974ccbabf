#include "iris/serialize.hpp"

#include <climits>

#include "iris/error.hpp"

namespace iris {
namespace {

Json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return GaussianBigInt::from_decimal(j.get<std::string>()).re();
  fail_input("matrix entry is not an integer: " + j.dump());
}

std::uint64_t u64_from_json(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) fail_input(std::string(what) + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }
  fail_input(std::string(what) + " must be a nonnegative integer, got " + j.dump());
}

double ms(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

}  // namespace

Json to_json(const GaussianBigInt& x) { return Json{{"re", x.re_string()}, {"im", x.im_string()}}; }

GaussianBigInt gaussian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) fail_input("expected {\"re\":…, \"im\":…}");
  const auto part = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    fail_input("Gaussian component must be a decimal string or integer");
  };
  return GaussianBigInt::from_decimal(part(j["re"]), part(j["im"]));
}

Json exponent_json(Exponent e) {
  if (e < (static_cast<Exponent>(1) << 63)) return Json(static_cast<std::uint64_t>(e));
  return Json(exponent_to_string(e));
}

Json to_json(const ComplexIntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (const auto& e : a.row(i)) {
      if (e.is_real())
        row.push_back(integer_json(e.re()));
      else
        row.push_back(Json::array({integer_json(e.re()), integer_json(e.im())}));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

ComplexIntMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) fail_input("matrix JSON needs a \"rows\" array");
  const Json& rows = j["rows"];
  const std::size_t n = rows.size();
  if (n == 0) fail_input("matrix is empty");
  std::vector<GaussianBigInt> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) fail_input("matrix is not square");
    for (const auto& e : row) {
      if (e.is_array()) {
        if (e.size() != 2) fail_input("complex entry must be [re, im]");
        entries.emplace_back(integer_from_json(e[0]), integer_from_json(e[1]));
      } else {
        entries.emplace_back(integer_from_json(e), mpz_class(0));
      }
    }
  }
  return ComplexIntMatrix(n, std::move(entries));
}

Json to_json(const AlphaMatrix& alpha) {
  Json rows = Json::array();
  for (const auto& r : alpha.rows()) rows.push_back(r);
  Json totals = Json::array();
  for (Exponent t : alpha.totals()) totals.push_back(exponent_json(t));
  Json prov{{"kind", to_string(alpha.provenance().kind)}};
  if (alpha.provenance().p) prov["p"] = *alpha.provenance().p;
  if (alpha.provenance().beta) prov["beta"] = *alpha.provenance().beta;
  return Json{{"t", alpha.t()},
              {"n", alpha.n()},
              {"rows", std::move(rows)},
              {"alpha_T", std::move(totals)},
              {"S", exponent_json(alpha.total_degree())},
              {"provenance", std::move(prov)}};
}

AlphaMatrix alpha_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) fail_input("alpha JSON needs a \"rows\" array");
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) fail_input("alpha rows must be arrays");
    std::vector<std::uint64_t> row;
    for (const auto& v : r) row.push_back(u64_from_json(v, "alpha entry"));
    rows.push_back(std::move(row));
  }
  if (j.contains("t") && u64_from_json(j["t"], "t") != rows.size()) fail_input("alpha \"t\" does not match rows");
  if (j.contains("n") && !rows.empty() && u64_from_json(j["n"], "n") != rows.front().size())
    fail_input("alpha \"n\" does not match rows");

  Provenance prov;
  if (j.contains("provenance")) {
    const Json& pj = j["provenance"];
    const std::string kind = pj.value("kind", "user");
    if (pj.contains("p")) prov.p = u64_from_json(pj["p"], "p");
    if (pj.contains("beta")) prov.beta = u64_from_json(pj["beta"], "beta");
    if (kind == "identity") {
      prov.kind = AlphaKind::identity;
    } else if (kind == "theorem1" || kind == "lemma1") {
      if (!prov.p) fail_input(kind + " provenance needs p");
      if (rows.empty()) fail_input("alpha matrix must be non-empty");
      const std::uint64_t n = rows.front().size();
      const AlphaMatrix expected =
          kind == "theorem1" ? theorem1_alpha(n, *prov.p, true) : lemma1_alpha(n, *prov.p, prov.beta, true);
      if (expected.rows() != rows) fail_input(kind + " provenance does not match the rows");
      return expected;
    } else if (kind != "user") {
      fail_input("unknown alpha provenance kind '" + kind + "'");
    }
  }
  AlphaMatrix a = AlphaMatrix::from_rows(std::move(rows), prov);
  if (prov.kind == AlphaKind::identity && !(a == identity_alpha(a.n()))) fail_input("identity provenance does not match the rows");
  return a;
}

Json to_json(const CompositionVector& x) {
  Json out = Json::array();
  for (auto v : x.parts()) out.push_back(v);
  return out;
}

Json to_json(const ValidationReport& r, bool timing) {
  Json out{{"valid", r.valid}, {"checked", r.checked}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["witness_count"] = r.witness_count;
  if (timing) out["elapsed_ms"] = ms(r.elapsed);
  return out;
}

Json to_json(const BigintTrace& t) {
  return Json{{"k", t.k},
              {"shift", t.shift},
              {"iris_bits", t.iris_bits},
              {"per_m_bits", std::max(mpz_sizeinbase(t.per_m.re().get_mpz_t(), 2),
                                      mpz_sizeinbase(t.per_m.im().get_mpz_t(), 2))},
              {"residue", Json{{"a", t.residue.a.get_str()}, {"b", t.residue.b.get_str()}}},
              {"corrected", Json{{"re", t.corrected_re}, {"im", t.corrected_im}}},
              {"fraction_below_half", t.fraction_below_half},
              {"fraction_bits", t.fraction_bits}};
}

Json to_json(const Theorem2Report& r, bool timing) {
  Json out{{"mode", to_string(r.mode)}, {"alpha", to_json(r.alpha)}};
  out["p"] = r.p ? Json(*r.p) : Json(nullptr);
  out["beta"] = r.beta ? Json(*r.beta) : Json(nullptr);
  out["k"] = r.k ? Json(*r.k) : Json(nullptr);
  out["validation"] = to_string(r.validation);
  out["certification"] = to_string(r.certification);
  out["validation_checked"] = r.validation_checked;
  out["max_exponent"] = exponent_json(r.max_exponent);
  if (r.mode == EngineMode::sparse)
    out["term_count"] = r.term_count;
  else
    out["bit_count"] = r.bit_count;
  if (r.trace) out["bigint"] = to_json(*r.trace);
  if (timing) out["elapsed_ms"] = ms(r.elapsed);
  return out;
}

}  // namespace iris
