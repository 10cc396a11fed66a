#pragma once

// On-disk certificate format: one JSON object, N kept in factored form.
// Parsing is strict; unknown or missing fields are errors.

#include <initializer_list>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "cyclo/hunter.hpp"

namespace cyclo {

inline constexpr const char* schema_version = "1";

struct VerificationSummary {
  Coeff computed_value = 0;
  bool window_checked = false;
  bool lift_checked = false;
  bool pass = false;
  std::vector<Failure> failures;

  static VerificationSummary of(const VerificationReport& r) {
    return {r.computed_value, r.window_checked, r.lift_checked, r.pass, r.failures};
  }

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct CertificateDocument {
  Certificate certificate;
  std::optional<VerificationSummary> verification;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

using Json = nlohmann::ordered_json;

namespace detail {

inline Json factors_to_json(const FactoredInteger& n) {
  Json out = Json::array();
  for (const auto& f : n.factors()) out.push_back({f.prime, f.exponent});
  return out;
}

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

inline void expect_keys(const Json& obj, std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional, const std::string& where) {
  if (!obj.is_object()) schema_error(where + " must be an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!obj.contains(k)) schema_error(where + ": missing field '" + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& item : obj.items())
    if (!known.count(item.key())) schema_error(where + ": unknown field '" + item.key() + "'");
}

inline u64 get_u64(const Json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) schema_error(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<u64>();
}

inline Coeff get_i64(const Json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_number_unsigned()) {
    const u64 u = v.get<u64>();
    if (u > static_cast<u64>(INT64_MAX)) schema_error(std::string("field '") + key + "' out of range");
    return static_cast<Coeff>(u);
  }
  if (!v.is_number_integer()) schema_error(std::string("field '") + key + "' must be an integer");
  return v.get<Coeff>();
}

inline bool get_bool(const Json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_boolean()) schema_error(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

inline u64 as_u64(const Json& v, const char* what) {
  if (!v.is_number_unsigned()) schema_error(std::string(what) + " must be a nonnegative integer");
  return v.get<u64>();
}

inline FactoredInteger factors_from_json(const Json& arr, const char* key) {
  if (!arr.is_array()) schema_error(std::string("field '") + key + "' must be an array");
  std::vector<PrimePower> f;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) schema_error(std::string(key) + " entries must be [prime, exponent]");
    const u64 e = as_u64(pair[1], "exponent");
    if (e > UINT32_MAX) schema_error("exponent out of range");
    f.push_back({as_u64(pair[0], "prime"), static_cast<std::uint32_t>(e)});
  }
  try {
    return FactoredInteger(std::move(f));
  } catch (const Error& e) {
    schema_error(std::string(key) + ": " + e.what());
  }
}

}  // namespace detail

inline Json to_json(const VerificationSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back({{"reason", to_string(f.reason)}, {"detail", f.detail}});
  return Json{{"pass", s.pass},
              {"computed_value", s.computed_value},
              {"window_checked", s.window_checked},
              {"lift_checked", s.lift_checked},
              {"failures", failures}};
}

inline Json to_json(const Certificate& c) {
  Json primes = Json::array();
  for (u64 p : c.cluster.primes) primes.push_back(p);
  return Json{{"schema_version", schema_version},
              {"mode", to_string(c.mode)},
              {"m", c.m_original},
              {"v", c.v},
              {"kernel", c.plan.kernel},
              {"mu_kernel", c.plan.mu_kernel},
              {"t", c.plan.t},
              {"delta", c.plan.delta},
              {"cluster_n", c.cluster.n},
              {"primes", primes},
              {"q", c.q ? Json(*c.q) : Json(nullptr)},
              {"N_factors", detail::factors_to_json(c.N)},
              {"k", c.k},
              {"stretch", c.stretch},
              {"N_lifted_factors", detail::factors_to_json(c.N_lifted)},
              {"k_lifted", c.k_lifted},
              {"truncation", c.truncation},
              {"ratio_num", c.ratio.num},
              {"ratio_den", c.ratio.den}};
}

inline Json to_json(const CertificateDocument& d) {
  Json j = to_json(d.certificate);
  if (d.verification) j["verification"] = to_json(*d.verification);
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j{{"certificate", to_json(r.certificate)}};
  const Json summary = to_json(VerificationSummary::of(r));
  for (const auto& item : summary.items()) j[item.key()] = item.value();
  return j;
}

inline VerificationSummary summary_from_json(const Json& j) {
  detail::expect_keys(j, {"pass", "computed_value", "window_checked", "lift_checked", "failures"}, {}, "verification");
  VerificationSummary s;
  s.pass = detail::get_bool(j, "pass");
  s.computed_value = detail::get_i64(j, "computed_value");
  s.window_checked = detail::get_bool(j, "window_checked");
  s.lift_checked = detail::get_bool(j, "lift_checked");
  const auto& failures = j.at("failures");
  if (!failures.is_array()) detail::schema_error("failures must be an array");
  for (const auto& f : failures) {
    detail::expect_keys(f, {"reason", "detail"}, {}, "failure");
    if (!f.at("reason").is_string() || !f.at("detail").is_string()) detail::schema_error("failure fields are strings");
    const auto reason = reason_from_string(f.at("reason").get<std::string>());
    if (!reason) detail::schema_error("unknown failure reason");
    s.failures.push_back({*reason, f.at("detail").get<std::string>()});
  }
  return s;
}

/// Plan fields that are not stored (q1, q2, predicted value) are rederived
/// from the kernel, so the kernel must be within the degree budget.
inline CertificateDocument document_from_json(const Json& j, const Limits& limits = {}) {
  using namespace detail;
  expect_keys(j,
              {"schema_version", "mode", "m", "v", "kernel", "mu_kernel", "t", "delta", "cluster_n", "primes", "q",
               "N_factors", "k", "stretch", "N_lifted_factors", "k_lifted", "truncation", "ratio_num", "ratio_den"},
              {"verification"}, "certificate");
  if (!j.at("schema_version").is_string() || j.at("schema_version").get<std::string>() != schema_version)
    schema_error("unsupported schema_version");

  CertificateDocument d;
  auto& c = d.certificate;
  const auto& mode = j.at("mode");
  if (mode == "a") c.mode = Mode::a;
  else if (mode == "c") c.mode = Mode::c;
  else schema_error("mode must be \"a\" or \"c\"");

  c.m_original = get_u64(j, "m");
  c.v = get_i64(j, "v");
  c.plan.kernel = get_u64(j, "kernel");
  const Coeff mu = get_i64(j, "mu_kernel");
  if (mu != 1 && mu != -1) schema_error("mu_kernel must be +1 or -1");
  c.plan.mu_kernel = static_cast<int>(mu);
  c.plan.t = get_u64(j, "t");
  c.plan.delta = get_u64(j, "delta");
  c.cluster.n = get_u64(j, "cluster_n");
  const auto& primes = j.at("primes");
  if (!primes.is_array() || primes.empty()) schema_error("primes must be a nonempty array");
  for (const auto& p : primes) c.cluster.primes.push_back(as_u64(p, "prime"));
  const auto& q = j.at("q");
  if (!q.is_null()) c.q = as_u64(q, "q");
  c.N = factors_from_json(j.at("N_factors"), "N_factors");
  c.k = get_u64(j, "k");
  c.stretch = get_u64(j, "stretch");
  c.N_lifted = factors_from_json(j.at("N_lifted_factors"), "N_lifted_factors");
  c.k_lifted = get_u64(j, "k_lifted");
  c.truncation = get_u64(j, "truncation");
  c.ratio = Ratio{get_u64(j, "ratio_num"), get_u64(j, "ratio_den")};
  if (c.m_original == 0 || c.stretch == 0 || c.plan.t == 0) schema_error("m, stretch and t must be positive");

  if (c.plan.kernel < 2 || c.plan.kernel > limits.degree_budget) schema_error("kernel out of range");
  const auto kf = factor(c.plan.kernel);
  if (mobius(kf) == 1) {
    c.plan.q1 = kf.factors()[0].prime;
    c.plan.q2 = kf.factors()[1].prime;
  }
  try {
    const auto table = c_table(c.plan.kernel, limits);
    c.plan.predicted_value = window_value(table, c.plan.mu_kernel, c.plan.t, c.plan.delta + 1);
  } catch (const Error& e) {
    schema_error(std::string("cannot rederive plan: ") + e.what());
  }

  if (j.contains("verification")) d.verification = summary_from_json(j.at("verification"));
  return d;
}

inline std::string serialize(const CertificateDocument& d) { return to_json(d).dump(2) + "\n"; }

inline CertificateDocument parse_document(const std::string& text, const Limits& limits = {}) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  return document_from_json(j, limits);
}

}  // namespace cyclo
