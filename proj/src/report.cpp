#include "sixmoment/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include "sixmoment/error.hpp"
#include "sixmoment/expsums.hpp"
#include "sixmoment/lemmas.hpp"
#include "sixmoment/special.hpp"

namespace sixmoment::report {

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void flatten(const std::string& prefix, const json& j, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", j[i], out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Partial: return "PARTIAL";
  }
  return "?";
}

Status ReportEnvelope::status() const {
  for (const auto& e : entries)
    if (e.violated) return Status::Fail;
  return partial ? Status::Partial : Status::Pass;
}

json ReportEnvelope::to_json() const {
  auto sorted = entries;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["config_echo"] = json::object();
  for (const auto& [k, v] : config_echo) j["config_echo"][k] = v;
  if (!started.empty()) j["started"] = started;
  if (!finished.empty()) j["finished"] = finished;
  j["status"] = to_string(status());
  j["entries"] = json::array();
  for (const auto& e : sorted) {
    json item;
    item["kind"] = e.kind;
    item["key"] = e.key;
    item["body"] = e.body;
    j["entries"].push_back(std::move(item));
  }
  return j;
}

std::string ReportEnvelope::to_csv() const {
  auto sorted = entries;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::ostringstream os;
  os << "kind,key,field,value\n";
  for (const auto& e : sorted) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", e.body, rows);
    for (const auto& [field, value] : rows)
      os << csv_field(e.kind) << ',' << csv_field(e.key) << ',' << csv_field(field) << ',' << csv_field(value)
         << '\n';
  }
  return os.str();
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Entry entry(const scan::ScanReport& r) {
  json b;
  b["name"] = r.name;
  b["range"] = r.range;
  b["status"] = r.pass() ? "PASS" : "FAIL";
  b["checked"] = r.checked;
  b["violation_count"] = r.violation_count;
  b["sup"] = num(r.sup);
  b["argmax"] = r.argmax;
  b["stats"] = json::object();
  for (const auto& [k, v] : r.stats) b["stats"][k] = num(v);
  b["violations"] = json::array();
  for (const auto& v : r.violations)
    b["violations"].push_back({{"case_key", v.case_key}, {"observed", num(v.observed)}, {"bound", num(v.bound)}});
  if (!r.reproducer.empty()) b["reproducer"] = r.reproducer;
  return {"scan", r.name, std::move(b), !r.pass()};
}

Entry entry(const estermann::LaurentTriple& t) {
  json b{{"eta", t.eta}, {"d3", num(t.d3)}, {"d2", num(t.d2)}, {"d1", num(t.d1)}};
  std::ostringstream key;
  key << "laurent,eta=" << t.eta;
  return {"laurent", key.str(), std::move(b), false};
}

Entry entry(const moment::MomentEstimate& e) {
  json b{{"q", e.q},
         {"k", e.k},
         {"diagonal", num(e.diagonal)},
         {"offdiag_partial", num(e.offdiag_partial)},
         {"offdiag_tail_bound", num(e.offdiag_tail_bound)},
         {"normalized", num(e.normalized)},
         {"blocks", e.blocks},
         {"c_terms", e.c_terms}};
  return {"moment", "moment,q=" + std::to_string(e.q), std::move(b), false};
}

Entry entry(const moment::DiagonalBreakdown& d) {
  json b{{"q", d.q},
         {"k", d.k},
         {"direct_value", num(d.direct_value)},
         {"direct_tail", num(d.direct_tail)},
         {"contour_value", num(d.contour_value)},
         {"r1_leading", num(d.r1_leading)},
         {"r1_full", num(d.r1_full)},
         {"h1", num(d.h1)},
         {"ratio_direct_r1", num(d.ratio_direct_r1)},
         {"ratio_contour_r1", num(d.ratio_contour_r1)}};
  return {"diagonal", "diagonal,q=" + std::to_string(d.q), std::move(b), false};
}

Entry entry(const std::string& key, const json& value) { return {"value", key, value, false}; }

// ---- suites ----

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orthogonality", "kloosterman-weil", "conductor-lowering", "sumstar",   "laurent-oracle",
      "finalpiece",    "y-exponent",       "zeta-identity",      "bessel-split", "hankel",
      "diagonal-euler", "dbound",          "moment-proxy"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<scan::ScanReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto pick = [](u64 v, u64 dflt) { return v ? v : dflt; };
  const double tol = opt.tol;
  const int workers = static_cast<int>(opt.workers);
  std::vector<scan::ScanReport> out;
  if (name == "orthogonality") {
    std::vector<u64> qs = {3, 5, 7, 11, 13};
    if (opt.q) qs = {opt.q};
    out.push_back(expsums::orthogonality_suite(qs));
  } else if (name == "kloosterman-weil") {
    out.push_back(expsums::weil_suite(pick(opt.c_max, 500), static_cast<i64>(pick(opt.n_max, 20))));
    out.push_back(expsums::crt_suite(200, opt.seed));
  } else if (name == "conductor-lowering") {
    std::vector<u64> qs = {3, 5, 7};
    if (opt.q) qs = {opt.q};
    out.push_back(expsums::conductor_lowering_suite(qs, pick(opt.c_max, 12), pick(opt.n_max, 6), 10));
  } else if (name == "sumstar") {
    out.push_back(lemmas::sumstar_suite(pick(opt.c_max, 60), pick(opt.n_max, 30)));
  } else if (name == "laurent-oracle") {
    out.push_back(estermann::laurent_oracle_suite(pick(opt.eta_max, 30), tol > 0 ? tol : 1e-6));
    out.push_back(estermann::d3_closed_form_suite(pick(opt.n_max, 2000), 1e-10));
  } else if (name == "finalpiece") {
    const u64 n = pick(opt.n_max, 10000);
    out.push_back(lemmas::finalpiece_scan(n));
    out.push_back(lemmas::cfunc_consistency_suite(n));
    out.push_back(lemmas::derivative_crosscheck_suite());
  } else if (name == "y-exponent") {
    out.push_back(lemmas::y_exhaustive_check(0.25, opt.seed));
  } else if (name == "zeta-identity") {
    out.push_back(lemmas::zeta_identity_suite());
  } else if (name == "bessel-split") {
    out.push_back(lemmas::bessel_split_suite());
  } else if (name == "hankel") {
    out.push_back(special::hankel_suite(tol > 0 ? tol : 1e-5));
  } else if (name == "diagonal-euler") {
    out.push_back(moment::h_factor_suite());
    std::vector<u64> qs = {101, 401, 1009, 4001};
    if (opt.q) qs = {opt.q};
    out.push_back(moment::diagonal_suite(qs, opt.k));
  } else if (name == "moment-proxy") {
    std::vector<u64> qs = {11, 13, 17, 19, 23, 31};
    if (opt.q) qs = {opt.q};
    out.push_back(moment::moment_proxy_suite(qs, opt.k));
    out.push_back(moment::petersson_consistency_suite());
  } else if (name == "dbound") {
    const std::pair<int, u64> plan[] = {{3, 1000000}, {2, 100000}, {1, 5000}};
    for (const auto& [i, dflt] : plan) {
      const u64 eta_max = opt.eta_max ? std::min(opt.eta_max, dflt) : dflt;
      const auto rep = estermann::dbound_scan(i, eta_max, workers);
      auto prop = estermann::dbound_property(rep);
      prop.name = "dbound,i=" + std::to_string(i);
      out.push_back(std::move(prop));
    }
  } else if (name == "all") {
    for (const auto& n : suite_names())
      if (n != "moment-proxy")
        for (auto& r : run_suite(n, opt)) out.push_back(std::move(r));
  } else {
    fail(ErrorKind::PreconditionViolation, "unknown suite: " + name);
  }
  return out;
}

}  // namespace sixmoment::report
