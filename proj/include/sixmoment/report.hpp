#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sixmoment/arith.hpp"
#include "sixmoment/estermann.hpp"
#include "sixmoment/moment.hpp"
#include "sixmoment/scan.hpp"

namespace sixmoment::report {

using arith::u64;
using arith::i64;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Partial };
const char* to_string(Status s) noexcept;

struct Entry {
  std::string kind;  // scan | laurent | moment | diagonal | value
  std::string key;   // sort key
  json body;
  bool violated = false;
};

struct ReportEnvelope {
  std::string tool_version = kToolVersion;
  std::string command;
  std::map<std::string, std::string> config_echo;
  std::string started, finished;  // ISO-8601 UTC, empty with --no-timestamps
  std::vector<Entry> entries;
  bool partial = false;  // a suite aborted on a numerical failure

  void add(Entry e) { entries.push_back(std::move(e)); }
  Status status() const;
  /// Entries sorted by case key; FAIL iff any entry records a violation.
  json to_json() const;
  /// Flat CSV: kind,key,field,value (fixed column order).
  std::string to_csv() const;
};

std::string utc_now();

Entry entry(const scan::ScanReport& r);
Entry entry(const estermann::LaurentTriple& t);
Entry entry(const moment::MomentEstimate& e);
Entry entry(const moment::DiagonalBreakdown& b);
Entry entry(const std::string& key, const json& value);

// ---- suite registry ----

struct SuiteOptions {
  u64 eta_max = 0;  // 0: criterion default
  u64 n_max = 0;
  u64 c_max = 0;
  u64 q = 0;
  int k = 3;
  double tol = 0.0;
  unsigned workers = 1;
  u64 seed = 1;
};

/// Known suite names; `all` runs every one except the exploratory moment-proxy.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Runs one suite with defaults matching the acceptance criteria.
std::vector<scan::ScanReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace sixmoment::report
