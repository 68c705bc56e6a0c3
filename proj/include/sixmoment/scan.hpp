#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sixmoment::scan {

struct Violation {
  std::string case_key;
  double observed;
  double bound;
};

/// Outcome of a range verification.
struct ScanReport {
  std::string name;
  std::string range;  // human-readable range descriptor
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxStored only
  double sup = 0.0;                   // sup of the monitored statistic
  std::string argmax;                 // case key where sup was attained
  std::map<std::string, double> stats;
  std::string reproducer;  // filled in by the CLI layer on failure

  static constexpr std::size_t kMaxStored = 64;

  bool pass() const { return violation_count == 0; }

  void observe(const std::string& key, double value) {
    if (checked == 0 || value > sup) {
      sup = value;
      argmax = key;
    }
  }
  void violate(std::string key, double observed, double bound) {
    ++violation_count;
    if (violations.size() < kMaxStored) violations.push_back({std::move(key), observed, bound});
  }
  /// Record one checked case: tracks the sup and flags a violation when fails.
  void record(const std::string& key, double value, double bound, bool ok) {
    observe(key, value);
    ++checked;
    if (!ok) violate(key, value, bound);
  }
  /// Merge a partial report from another worker (order-preserving).
  void merge(const ScanReport& other) {
    if (other.checked > 0 && (checked == 0 || other.sup > sup)) {
      sup = other.sup;
      argmax = other.argmax;
    }
    checked += other.checked;
    violation_count += other.violation_count;
    for (const auto& v : other.violations)
      if (violations.size() < kMaxStored) violations.push_back(v);
  }
};

}  // namespace sixmoment::scan
