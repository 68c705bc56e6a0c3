#pragma once

#include <optional>
#include <vector>

#include "sixmoment/arith.hpp"
#include "sixmoment/numeric.hpp"
#include "sixmoment/scan.hpp"

namespace sixmoment::expsums {

using arith::i64;
using arith::u64;

/// All Dirichlet characters mod a prime q, indexed by j in [0, q-1):
/// chi_j(a) = e(j dlog(a) / (q-1)).
class CharacterTable {
 public:
  explicit CharacterTable(u64 q);

  u64 modulus() const noexcept { return q_; }
  u64 generator() const noexcept { return g_; }
  u64 order() const noexcept { return q_ - 1; }
  /// Discrete log of a unit residue (a mod q must be nonzero).
  u64 dlog(i64 a) const;
  /// chi_j(a) as j * dlog(a) mod (q-1); nullopt when q | a.
  std::optional<u64> exponent(u64 j, i64 a) const;
  cplx value(u64 j, i64 a) const;
  bool is_odd(u64 j) const;

 private:
  u64 q_;
  u64 g_;
  std::vector<u64> dlog_;
};

/// (2/phi(q)) sum over chi with chi(-1) = (-1)^k of chi(m) conj(chi(n)).
cplx orthogonality_avg(i64 m, i64 n, const CharacterTable& table, int k);
/// The three-case closed form of the same average.
double orthogonality_expected(i64 m, i64 n, u64 q, int k);

/// Units mod c with inverses and a table of e(r/c); reused across many sums of modulus c.
class ModulusContext {
 public:
  explicit ModulusContext(u64 c);
  u64 modulus() const noexcept { return c_; }
  const std::vector<u64>& units() const noexcept { return units_; }
  const std::vector<u64>& inverses() const noexcept { return inv_; }
  cplx root(u64 r) const { return roots_[r % c_]; }

 private:
  u64 c_;
  std::vector<u64> units_, inv_;
  std::vector<cplx> roots_;
};

struct KloostermanValue {
  cplx value;
  u64 modulus;
  i64 m, n;
  std::optional<u64> chi;
};

/// Classical S(m, n; c).
KloostermanValue kloosterman(i64 m, i64 n, u64 c);
KloostermanValue kloosterman(i64 m, i64 n, const ModulusContext& ctx);
/// Twisted S_chi(m, n; c q) = sum* chi(a) e((a m + abar n)/(c q)).
KloostermanValue kloosterman(i64 m, i64 n, u64 c, const CharacterTable& table, u64 chi);

/// Restricted sum over units a mod c q with a == r (mod q): sum e((a u + abar v)/(c q)).
cplx restricted_kloosterman(i64 u, i64 v, u64 c, u64 q, u64 r);

/// Checks |S(m,n;c)| <= tau_2(c) sqrt(c) sqrt(gcd(m,n,c)).
struct WeilCheck {
  double observed;
  double bound;
  bool ok;
};
WeilCheck weil_check(i64 m, i64 n, u64 c);
WeilCheck weil_check(i64 m, i64 n, const ModulusContext& ctx);

struct CrtSplit {
  double whole;    // |S(m,n;c1 c2)|
  double product;  // |S(c2bar m, c2bar n; c1)| |S(c1bar m, c1bar n; c2)|
  cplx whole_value, product_value;
};
CrtSplit kloosterman_crt_split(i64 m, i64 n, u64 c1, u64 c2);

/// How the inverse of q in the lowered sum is read.
enum class QbarMode { ModMNC, ModC };

struct ConductorSides {
  cplx lhs, rhs;
};
/// Both sides of the conductor-lowering identity for Y(u, v).
/// Strict mode enforces gcd(mn, cq) = 1; exploratory callers pass strict = false.
ConductorSides conductor_lowering_sides(u64 c, u64 q, u64 m, u64 n, i64 u, i64 v,
                                        QbarMode mode = QbarMode::ModMNC, bool strict = true);

struct PeterssonValue {
  cplx value;
  double tail_bound;
  cplx delta;
};
/// delta_{m=n} + 2 pi i^{-k} sum_{c <= c_max} S_chi(m,n;cq) J_{k-1}(4 pi sqrt(mn)/(cq)) / (cq).
PeterssonValue petersson_geometric(u64 m, u64 n, const CharacterTable& table, u64 chi, int k, u64 c_max);

// ---- suites ----

scan::ScanReport orthogonality_suite(const std::vector<u64>& qs);
scan::ScanReport weil_suite(u64 c_max, i64 mn_max);
scan::ScanReport crt_suite(int samples, u64 seed, u64 c_max = 2000);
scan::ScanReport conductor_lowering_suite(const std::vector<u64>& qs, u64 c_max, u64 mn_max, i64 uv_max);

struct MismatchCell {
  u64 c, q, m, n;
  i64 u, v;
  double deviation;
};
struct ExploratoryMap {
  std::uint64_t evaluated = 0, mismatched = 0;
  std::vector<MismatchCell> samples;  // first few mismatches
};
/// Evaluates both sides under weakened hypotheses; reports, never asserts.
ExploratoryMap conductor_lowering_explore(const std::vector<u64>& qs, u64 c_max, u64 mn_max, i64 uv_max,
                                          QbarMode mode);

}  // namespace sixmoment::expsums
