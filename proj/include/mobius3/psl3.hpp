#pragma once

// Closed-form subgroup data for G = PSL(3,q), q = 2^p with p an odd prime:
// the 31 classes of intersections of maximal subgroups with normalizers
// and Möbius values as polynomials in q, the companion fixtures, and an
// empirical overgroup census inside PSL(3,8).

#include "mobius3/bigint.hpp"
#include "mobius3/pgl.hpp"
#include "mobius3/qpoly.hpp"
#include "mobius3/scan.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mobius3 {

inline constexpr int kLineCount = 31;

struct ClosedFormLine {
  int id = 0;
  std::string name;
  std::string normalizer_name;
  QPoly order;
  QPoly normalizer_order;
  QPoly mu;
  std::string aschbacher;  // empty for lines with mu = 0
  std::string stabilized;
};

/// q^3 (q^3 - 1)(q^2 - 1).
QPoly group_order_poly();

/// The 31 lines with the generic normalizer for line 24.
std::vector<ClosedFormLine> table4_symbolic();
/// Lines specialized to p; throws InvalidP unless p is an odd prime.
std::vector<ClosedFormLine> table4(int p);

void require_odd_prime(int p);
BigInt q_of(int p);

struct LineValues {
  int id = 0;
  BigInt order;
  BigInt normalizer_order;
  BigInt class_size;
  BigInt mu;
};

/// Evaluates at q = 2^p and asserts every integrality and divisibility
/// invariant; throws VerificationMismatch naming the first failure.
std::vector<LineValues> evaluate(const std::vector<ClosedFormLine>& lines, int p);

/// 1 + sum over lines of class_size * mu, as a polynomial.
QPoly global_sum_symbolic(const std::vector<ClosedFormLine>& lines);
/// The same sum through QPoly evaluation at q = 2^p.
BigInt global_sum_at(const std::vector<ClosedFormLine>& lines, int p);
/// Independent integer evaluation of the same sum from hand-coded class
/// sizes; shares no code with the polynomial path.
BigInt global_sum_direct(int p);

/// index -> sum of class_size * mu over lines of that index, with a_1 = 1.
std::map<BigInt, BigInt> a_n_closed(int p);

struct MannRow {
  int id = 0;
  BigInt abs_mu;
  BigInt index;
};

struct MannReport {
  std::vector<MannRow> rows;
  Rational max_ratio;
  int argmax = 0;
  bool ok = false;
};

MannReport mann_check(int p);

struct Table2Row {
  std::string label;
  std::uint64_t order = 0;
  int classes = 0;
  long long mu = 0;
};

const std::vector<Table2Row>& table2_fixture();

struct Table1Row {
  std::string structure;
  std::string aschbacher;
  std::string stabilized;
  std::string normalizer;
  QPoly mu;
};

/// G first, then the 13 proper classes in printed order.
const std::vector<Table1Row>& table1_fixture();

struct ConsistencyRow {
  int line = 0;  // 0 for G
  std::string structure;
  bool structure_ok = false;
  bool normalizer_ok = false;
  bool mu_ok = false;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  int table1_rows = 0;
  int table4_nonzero = 0;  // including G
  bool ok = false;
};

ConsistencyReport consistency_table1_vs_table4(const std::vector<ClosedFormLine>& lines = table4_symbolic());

// Overgroup census.

enum class CensusAgainst { Nonzero, All };

CensusAgainst parse_census_against(const std::string& s);

/// A count printed in a proof: the total over `lines` is claimed to be `value`.
struct StatedCount {
  std::string label;
  std::vector<int> lines;
  QPoly value;
};

/// Overgroup counts printed in the proof for a line; empty when none.
std::vector<StatedCount> stated_inventory(int line, int p);

struct CensusEntry {
  int k_line = 0;
  BigInt count;
  BigInt mu;
};

struct StatedComparison {
  std::string label;
  std::vector<int> lines;
  BigInt stated;
  BigInt empirical;
  bool matches = false;
};

struct CensusReport {
  int line = 0;
  int p = 0;
  std::uint64_t order = 0;
  BigInt normalizer_table;
  std::uint64_t normalizer_empirical = 0;  // 0 when not scanned
  BigInt mu;
  std::vector<CensusEntry> entries;
  BigInt residual;  // mu(H) + 1 + sum count * mu(K)
  std::vector<StatedComparison> stated;
  /// mu(H) implied by the printed counts, when they cover every
  /// nonzero-mu overgroup line.
  std::optional<BigInt> stated_mu;
};

/// Runs censuses inside PSL(3,q), q = 2^p; caches line representatives.
class Census {
 public:
  Census(const Pgl3& ctx, ScanOptions opt = {});

  int p() const noexcept { return p_; }
  const SubgroupRec& rep(int line);
  CensusReport run(int line, CensusAgainst against, bool scan_normalizer = true);

 private:
  const Pgl3* ctx_;
  ScanOptions opt_;
  int p_ = 0;
  std::vector<ClosedFormLine> lines_;
  std::vector<LineValues> values_;
  std::map<int, std::unique_ptr<SubgroupRec>> reps_;
};

}  // namespace mobius3
