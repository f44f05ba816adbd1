#pragma once

// The acceptance checks, shared by the CLI `verify` command and the
// acceptance test binary.

#include "mobius3/psl3.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mobius3 {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CheckResult check_plane_group_sanity();
CheckResult check_psl32_lattice();
CheckResult check_table2();
/// Applies `edit` to every table before checking; used to confirm that a
/// corrupted entry is caught.
using TableEdit = std::function<void(std::vector<ClosedFormLine>&)>;
CheckResult check_table4(const TableEdit& edit = {});
CheckResult check_normalizers_q8(const ScanOptions& opt = {});
CheckResult check_census_q8(const ScanOptions& opt = {});
CheckResult check_euler();
CheckResult check_hall();

enum class VerifyProfile { Quick, Full };

VerifyProfile parse_verify_profile(const std::string& s);

/// Quick runs 1, 2, 4, 7, 8; full runs all eight.
std::vector<CheckResult> verify_all(VerifyProfile profile, const ScanOptions& opt = {});

/// One line per check: "[PASS] 3 table2: ...".
std::string format_line(const CheckResult& r);

}  // namespace mobius3
