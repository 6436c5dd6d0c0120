#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fockdec/serialize.hpp"

namespace fockdec {

/// Suite names accepted by VerifyOptions::suites, in report order.
const std::vector<std::string>& verify_suite_names();

struct VerifyOptions {
  std::vector<int> m_values{0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<int> n_values{2, 3, 4, 5};
  /// Empty selects every suite.
  std::set<std::string> suites;

  int kstability_max_m = 6;
  int kstability_extra = 3;
  int semisimple_max_m = 6;
  /// Gram-determinant oracle: m <= oracle_max_m for n in {2, 3}, and
  /// m <= oracle_n4_max_m for n = 4.
  int oracle_max_m = 5;
  int oracle_n4_max_m = 4;
  int ariki_max_m = 4;

  /// Test hook: negate one off-diagonal bar-matrix entry per (n, m) before
  /// the matrix-based checks run.
  bool inject_fault = false;
  /// Run independent (n) task groups on separate threads.
  bool parallel = true;
};

struct CheckRecord {
  std::string check;
  int n = 0;
  int m = 0;
  std::optional<Partition> lambda;  // absent for whole-matrix checks
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  /// Informational findings that are not pass/fail, e.g. bar-matrix entries
  /// that are sums of several +-q^k (q^-2 - 1)^j terms.
  std::vector<std::string> notes;

  bool pass() const;
  std::vector<const CheckRecord*> failures() const;
};

VerifyReport run_verify(const VerifyOptions& options);

/// JSON array of {lambda, n, m, check, pass, lhs, rhs}.
Json report_to_json(const VerifyReport& report);
/// Per-suite pass counts followed by every failing record.
std::string report_to_text(const VerifyReport& report);

std::string fock_to_string(const FockVector& v);

}  // namespace fockdec
