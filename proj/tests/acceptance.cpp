// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fockdec/verify.hpp"

using namespace fockdec;

namespace {

struct Criterion {
  int id;
  std::string title;
  VerifyOptions options;
  double target_seconds;  // 0: no runtime target
};

VerifyOptions only(std::string suite, int max_m, std::vector<int> n_values) {
  VerifyOptions o;
  o.suites = {std::move(suite)};
  o.m_values.clear();
  for (int m = 0; m <= max_m; ++m) o.m_values.push_back(m);
  o.n_values = std::move(n_values);
  return o;
}

}  // namespace

int main() {
  const std::vector<int> n_range{2, 3, 4, 5};
  std::vector<Criterion> criteria{
      {1, "bar is an involution, m <= 8, n in {2,3,4,5}", only("involution", 8, n_range), 30},
      {2, "k-stability, k vs k+3, m <= 6", only("kstability", 6, n_range), 0},
      {3, "bar matrix unitriangular, a(1) = delta, a'(1) even, m <= 8",
       only("bar", 8, n_range), 0},
      {4, "canonical basis bar-invariant, Z[q], delta constant, unitriangular, nonnegative",
       only("canonical", 8, n_range), 0},
      {5, "D(q) = A(q) D(q^-1), m <= 8", only("gj", 8, n_range), 0},
      {6, "d'(1) = A'(1) D(1) / 2, m <= 8", only("derivative", 8, n_range), 0},
      {7, "Gabber-Joseph side equals Jantzen-Schaper side, m <= 8", only("theorem1", 8, n_range),
       120},
      {8, "d_{(1,1),(2)}(q) = q at n = 2", only("pinned", 2, {2}), 0},
      {9, "determinant valuation is the dimension-weighted sum and >= 0, m <= 8",
       only("bridge", 8, n_range), 0},
      {10, "Gram determinant valuation equals the Schaper prediction (m <= 5; m <= 4 at n = 4)",
       only("oracle", 5, {2, 3, 4}), 300},
      {11, "sum_mu d(1) rank(mu) = dim S(lambda), m <= 4, n in {2,3}",
       only("ariki", 4, {2, 3}), 0},
      {12, "A, D identity and sum formula vanishes for n > m, m <= 6",
       only("semisimple", 6, {2, 3, 4, 5, 6, 7, 8}), 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::size_t checks = 0;
    std::string detail;
    try {
      const VerifyReport report = run_verify(c.options);
      checks = report.records.size();
      pass = report.pass() && checks > 0;
      if (!report.pass()) {
        const auto* f = report.failures().front();
        detail = " first failure: " + f->check + " n=" + std::to_string(f->n) +
                 " m=" + std::to_string(f->m) + " lhs=" + f->lhs + " rhs=" + f->rhs;
      } else if (checks == 0) {
        detail = " no checks ran";
      }
    } catch (const std::exception& e) {
      detail = std::string(" error: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool on_time = c.target_seconds == 0 || seconds < c.target_seconds;
    if (!on_time) detail += " runtime target missed";
    pass = pass && on_time;
    if (!pass) ++failed;
    std::string timing = std::to_string(seconds).substr(0, std::to_string(seconds).find('.') + 3) + " s";
    if (c.target_seconds > 0)
      timing += ", target < " + std::to_string(static_cast<int>(c.target_seconds)) + " s";
    std::printf("criterion %2d: %s  %s (%zu checks, %s)%s\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), checks, timing.c_str(), detail.c_str());
  }
  std::printf("%s: %d of %zu criteria passed\n", failed == 0 ? "ACCEPTED" : "REJECTED",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
