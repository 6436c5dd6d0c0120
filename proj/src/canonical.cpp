#include "fockdec/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockdec {

LaurentPoly symmetric_lift(const LaurentPoly& c) {
  LaurentPoly p;
  for (const auto& [e, coeff] : c.terms()) {
    if (e > 0) continue;
    p.add_term(e, coeff);
    if (e < 0) p.add_term(-e, coeff);
  }
  return p;
}

namespace {

void check_order(const BarMatrix& bar, const std::vector<Partition>& order) {
  std::vector<Partition> sorted = order;
  std::sort(sorted.begin(), sorted.end(), ReverseLex{});
  if (sorted != bar.order)
    throw std::invalid_argument(
        "canonical basis order must list every partition of m once");
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (dominated_by(order[i], order[j]) && !(order[i] == order[j]))
        throw std::invalid_argument("order is not a linear extension of "
                                    "reverse dominance: (" +
                                    order[i].to_string() + ") before (" +
                                    order[j].to_string() + ")");
}

std::vector<LaurentPoly> canonical_column(const Partition& lambda,
                                          const BarMatrix& bar,
                                          const std::vector<Partition>& order) {
  const std::size_t dim = bar.dimension();
  std::vector<LaurentPoly> d(dim);
  const std::size_t top = bar.index_of(lambda);
  d[top] = LaurentPoly(1);
  std::vector<std::size_t> done{top};

  auto start = std::find(order.begin(), order.end(), lambda);
  for (auto it = std::next(start); it != order.end(); ++it) {
    const std::size_t mu = bar.index_of(*it);
    LaurentPoly r;
    for (std::size_t nu : done)
      if (!d[nu].is_zero() && !bar.entries[mu][nu].is_zero())
        r += bar.entries[mu][nu] * bar_q(d[nu]);
    LaurentPoly positive;
    for (const auto& [e, c] : r.terms())
      if (e > 0) positive.add_term(e, c);
    if (!(positive - bar_q(positive) == r))
      throw std::logic_error(
          "canonical basis: bar-invariance defect at (" + it->to_string() +
          ") in G(" + lambda.to_string() + ") is not antisymmetric: " +
          r.to_string());
    d[mu] = std::move(positive);
    done.push_back(mu);
  }
  return d;
}

}  // namespace

FockVector canonical_vector(const Partition& lambda, const BarMatrix& bar,
                            const std::vector<Partition>& order) {
  check_order(bar, order);
  const auto column = canonical_column(lambda, bar, order);
  FockVector g;
  for (std::size_t i = 0; i < column.size(); ++i) g.add(bar.order[i], column[i]);
  return g;
}

FockVector canonical_vector(const Partition& lambda, const BarMatrix& bar) {
  return canonical_vector(lambda, bar, bar.order);
}

FockVector canonical_vector(const Partition& lambda, int n) {
  return canonical_vector(lambda, bar_matrix(n, lambda.size()));
}

DecompositionMatrix decomposition_matrix(const BarMatrix& bar,
                                         const std::vector<Partition>& order) {
  check_order(bar, order);
  DecompositionMatrix d;
  d.n = bar.n;
  d.m = bar.m;
  d.order = bar.order;
  const std::size_t dim = bar.dimension();
  d.entries.assign(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    auto column = canonical_column(bar.order[col], bar, order);
    for (std::size_t row = 0; row < dim; ++row)
      d.entries[row][col] = std::move(column[row]);
  }
  return d;
}

DecompositionMatrix decomposition_matrix(const BarMatrix& bar) {
  return decomposition_matrix(bar, bar.order);
}

DecompositionMatrix decomposition_matrix(int n, int m) {
  return decomposition_matrix(bar_matrix(n, m));
}

namespace {

std::string entry_name(const PartitionMatrix& a, std::size_t row,
                       std::size_t col) {
  return "n=" + std::to_string(a.n) + " (" + a.order[row].to_string() + "),(" +
         a.order[col].to_string() + ")";
}

void require_compatible(const BarMatrix& bar, const DecompositionMatrix& d) {
  if (bar.n != d.n || bar.m != d.m || bar.order != d.order)
    throw std::invalid_argument("bar and decomposition matrices disagree on "
                                "(n, m) or partition order");
}

}  // namespace

CheckReport gj_identity_check(const BarMatrix& bar,
                              const DecompositionMatrix& d) {
  require_compatible(bar, d);
  CheckReport report;
  const std::size_t dim = bar.dimension();
  for (std::size_t lam = 0; lam < dim; ++lam) {
    for (std::size_t mu = 0; mu < dim; ++mu) {
      LaurentPoly rhs;
      for (std::size_t tau = 0; tau < dim; ++tau)
        if (!bar.entries[lam][tau].is_zero() && !d.entries[tau][mu].is_zero())
          rhs += bar.entries[lam][tau] * bar_q(d.entries[tau][mu]);
      if (!(rhs == d.entries[lam][mu]))
        report.fail(entry_name(bar, lam, mu) + ": d = " +
                    d.entries[lam][mu].to_string() +
                    ", sum a*bar(d) = " + rhs.to_string());
    }
  }
  return report;
}

CheckReport gj_identity_check(int n, int m) {
  const BarMatrix bar = bar_matrix(n, m);
  return gj_identity_check(bar, decomposition_matrix(bar));
}

CheckReport derivative_identity_check(const BarMatrix& bar,
                                      const DecompositionMatrix& d) {
  require_compatible(bar, d);
  CheckReport report;
  const std::size_t dim = bar.dimension();
  for (std::size_t lam = 0; lam < dim; ++lam) {
    for (std::size_t mu = 0; mu < dim; ++mu) {
      Integer rhs = 0;
      for (std::size_t tau = 0; tau < dim; ++tau)
        rhs += derivative_at_one(bar.entries[lam][tau]) *
               eval_at_one(d.entries[tau][mu]);
      const Integer lhs = 2 * derivative_at_one(d.entries[lam][mu]);
      if (lhs != rhs)
        report.fail(entry_name(bar, lam, mu) + ": 2 d'(1) = " + lhs.get_str() +
                    ", sum a'(1) d(1) = " + rhs.get_str());
    }
  }
  return report;
}

CheckReport derivative_identity_check(int n, int m) {
  const BarMatrix bar = bar_matrix(n, m);
  return derivative_identity_check(bar, decomposition_matrix(bar));
}

}  // namespace fockdec
