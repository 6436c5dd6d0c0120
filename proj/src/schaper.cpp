#include "fockdec/schaper.hpp"

namespace fockdec {

namespace {

// Calls visit(coefficient, shifted beta sequence) for every non-vanishing
// (a, b, c) term of the sum formula.
template <typename Visit>
void for_each_sum_term(const Partition& lambda, int n, int beta_length,
                       Visit&& visit) {
  if (n < 2) throw std::invalid_argument("sum formula needs n >= 2");
  const BetaSequence first = first_column_betas(lambda, beta_length);
  const int s = lambda.rows();
  for (int a = 1; a <= s; ++a) {
    for (int b = a; b <= s; ++b) {
      for (int c = 1; c <= lambda.row(b); ++c) {
        const int h_ac = hook_length(lambda, a, c);
        const int h_bc = hook_length(lambda, b, c);
        const int coefficient = nu_quantum(h_ac, n) - nu_quantum(h_bc, n);
        if (coefficient == 0) continue;
        BetaSequence moved = first;
        moved.entries[a - 1] += h_bc;
        moved.entries[b - 1] -= h_bc;
        visit(coefficient, moved);
      }
    }
  }
}

}  // namespace

SpechtClasses schaper_sum_rhs(const Partition& lambda, int n, int beta_length) {
  SpechtClasses out;
  for_each_sum_term(lambda, n, beta_length,
                    [&](int coefficient, const BetaSequence& betas) {
                      if (auto target = partition_from_betas(betas))
                        out.add(target->partition,
                                Integer(coefficient * target->sign));
                    });
  return out;
}

SpechtClasses schaper_sum_rhs(const Partition& lambda, int n) {
  return schaper_sum_rhs(lambda, n, lambda.rows());
}

Integer schaper_det_rhs(const Partition& lambda, int n) {
  Integer total = 0;
  for_each_sum_term(lambda, n, lambda.rows(),
                    [&](int coefficient, const BetaSequence& betas) {
                      total += coefficient * d_symbol(betas);
                    });
  return total;
}

SimpleClasses jantzen_prediction(const Partition& lambda,
                                 const DecompositionMatrix& d) {
  SimpleClasses out(d.n);
  const auto& row = d.entries[d.index_of(lambda)];
  for (std::size_t mu = 0; mu < d.dimension(); ++mu)
    if (is_n_regular(d.order[mu], d.n))
      out.add(d.order[mu], derivative_at_one(row[mu]));
  return out;
}

SpechtClasses gabber_joseph_rhs(const Partition& lambda, const BarMatrix& bar) {
  SpechtClasses out;
  const auto& row = bar.entries[bar.index_of(lambda)];
  for (std::size_t tau = 0; tau < bar.dimension(); ++tau) {
    const Integer derivative = derivative_at_one(row[tau]);
    if (derivative % 2 != 0)
      throw std::logic_error("a'(1) is odd at (" + lambda.to_string() + "),(" +
                             bar.order[tau].to_string() +
                             "); the bar involution convention is broken");
    out.add(bar.order[tau], derivative / 2);
  }
  return out;
}

SimpleClasses specht_to_simple(const SpechtClasses& v,
                               const DecompositionMatrix& d) {
  SimpleClasses out(d.n);
  for (const auto& [tau, c] : v.coords()) {
    const auto& row = d.entries[d.index_of(tau)];
    for (std::size_t mu = 0; mu < d.dimension(); ++mu)
      if (is_n_regular(d.order[mu], d.n))
        out.add(d.order[mu], c * eval_at_one(row[mu]));
  }
  return out;
}

std::string Theorem1Report::summary() const {
  return std::string(pass ? "PASS" : "FAIL") +
         ": gabber-joseph = " + gabber_joseph.to_string() +
         "; sum formula = " + schaper.to_string() +
         "; prediction = " + prediction.to_string() +
         "; via decomposition: " + gabber_joseph_simple.to_string() + " / " +
         schaper_simple.to_string();
}

Theorem1Report theorem1_check(const Partition& lambda, const BarMatrix& bar,
                              const DecompositionMatrix& d) {
  Theorem1Report report;
  report.gabber_joseph = gabber_joseph_rhs(lambda, bar);
  report.schaper = schaper_sum_rhs(lambda, bar.n);
  report.prediction = jantzen_prediction(lambda, d);
  report.gabber_joseph_simple = specht_to_simple(report.gabber_joseph, d);
  report.schaper_simple = specht_to_simple(report.schaper, d);
  report.pass = report.gabber_joseph == report.schaper &&
                report.gabber_joseph_simple == report.prediction &&
                report.schaper_simple == report.prediction;
  return report;
}

Theorem1Report theorem1_check(const Partition& lambda, int n) {
  const BarMatrix bar = bar_matrix(n, lambda.size());
  return theorem1_check(lambda, bar, decomposition_matrix(bar));
}

}  // namespace fockdec
