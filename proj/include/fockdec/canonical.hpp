#pragma once

#include <string>
#include <vector>

#include "fockdec/fock.hpp"

namespace fockdec {

/// d_{mu lambda}(q): column lambda holds the coefficients of G(lambda).
struct DecompositionMatrix : PartitionMatrix {};

/// Outcome of an exact identity check; failures name the offending entries.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

/// The bar-invariant p with c - p in q Z[q]:
/// p = a_0 + sum_{j>0} a_{-j} (q^j + q^-j) for c = sum a_j q^j.
LaurentPoly symmetric_lift(const LaurentPoly& c);

/// G(lambda): the bar-invariant vector congruent to |lambda> modulo q L.
///
/// Coefficients are fixed one partition at a time, walking `order` (a linear
/// extension of reverse dominance; ReverseLex by default) downwards from
/// lambda. At mu the known part of bar(G) contributes
///   r = sum_{nu above mu} a_{mu nu} bar(d_nu),
/// and bar-invariance forces d_mu - bar(d_mu) = r with d_mu in q Z[q], so
/// d_mu is the positive-degree part of r. The negative part of r must mirror
/// it and the constant term must vanish; anything else throws
/// std::logic_error, which indicates a broken bar involution.
FockVector canonical_vector(const Partition& lambda, const BarMatrix& bar,
                            const std::vector<Partition>& order);
FockVector canonical_vector(const Partition& lambda, const BarMatrix& bar);
FockVector canonical_vector(const Partition& lambda, int n);

/// Columns are canonical_vector outputs for every partition of m.
DecompositionMatrix decomposition_matrix(const BarMatrix& bar);
DecompositionMatrix decomposition_matrix(const BarMatrix& bar,
                                         const std::vector<Partition>& order);
DecompositionMatrix decomposition_matrix(int n, int m);

/// d_{lambda mu}(q) = sum_tau a_{lambda tau}(q) d_{tau mu}(q^-1), exactly.
CheckReport gj_identity_check(const BarMatrix& bar,
                              const DecompositionMatrix& d);
CheckReport gj_identity_check(int n, int m);

/// 2 d'_{lambda mu}(1) = sum_tau a'_{lambda tau}(1) d_{tau mu}(1).
CheckReport derivative_identity_check(const BarMatrix& bar,
                                      const DecompositionMatrix& d);
CheckReport derivative_identity_check(int n, int m);

}  // namespace fockdec
