#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fockdec/laurent.hpp"
#include "fockdec/partitions.hpp"

namespace fockdec {

/// Finite head (i_1, ..., i_k) of a semi-infinite wedge u_{i_1} ^ u_{i_2} ^ ...
/// whose tail continues with i_j = -j + 1 for j > k.
struct WedgeWord {
  std::vector<int> head;

  int length() const { return static_cast<int>(head.size()); }
  /// Strictly decreasing head with every entry above -length.
  bool is_normalized() const;
  /// sum over j of (i_j + j - 1).
  int degree() const;
  friend bool operator==(const WedgeWord&, const WedgeWord&) = default;
};

/// Head (lambda_1, lambda_2 - 1, ..., lambda_k - k + 1). Throws if k < rows.
WedgeWord wedge_from_partition(const Partition& lambda, int k);

/// lambda_j = i_j + j - 1, trailing zeros dropped. Throws unless normalized.
Partition partition_from_wedge(const WedgeWord& w);

/// {i_1 + m, ..., i_m + m, 0} for a normalized wedge of degree m. The head is
/// padded with vacuum entries (or must already be short enough) to length m.
BetaSequence betas_from_wedge(const WedgeWord& w);

/// Finite Z[q, q^-1]-combination of basis vectors |lambda>, all of one degree.
class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPoly, ReverseLex>;

  FockVector() = default;
  static FockVector basis(const Partition& lambda) {
    FockVector v;
    v.add(lambda, LaurentPoly(1));
    return v;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Partition& lambda) const;

  /// Throws std::invalid_argument when the degree differs from existing terms.
  void add(const Partition& lambda, const LaurentPoly& coefficient);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector scaled(const LaurentPoly& factor) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

/// Normal ordering of wedge heads for a fixed modulus n. Results are memoized
/// per head; an instance is not thread-safe, so use one per thread.
///
/// Rewriting always acts on the leftmost adjacent pair that is not strictly
/// decreasing. Equal indices give 0. For l < m with m - l = 0 mod n the pair
/// anticommutes; otherwise, with i = (m - l) mod n,
///
///   u_l ^ u_m = -q^-1 u_m ^ u_l + (q^-2 - 1)(u_{m-i} ^ u_{l+i}
///               - q^-1 u_{m-n} ^ u_{l+n} + q^-2 u_{m-n-i} ^ u_{l+n+i} - ...)
///
/// where the series keeps a term exactly while its first index exceeds its
/// second. Every generated index lies in [l, m], so heads whose entries
/// exceed -length never reach the vacuum tail.
class Straightener {
 public:
  static constexpr std::size_t kDefaultStepBudget = 50'000'000;

  explicit Straightener(int n, std::size_t step_budget = kDefaultStepBudget);

  int modulus() const { return n_; }
  /// Throws std::invalid_argument if some entry is <= -length, and
  /// std::runtime_error once the rule-application budget is exhausted.
  FockVector straighten(std::span<const int> head);
  std::size_t steps() const { return steps_; }

 private:
  using Expansion = std::map<std::vector<int>, LaurentPoly>;
  const Expansion& expand(const std::vector<int>& head);

  int n_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::map<std::vector<int>, Expansion> memo_;
};

FockVector straighten(std::span<const int> head, int n);

/// Bar involution of the Fock space for modulus n:
///   bar(u_I) = (-1)^(k(k-1)/2) q^alpha u_{i_k} ^ ... ^ u_{i_1} ^ u_{i_{k+1}} ^ ...
/// with alpha the number of pairs r < s <= k such that i_r - i_s != 0 mod n.
/// Not thread-safe (owns a Straightener cache).
class BarInvolution {
 public:
  explicit BarInvolution(int n,
                         std::size_t step_budget = Straightener::kDefaultStepBudget);

  int modulus() const { return straightener_.modulus(); }
  /// Default truncation k = max(|mu|, rows of mu). Throws if k is smaller.
  FockVector of_partition(const Partition& mu, std::optional<int> k = {});
  /// Semilinear extension: coefficients are barred as well.
  FockVector of_vector(const FockVector& v, std::optional<int> k = {});
  std::size_t steps() const { return straightener_.steps(); }

 private:
  Straightener straightener_;
};

FockVector bar_partition(const Partition& mu, int n, std::optional<int> k = {});
FockVector bar_vector(const FockVector& v, int n, std::optional<int> k = {});

/// Square matrix of Laurent polynomials with rows and columns both indexed by
/// partitions_of(m) in ReverseLex order.
struct PartitionMatrix {
  int n = 0;
  int m = 0;
  std::vector<Partition> order;
  std::vector<std::vector<LaurentPoly>> entries;  // [row][column]

  std::size_t dimension() const { return order.size(); }
  /// Throws std::out_of_range for partitions not of size m.
  std::size_t index_of(const Partition& lambda) const;
  const LaurentPoly& at(const Partition& row, const Partition& column) const {
    return entries[index_of(row)][index_of(column)];
  }

  friend bool operator==(const PartitionMatrix&,
                         const PartitionMatrix&) = default;
};

/// a_{lambda tau}: column tau holds the coefficients of bar|tau>.
struct BarMatrix : PartitionMatrix {};

BarMatrix bar_matrix(int n, int m);

}  // namespace fockdec
