#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockdec {

using Integer = mpz_class;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row length for a 1-based row index; 0 beyond the last row.
  int row(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }

  /// "3,2" style rendering; the empty partition renders as "".
  std::string to_string() const;
  /// Inverse of to_string. Accepts surrounding whitespace and a trailing
  /// zero-free list; throws std::invalid_argument on malformed input.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Reverse lexicographic order: (2) before (1,1). Refines reverse dominance,
/// so dominance-larger partitions come first. Every serialized matrix uses it.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() > b.parts();
  }
};

/// Integer sequence read as beta-numbers. Order is significant; repeated or
/// negative entries are allowed and map to the zero symbol.
struct BetaSequence {
  std::vector<int> entries;
  int length() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const BetaSequence&, const BetaSequence&) = default;
};

struct SignedPartition {
  int sign = 1;
  Partition partition;
  friend bool operator==(const SignedPartition&,
                         const SignedPartition&) = default;
};

/// Standard Young tableau stored row by row with entries 1..m.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  /// Entries read along rows, top to bottom.
  std::vector<int> reading_word() const;
  StandardTableau transpose() const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau&,
                         const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// All partitions of m in ReverseLex order.
std::vector<Partition> partitions_of(int m);

/// True iff lambda ⊴ mu, i.e. every prefix sum of lambda is at most the
/// corresponding prefix sum of mu. Throws if the sizes differ.
bool dominated_by(const Partition& lambda, const Partition& mu);

/// Hook length of the cell in 1-based row b, column c.
int hook_length(const Partition& lambda, int b, int c);

/// beta_i = lambda_i + s - i for i = 1..s. Throws if s < rows.
BetaSequence first_column_betas(const Partition& lambda, int s);

/// Sorts the sequence decreasingly and recovers lambda_i = beta_(i) + i - s.
/// Returns nullopt for repeated or negative entries.
std::optional<SignedPartition> partition_from_betas(const BetaSequence& betas);

/// m! divided by the product of the hook lengths.
Integer dim_specht(const Partition& lambda);

/// All standard tableaux of the shape, ordered lexicographically by reading
/// word.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// (-1)^sigma dim S(lambda) for the partition recovered from the sequence;
/// 0 when the sequence has a repeated or a negative entry.
Integer d_symbol(const BetaSequence& betas);

/// No part value occurs n or more times.
bool is_n_regular(const Partition& lambda, int n);

Partition conjugate(const Partition& lambda);

}  // namespace fockdec
