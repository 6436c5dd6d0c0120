#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fockdec/laurent.hpp"
#include "fockdec/partitions.hpp"

// Desk-scale Iwahori-Hecke algebra of the symmetric group over Z[q, q^-1],
// used as an independent oracle for Gram determinants of Specht modules.
//
// Convention: T_i^2 = (q - 1) T_i + q (Dipper-James). Other normalizations
// differ by units and q-powers, which do not change any valuation at a
// cyclotomic polynomial; every comparison goes through such valuations.
namespace fockdec::hecke {

/// Permutation of {0, ..., m-1} in one-line notation, w = (w(0), ..., w(m-1)).
/// Products compose as functions: (x * y)(j) = x(y(j)).
class Permutation {
 public:
  static Permutation identity(int m);
  explicit Permutation(std::vector<int> one_line);

  const std::vector<int>& one_line() const { return images_; }
  int size() const { return static_cast<int>(images_.size()); }
  /// Number of inversions.
  int length() const { return length_; }

  /// w * s_i, i.e. the entries at positions i and i+1 swapped.
  Permutation times_simple(int i) const;
  Permutation inverse() const;
  /// Indices (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}, k = length().
  std::vector<int> reduced_word() const;

  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
  int length_ = 0;
};

/// Length first, then one-line notation.
struct ByLength {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.one_line() < b.one_line();
  }
};

/// Finite combination of standard basis elements T_w.
class HeckeElement {
 public:
  using Terms = std::map<Permutation, LaurentPoly, ByLength>;

  HeckeElement() = default;
  static HeckeElement basis(const Permutation& w);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Permutation& w) const;

  void add(const Permutation& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement scaled(const LaurentPoly& factor) const;
  /// Right multiplication by the generator T_i.
  HeckeElement times_generator(int i) const;
  /// The anti-automorphism T_w -> T_{w^-1}.
  HeckeElement star() const;

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  Terms terms_;
};

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y);
inline HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  return hecke_multiply(x, y);
}

/// d(t) with t = t^lambda d(t), permutations acting on entries from the
/// right; t^lambda is the row-reading superstandard tableau.
Permutation tableau_permutation(const StandardTableau& t);

/// x_lambda: sum of T_w over the row stabilizer of t^lambda.
HeckeElement row_symmetrizer(const Partition& lambda);

/// m_st = T_{d(s)}^* x_lambda T_{d(t)}. Throws if the shapes differ.
HeckeElement murphy_element(const StandardTableau& s, const StandardTableau& t);

/// Murphy basis of the Hecke algebra on m letters with the inverse change of
/// basis precomputed, so any element can be written in Murphy coordinates.
class MurphyBasis {
 public:
  struct Label {
    Partition shape;
    std::size_t s = 0;  // index into standard_tableaux(shape)
    std::size_t t = 0;
  };
  using Coordinates = std::map<std::size_t, LaurentPoly>;

  /// Inverts the change of basis from the T-basis by exact elimination with
  /// unit pivots (+-q^k). Throws std::logic_error if no unit pivot exists.
  explicit MurphyBasis(int m);

  int size() const { return m_; }
  const std::vector<Label>& labels() const { return labels_; }
  const HeckeElement& element(std::size_t label) const {
    return elements_[label];
  }
  std::size_t label_index(const Partition& shape, std::size_t s,
                          std::size_t t) const;
  /// Murphy coordinates of x, restricted to labels of the given shape.
  Coordinates coordinates(const HeckeElement& x, const Partition& shape) const;
  /// All Murphy coordinates of x.
  Coordinates coordinates(const HeckeElement& x) const;

 private:
  int m_;
  std::vector<Label> labels_;
  std::vector<HeckeElement> elements_;
  std::map<Permutation, Coordinates, ByLength> t_in_murphy_;
};

/// Gram matrix of the bilinear form on the Specht module S(lambda).
///
/// The form is the cell-module form of the Murphy basis on the conjugate
/// shape nu = lambda': entry (s, t) is gamma in
///   m_{t^nu s'} m_{t' t^nu} = gamma m_{t^nu t^nu}  (mod shapes above nu),
/// where s', t' are the transposes of the standard lambda-tableaux s, t. The
/// x-symmetrizer cell module of shape nu is, up to a twist that preserves the
/// form, the Specht module labelled by nu', so its radical vanishes exactly
/// when lambda is n-regular.
struct GramMatrix {
  Partition shape;
  Partition cell_shape;
  std::vector<StandardTableau> index;  // standard tableaux of `shape`
  std::vector<std::vector<LaurentPoly>> entries;
};

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caches one MurphyBasis per m; safe to share between threads.
class HeckeOracle {
 public:
  static constexpr int kDefaultSizeCap = 5;

  explicit HeckeOracle(int size_cap = kDefaultSizeCap) : cap_(size_cap) {}

  int size_cap() const { return cap_; }
  /// Throws SizeCapExceeded when |lambda| exceeds the cap (m = 6 takes
  /// minutes and several GB-scale intermediate tables).
  GramMatrix gram_matrix(const Partition& lambda);
  const MurphyBasis& murphy_basis(int m);

 private:
  int cap_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<MurphyBasis>> bases_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> matrix);

/// Rank after reducing entries modulo the n-th cyclotomic polynomial, over
/// the field Q[q]/(Phi_n).
int rank_at_root(const std::vector<std::vector<LaurentPoly>>& matrix, int n);

GramMatrix gram_matrix(const Partition& lambda,
                       int size_cap = HeckeOracle::kDefaultSizeCap);

/// Valuation of det(Gram(lambda)) at Phi_n. Throws std::domain_error when the
/// determinant is zero.
int gram_det_valuation(const GramMatrix& gram, int n);
int gram_det_valuation(const Partition& lambda, int n,
                       int size_cap = HeckeOracle::kDefaultSizeCap);

/// Equals dim D(lambda), which is 0 unless lambda is n-regular.
int gram_rank_at_root(const GramMatrix& gram, int n);
int gram_rank_at_root(const Partition& lambda, int n,
                      int size_cap = HeckeOracle::kDefaultSizeCap);

}  // namespace fockdec::hecke
