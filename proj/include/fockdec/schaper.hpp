#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "fockdec/canonical.hpp"

namespace fockdec {

enum class ClassBasis { specht, simple };

/// Integer combination of module classes in the Grothendieck group, either
/// in the Specht basis [S(tau)] or the simple basis [D(mu)]. The basis is part
/// of the type so coordinates in different bases cannot be mixed. Simple
/// classes carry their modulus and only accept n-regular labels.
template <ClassBasis B>
class GrothendieckVector {
 public:
  using Coords = std::map<Partition, Integer, ReverseLex>;

  GrothendieckVector()
    requires(B == ClassBasis::specht)
  = default;
  explicit GrothendieckVector(int n)
    requires(B == ClassBasis::simple)
      : n_(n) {}

  int modulus() const { return n_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Integer coefficient(const Partition& lambda) const {
    auto it = coords_.find(lambda);
    return it == coords_.end() ? Integer(0) : it->second;
  }

  void add(const Partition& lambda, const Integer& c) {
    if (c == 0) return;
    if constexpr (B == ClassBasis::simple) {
      if (!is_n_regular(lambda, n_))
        throw std::invalid_argument("simple class D(" + lambda.to_string() +
                                    ") needs an " + std::to_string(n_) +
                                    "-regular label");
    }
    auto [it, inserted] = coords_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }

  /// "[S(2)] - 2[S(1,1)]" or "[D(2)]"; the zero vector renders as "0".
  std::string to_string() const {
    if (coords_.empty()) return "0";
    const char symbol = B == ClassBasis::specht ? 'S' : 'D';
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : coords_) {
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      Integer magnitude = abs(c);
      if (magnitude != 1) out += magnitude.get_str();
      out += std::string("[") + symbol + "(" + lambda.to_string() + ")]";
    }
    return out;
  }

  friend bool operator==(const GrothendieckVector& a,
                         const GrothendieckVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  int n_ = 0;
  Coords coords_;
};

using SpechtClasses = GrothendieckVector<ClassBasis::specht>;
using SimpleClasses = GrothendieckVector<ClassBasis::simple>;

/// Right-hand side of the Jantzen sum formula:
///   sum over 1 <= a <= b <= s, 1 <= c <= lambda_b of
///   (nu([h_ac]) - nu([h_bc])) [S(h_11, ..., h_a1 + h_bc, ..., h_b1 - h_bc, ..., h_s1)]
/// where each virtual Specht class is straightened through its beta-numbers.
/// `beta_length` pads the first-column beta set (default: rows of lambda).
SpechtClasses schaper_sum_rhs(const Partition& lambda, int n);
SpechtClasses schaper_sum_rhs(const Partition& lambda, int n, int beta_length);

/// Same double sum weighted by d_symbol: the predicted valuation of the Gram
/// determinant of S(lambda) at the n-th cyclotomic polynomial.
Integer schaper_det_rhs(const Partition& lambda, int n);

/// sum over n-regular mu of d'_{lambda mu}(1) [D(mu)], read from row lambda.
SimpleClasses jantzen_prediction(const Partition& lambda,
                                 const DecompositionMatrix& d);

/// sum over tau of a'_{lambda tau}(1)/2 [S(tau)], read from row lambda.
/// Throws std::logic_error if some a'_{lambda tau}(1) is odd.
SpechtClasses gabber_joseph_rhs(const Partition& lambda, const BarMatrix& bar);

/// [S(tau)] = sum over n-regular mu of d_{tau mu}(1) [D(mu)].
SimpleClasses specht_to_simple(const SpechtClasses& v,
                               const DecompositionMatrix& d);

struct Theorem1Report {
  bool pass = false;
  SpechtClasses gabber_joseph;
  SpechtClasses schaper;
  SimpleClasses prediction{2};
  SimpleClasses gabber_joseph_simple{2};
  SimpleClasses schaper_simple{2};

  std::string summary() const;
};

/// Passes iff gabber_joseph_rhs == schaper_sum_rhs in the Specht basis and
/// both map to jantzen_prediction in the simple basis.
Theorem1Report theorem1_check(const Partition& lambda, const BarMatrix& bar,
                              const DecompositionMatrix& d);
Theorem1Report theorem1_check(const Partition& lambda, int n);

}  // namespace fockdec
