#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace fockdec {

using Integer = mpz_class;

/// Element of Z[q, q^-1] with arbitrary-precision coefficients. Stored as a
/// sparse exponent -> coefficient table with no zero entries; the empty table
/// is the zero polynomial.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int constant) { add_term(0, constant); }  // NOLINT: implicit
  LaurentPoly(const Integer& coefficient, int exponent) {
    add_term(exponent, coefficient);
  }

  static LaurentPoly q_power(int exponent) { return {Integer(1), exponent}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  /// Undefined on the zero polynomial.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  /// A single term +-q^k.
  bool is_unit() const;

  void add_term(int exponent, const Integer& coefficient);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Canonical rendering in increasing exponent order, e.g.
  /// "q^-1 - q + 2*q^3"; the zero polynomial is "0".
  std::string to_string() const;
  /// Inverse of to_string; also accepts arbitrary spacing and term order.
  static LaurentPoly parse(std::string_view text);

 private:
  Terms terms_;
};

/// q -> q^-1.
LaurentPoly bar_q(const LaurentPoly& f);

/// Formal derivative evaluated at q = 1: sum of coefficient * exponent.
Integer derivative_at_one(const LaurentPoly& f);

Integer eval_at_one(const LaurentPoly& f);

/// [h] = 1 + q + ... + q^(h-1).
LaurentPoly quantum_integer(int h);

/// The n-th cyclotomic polynomial, by exact division of q^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n. Memoized.
const LaurentPoly& cyclotomic(int n);

/// Quotient of an exact division. Throws std::domain_error if g does not
/// divide f in Z[q, q^-1] or g is zero.
LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Multiplicity of the n-th cyclotomic polynomial in f. Throws
/// std::domain_error for f = 0.
int cyclotomic_valuation(const LaurentPoly& f, int n);

/// Valuation of [h] at the n-th cyclotomic polynomial: 1 if n | h, else 0.
int nu_quantum(int h, int n);

}  // namespace fockdec
