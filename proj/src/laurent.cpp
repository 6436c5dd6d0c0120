#include "fockdec/laurent.hpp"

#include <cctype>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fockdec {

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      skip_space();
      parse_term(out, sign);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

 private:
  void parse_term(LaurentPoly& out, int sign) {
    Integer coefficient = 1;
    int exponent = 0;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(read_digits());
      have_number = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    if (!at_end() && peek() == 'q') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        int exp_sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          exp_sign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        exponent = exp_sign * std::stoi(read_digits());
      }
    } else if (!have_number) {
      fail("expected a term");
    }
    out.add_term(exponent, sign * coefficient);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" +
                                std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Dense coefficient vector, index = exponent - offset.
struct Dense {
  std::vector<Integer> coeffs;
  int offset = 0;
};

Dense to_dense(const LaurentPoly& f) {
  Dense d;
  d.offset = f.min_exponent();
  d.coeffs.resize(f.max_exponent() - d.offset + 1);
  for (const auto& [e, c] : f.terms()) d.coeffs[e - d.offset] = c;
  return d;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f,
                                      const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return LaurentPoly{};
  Dense num = to_dense(f);
  const Dense den = to_dense(g);
  const int dn = static_cast<int>(den.coeffs.size()) - 1;
  const int nn = static_cast<int>(num.coeffs.size()) - 1;
  if (nn < dn) return std::nullopt;
  LaurentPoly quotient;
  const Integer& lead = den.coeffs[dn];
  for (int k = nn - dn; k >= 0; --k) {
    Integer& top = num.coeffs[k + dn];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer factor = top / lead;
    quotient.add_term(k + num.offset - den.offset, factor);
    for (int j = 0; j <= dn; ++j) num.coeffs[k + j] -= factor * den.coeffs[j];
  }
  for (const auto& c : num.coeffs)
    if (c != 0) return std::nullopt;
  return quotient;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  return PolyParser(text).parse();
}

LaurentPoly bar_q(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(-e, c);
  return out;
}

Integer derivative_at_one(const LaurentPoly& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) sum += c * e;
  return sum;
}

Integer eval_at_one(const LaurentPoly& f) {
  Integer sum = 0;
  for (const auto& [e, c] : f.terms()) sum += c;
  return sum;
}

LaurentPoly quantum_integer(int h) {
  if (h <= 0) throw std::invalid_argument("quantum_integer: h must be >= 1");
  LaurentPoly out;
  for (int e = 0; e < h; ++e) out.add_term(e, 1);
  return out;
}

const LaurentPoly& cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, LaurentPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  LaurentPoly value = LaurentPoly::q_power(n) - LaurentPoly(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) value = divide_exact(value, cyclotomic(d));
  std::lock_guard lock(mutex);
  return memo.try_emplace(n, std::move(value)).first->second;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_divide(f, g);
  if (!q)
    throw std::domain_error("'" + g.to_string() + "' does not divide '" +
                            f.to_string() + "'");
  return *q;
}

int cyclotomic_valuation(const LaurentPoly& f, int n) {
  if (f.is_zero())
    throw std::domain_error("cyclotomic_valuation of zero is infinite");
  const LaurentPoly& phi = cyclotomic(n);
  // Clearing the q-power unit first keeps every quotient a polynomial.
  LaurentPoly rest = f.shifted(-f.min_exponent());
  int k = 0;
  while (auto next = try_divide(rest, phi)) {
    rest = std::move(*next);
    ++k;
  }
  return k;
}

int nu_quantum(int h, int n) {
  if (h < 1) throw std::invalid_argument("nu_quantum: h must be >= 1");
  if (n < 2) throw std::invalid_argument("nu_quantum: n must be >= 2");
  return h % n == 0 ? 1 : 0;
}

}  // namespace fockdec
