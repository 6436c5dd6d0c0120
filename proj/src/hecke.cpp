#include "fockdec/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace fockdec::hecke {

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[x] = true;
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++length_;
}

Permutation Permutation::times_simple(int i) const {
  std::vector<int> images = images_;
  std::swap(images[i], images[i + 1]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

std::vector<int> Permutation::reduced_word() const {
  // Strip right descents until the identity is reached.
  std::vector<int> w = images_;
  std::vector<int> word;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        word.push_back(static_cast<int>(i));
        again = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("permutations of different degrees");
  std::vector<int> images(y.images_.size());
  for (int j = 0; j < y.size(); ++j) images[j] = x.images_[y.images_[j]];
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Hecke algebra elements

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement x;
  x.add(w, LaurentPoly(1));
  return x;
}

LaurentPoly HeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add(const Permutation& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.size() != w.size())
    throw std::invalid_argument("Hecke elements on different numbers of letters");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& factor) const {
  HeckeElement out;
  if (factor.is_zero()) return out;
  for (const auto& [w, c] : terms_) out.add(w, c * factor);
  return out;
}

HeckeElement HeckeElement::times_generator(int i) const {
  static const LaurentPoly q_minus_one = LaurentPoly::q_power(1) - LaurentPoly(1);
  static const LaurentPoly q = LaurentPoly::q_power(1);
  HeckeElement out;
  for (const auto& [w, c] : terms_) {
    Permutation ws = w.times_simple(i);
    if (ws.length() > w.length()) {
      out.add(ws, c);
    } else {
      out.add(w, c * q_minus_one);
      out.add(ws, c * q);
    }
  }
  return out;
}

HeckeElement HeckeElement::star() const {
  HeckeElement out;
  for (const auto& [w, c] : terms_) out.add(w.inverse(), c);
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
  HeckeElement out;
  for (const auto& [w, c] : y.terms()) {
    HeckeElement partial = x;
    for (int i : w.reduced_word()) partial = partial.times_generator(i);
    out += partial.scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux and Murphy elements

Permutation tableau_permutation(const StandardTableau& t) {
  // Reading t along rows gives d(t)^-1 (entry at the position of i in t^lambda).
  std::vector<int> word = t.reading_word();
  for (int& x : word) --x;
  return Permutation(std::move(word)).inverse();
}

HeckeElement row_symmetrizer(const Partition& lambda) {
  const int m = lambda.size();
  HeckeElement x;
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 0);
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int part : lambda.parts()) {
    blocks.emplace_back(start, start + part);
    start += part;
  }
  // Odometer over the permutations of each row block.
  while (true) {
    x.add(Permutation(images), LaurentPoly(1));
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = images.begin() + blocks[b].first;
      auto last = images.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return x;
}

HeckeElement murphy_element(const StandardTableau& s, const StandardTableau& t) {
  const Partition shape = s.shape();
  if (!(shape == t.shape()))
    throw std::invalid_argument("murphy_element: tableaux of different shapes");
  return HeckeElement::basis(tableau_permutation(s).inverse()) *
         row_symmetrizer(shape) *
         HeckeElement::basis(tableau_permutation(t));
}

// ---------------------------------------------------------------------------
// Murphy basis

namespace {

using Row = std::map<Permutation, LaurentPoly, ByLength>;
using Coordinates = MurphyBasis::Coordinates;

void axpy(Coordinates& target, const Coordinates& source, const LaurentPoly& f) {
  for (const auto& [k, c] : source) {
    auto [it, inserted] = target.try_emplace(k, c * f);
    if (!inserted) {
      it->second += c * f;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

void axpy(Row& target, const Row& source, const LaurentPoly& f) {
  for (const auto& [k, c] : source) {
    auto [it, inserted] = target.try_emplace(k, c * f);
    if (!inserted) {
      it->second += c * f;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

LaurentPoly unit_inverse(const LaurentPoly& u) {
  const auto& [e, c] = *u.terms().begin();
  return LaurentPoly(c, -e);
}

}  // namespace

MurphyBasis::MurphyBasis(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("MurphyBasis: m must be >= 0");
  for (const Partition& shape : partitions_of(m)) {
    const auto tableaux = standard_tableaux(shape);
    for (std::size_t s = 0; s < tableaux.size(); ++s) {
      for (std::size_t t = 0; t < tableaux.size(); ++t) {
        labels_.push_back({shape, s, t});
        elements_.push_back(murphy_element(tableaux[s], tableaux[t]));
      }
    }
  }

  // Row-reduce [Murphy elements | identity] with unit pivots until every
  // row is a single T_w; the right half then expresses T_w in Murphy terms.
  struct Pending {
    Row vec;
    Coordinates combo;
  };
  std::vector<Pending> pending;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    pending.push_back({elements_[k].terms(), {{k, LaurentPoly(1)}}});
  std::vector<std::pair<Permutation, Pending>> pivots;

  while (!pending.empty()) {
    std::size_t row = pending.size();
    std::optional<Permutation> pivot;
    for (std::size_t r = 0; r < pending.size() && !pivot; ++r) {
      for (const auto& [w, c] : pending[r].vec) {
        if (c.is_unit()) {
          row = r;
          pivot = w;
          break;
        }
      }
    }
    if (!pivot)
      throw std::logic_error("Murphy basis elimination found no unit pivot at "
                             "m = " + std::to_string(m));
    const Permutation w = *pivot;
    Pending current = std::move(pending[row]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(row));
    const LaurentPoly inv = unit_inverse(current.vec.at(w));
    for (auto& [k, c] : current.vec) c *= inv;
    for (auto& [k, c] : current.combo) c *= inv;

    auto eliminate = [&](Pending& other) {
      auto it = other.vec.find(w);
      if (it == other.vec.end()) return;
      const LaurentPoly factor = -it->second;
      axpy(other.vec, current.vec, factor);
      axpy(other.combo, current.combo, factor);
    };
    for (auto& other : pending) eliminate(other);
    for (auto& [p, done] : pivots) eliminate(done);
    pivots.emplace_back(w, std::move(current));
  }

  for (auto& [w, done] : pivots) {
    if (done.vec.size() != 1 || done.vec.begin()->second != LaurentPoly(1))
      throw std::logic_error("Murphy basis elimination did not fully reduce");
    t_in_murphy_.emplace(w, std::move(done.combo));
  }
}

std::size_t MurphyBasis::label_index(const Partition& shape, std::size_t s,
                                     std::size_t t) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k].shape == shape && labels_[k].s == s && labels_[k].t == t)
      return k;
  throw std::out_of_range("no Murphy label for shape (" + shape.to_string() + ")");
}

MurphyBasis::Coordinates MurphyBasis::coordinates(const HeckeElement& x,
                                                  const Partition& shape) const {
  Coordinates out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [k, coeff] : t_in_murphy_.at(w)) {
      if (!(labels_[k].shape == shape)) continue;
      auto [it, inserted] = out.try_emplace(k, coeff * c);
      if (!inserted) {
        it->second += coeff * c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

MurphyBasis::Coordinates MurphyBasis::coordinates(const HeckeElement& x) const {
  Coordinates out;
  for (const auto& [w, c] : x.terms()) axpy(out, t_in_murphy_.at(w), c);
  return out;
}

// ---------------------------------------------------------------------------
// Gram matrices

const MurphyBasis& HeckeOracle::murphy_basis(int m) {
  std::lock_guard lock(mutex_);
  auto& slot = bases_[m];
  if (!slot) slot = std::make_unique<MurphyBasis>(m);
  return *slot;
}

GramMatrix HeckeOracle::gram_matrix(const Partition& lambda) {
  if (lambda.size() > cap_)
    throw SizeCapExceeded("Gram matrix of (" + lambda.to_string() + "): size " +
                          std::to_string(lambda.size()) +
                          " exceeds the configured cap of " +
                          std::to_string(cap_));
  GramMatrix gram;
  gram.shape = lambda;
  gram.cell_shape = conjugate(lambda);
  gram.index = standard_tableaux(lambda);
  const MurphyBasis& basis = murphy_basis(lambda.size());

  const Partition& nu = gram.cell_shape;
  const auto cell_tableaux = standard_tableaux(nu);
  const StandardTableau& top = cell_tableaux.front();  // t^nu
  const std::size_t top_label = basis.label_index(nu, 0, 0);

  std::vector<HeckeElement> left, right;
  for (const auto& t : gram.index) {
    const StandardTableau tt = t.transpose();
    left.push_back(murphy_element(top, tt));
    right.push_back(murphy_element(tt, top));
  }
  const std::size_t dim = gram.index.size();
  gram.entries.assign(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      const auto coords = basis.coordinates(left[s] * right[t], nu);
      for (const auto& [k, c] : coords)
        if (k != top_label)
          throw std::logic_error("cell product leaves the span of m_{t t} in "
                                 "shape (" + nu.to_string() + ")");
      auto it = coords.find(top_label);
      if (it != coords.end()) gram.entries[s][t] = it->second;
    }
  }
  return gram;
}

// ---------------------------------------------------------------------------
// Exact linear algebra

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> a) {
  const std::size_t dim = a.size();
  if (dim == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < dim && a[swap][k].is_zero()) ++swap;
      if (swap == dim) return LaurentPoly{};
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j)
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
      a[i][k] = LaurentPoly{};
    }
    previous = a[k][k];
  }
  LaurentPoly det = a[dim - 1][dim - 1];
  return sign == 1 ? det : -det;
}

namespace {

// Dense polynomial over Q, index = degree.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly quotient;
  if (a.size() >= b.size()) quotient.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / b.back();
    quotient[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    trim(a);
  }
  trim(quotient);
  return {quotient, a};
}

// Arithmetic in Q[q]/(Phi_n); elements are reduced QPolys.
class CyclotomicField {
 public:
  explicit CyclotomicField(int n) : n_(n) {
    for (const auto& [e, c] : cyclotomic(n).terms()) {
      if (modulus_.size() <= static_cast<std::size_t>(e)) modulus_.resize(e + 1);
      modulus_[e] = mpq_class(c);
    }
  }

  QPoly reduce(const LaurentPoly& f) const {
    if (f.is_zero()) return {};
    // q^n = 1 modulo Phi_n, so negative exponents can be shifted up by n.
    int shift = 0;
    if (f.min_exponent() < 0) shift = ((-f.min_exponent() + n_ - 1) / n_) * n_;
    QPoly p;
    for (const auto& [e, c] : f.terms()) {
      const auto d = static_cast<std::size_t>(e + shift);
      if (p.size() <= d) p.resize(d + 1);
      p[d] += mpq_class(c);
    }
    trim(p);
    return divmod(std::move(p), modulus_).second;
  }

  QPoly multiply(const QPoly& a, const QPoly& b) const {
    return divmod(mul(a, b), modulus_).second;
  }

  QPoly inverse(const QPoly& a) const {
    QPoly r0 = modulus_, r1 = a, s0, s1{mpq_class(1)};
    while (!r1.empty()) {
      auto [quotient, remainder] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(remainder);
      QPoly next = sub(s0, mul(quotient, s1));
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    // r0 is a nonzero constant because Phi_n is irreducible over Q.
    const mpq_class scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    return divmod(std::move(s0), modulus_).second;
  }

 private:
  int n_;
  QPoly modulus_;
};

}  // namespace

int rank_at_root(const std::vector<std::vector<LaurentPoly>>& matrix, int n) {
  if (n < 1) throw std::invalid_argument("rank_at_root: n must be >= 1");
  CyclotomicField field(n);
  std::vector<std::vector<QPoly>> a;
  for (const auto& row : matrix) {
    a.emplace_back();
    for (const auto& x : row) a.back().push_back(field.reduce(x));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].empty()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const QPoly inv = field.inverse(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].empty()) continue;
      const QPoly factor = field.multiply(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = sub(a[i][j], field.multiply(factor, a[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

GramMatrix gram_matrix(const Partition& lambda, int size_cap) {
  HeckeOracle oracle(size_cap);
  return oracle.gram_matrix(lambda);
}

int gram_det_valuation(const GramMatrix& gram, int n) {
  const LaurentPoly det = determinant(gram.entries);
  if (det.is_zero())
    throw std::domain_error("Gram determinant of (" + gram.shape.to_string() +
                            ") is zero");
  return cyclotomic_valuation(det, n);
}

int gram_det_valuation(const Partition& lambda, int n, int size_cap) {
  return gram_det_valuation(gram_matrix(lambda, size_cap), n);
}

int gram_rank_at_root(const GramMatrix& gram, int n) {
  return rank_at_root(gram.entries, n);
}

int gram_rank_at_root(const Partition& lambda, int n, int size_cap) {
  return gram_rank_at_root(gram_matrix(lambda, size_cap), n);
}

}  // namespace fockdec::hecke
