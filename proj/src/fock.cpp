#include "fockdec/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fockdec {

bool WedgeWord::is_normalized() const {
  const int k = length();
  for (int j = 0; j < k; ++j) {
    if (head[j] <= -k) return false;
    if (j > 0 && head[j] >= head[j - 1]) return false;
  }
  return true;
}

int WedgeWord::degree() const {
  int sum = 0;
  for (int j = 0; j < length(); ++j) sum += head[j] + j;
  return sum;
}

WedgeWord wedge_from_partition(const Partition& lambda, int k) {
  if (k < lambda.rows())
    throw std::invalid_argument("wedge_from_partition: k = " +
                                std::to_string(k) + " is below the " +
                                std::to_string(lambda.rows()) + " rows of (" +
                                lambda.to_string() + ")");
  WedgeWord w;
  for (int j = 1; j <= k; ++j) w.head.push_back(lambda.row(j) - j + 1);
  return w;
}

Partition partition_from_wedge(const WedgeWord& w) {
  if (!w.is_normalized())
    throw std::invalid_argument("partition_from_wedge: wedge not normalized");
  std::vector<int> parts;
  for (int j = 0; j < w.length(); ++j) {
    int part = w.head[j] + j;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

BetaSequence betas_from_wedge(const WedgeWord& w) {
  const Partition lambda = partition_from_wedge(w);
  const int m = lambda.size();
  BetaSequence out;
  for (int j = 1; j <= m; ++j) out.entries.push_back(lambda.row(j) - j + 1 + m);
  out.entries.push_back(0);
  return out;
}

LaurentPoly FockVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& coefficient) {
  if (coefficient.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.size() != lambda.size())
    throw std::invalid_argument("FockVector: mixed degrees");
  auto [it, inserted] = terms_.try_emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& factor) const {
  FockVector out;
  if (factor.is_zero()) return out;
  for (const auto& [lambda, c] : terms_) out.add(lambda, c * factor);
  return out;
}

Straightener::Straightener(int n, std::size_t step_budget)
    : n_(n), budget_(step_budget) {
  if (n < 2) throw std::invalid_argument("straightening needs modulus n >= 2");
}

FockVector Straightener::straighten(std::span<const int> head) {
  std::vector<int> word(head.begin(), head.end());
  const int k = static_cast<int>(word.size());
  for (int x : word)
    if (x <= -k)
      throw std::invalid_argument(
          "straighten: entry " + std::to_string(x) +
          " would collide with the vacuum tail of a length-" +
          std::to_string(k) + " head");
  FockVector out;
  for (const auto& [normal, c] : expand(word))
    out.add(partition_from_wedge(WedgeWord{normal}), c);
  return out;
}

const Straightener::Expansion& Straightener::expand(
    const std::vector<int>& head) {
  if (auto it = memo_.find(head); it != memo_.end()) return it->second;

  Expansion result;
  std::size_t p = 0;
  while (p + 1 < head.size() && head[p] > head[p + 1]) ++p;

  if (p + 1 >= head.size()) {
    result.emplace(head, LaurentPoly(1));
  } else if (head[p] != head[p + 1]) {
    if (++steps_ > budget_)
      throw std::runtime_error("straightening exceeded its step budget of " +
                               std::to_string(budget_) + " rule applications");
    const int l = head[p];
    const int m = head[p + 1];
    auto accumulate = [&](int first, int second, const LaurentPoly& coeff) {
      if (first < l || first > m || second < l || second > m)
        throw std::logic_error("straightening left the closed index interval");
      std::vector<int> next = head;
      next[p] = first;
      next[p + 1] = second;
      const Expansion& child = expand(next);
      for (const auto& [normal, c] : child) {
        auto [it, inserted] = result.try_emplace(normal, c * coeff);
        if (!inserted) {
          it->second += c * coeff;
          if (it->second.is_zero()) result.erase(it);
        }
      }
    };

    const int i = (m - l) % n_;
    if (i == 0) {
      accumulate(m, l, LaurentPoly(-1));
    } else {
      accumulate(m, l, LaurentPoly(Integer(-1), -1));
      const LaurentPoly step = LaurentPoly(Integer(1), -2) - LaurentPoly(1);
      // Terms alternate between shifts by (t*n + i) and ((t+1)*n), t = 0,1,...
      for (int term = 0;; ++term) {
        const int t = term / 2;
        const int shift = term % 2 == 0 ? t * n_ + i : (t + 1) * n_;
        const int first = m - shift;
        const int second = l + shift;
        if (first <= second) break;
        const int sign = term % 2 == 0 ? 1 : -1;
        accumulate(first, second, step * LaurentPoly(Integer(sign), -term));
      }
    }
  }
  return memo_.emplace(head, std::move(result)).first->second;
}

FockVector straighten(std::span<const int> head, int n) {
  Straightener s(n);
  return s.straighten(head);
}

BarInvolution::BarInvolution(int n, std::size_t step_budget)
    : straightener_(n, step_budget) {}

FockVector BarInvolution::of_partition(const Partition& mu,
                                       std::optional<int> k) {
  const int m = mu.size();
  const int trunc = k.value_or(std::max(m, mu.rows()));
  if (trunc < m || trunc < mu.rows())
    throw std::invalid_argument("bar involution: truncation k = " +
                                std::to_string(trunc) + " below max(m, rows)");
  const int n = modulus();
  WedgeWord w = wedge_from_partition(mu, trunc);
  int alpha = 0;
  for (int r = 0; r < trunc; ++r)
    for (int s = r + 1; s < trunc; ++s)
      if ((w.head[r] - w.head[s]) % n != 0) ++alpha;
  const long pairs = static_cast<long>(trunc) * (trunc - 1) / 2;
  const int sign = pairs % 2 == 0 ? 1 : -1;
  std::reverse(w.head.begin(), w.head.end());
  return straightener_.straighten(w.head).scaled(
      LaurentPoly(Integer(sign), alpha));
}

FockVector BarInvolution::of_vector(const FockVector& v, std::optional<int> k) {
  FockVector out;
  for (const auto& [lambda, c] : v.terms())
    out += of_partition(lambda, k).scaled(bar_q(c));
  return out;
}

FockVector bar_partition(const Partition& mu, int n, std::optional<int> k) {
  BarInvolution bar(n);
  return bar.of_partition(mu, k);
}

FockVector bar_vector(const FockVector& v, int n, std::optional<int> k) {
  BarInvolution bar(n);
  return bar.of_vector(v, k);
}

std::size_t PartitionMatrix::index_of(const Partition& lambda) const {
  auto it = std::lower_bound(order.begin(), order.end(), lambda, ReverseLex{});
  if (it == order.end() || !(*it == lambda))
    throw std::out_of_range("partition (" + lambda.to_string() +
                            ") is not indexed by this matrix");
  return static_cast<std::size_t>(it - order.begin());
}

BarMatrix bar_matrix(int n, int m) {
  if (n < 2) throw std::invalid_argument("bar_matrix: n must be >= 2");
  BarMatrix a;
  a.n = n;
  a.m = m;
  a.order = partitions_of(m);
  const std::size_t dim = a.order.size();
  a.entries.assign(dim, std::vector<LaurentPoly>(dim));
  BarInvolution bar(n);
  for (std::size_t col = 0; col < dim; ++col) {
    const FockVector column = bar.of_partition(a.order[col]);
    for (const auto& [lambda, c] : column.terms())
      a.entries[a.index_of(lambda)][col] = c;
  }
  return a;
}

}  // namespace fockdec
