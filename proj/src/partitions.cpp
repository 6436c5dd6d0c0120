#include "fockdec/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fockdec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} ||
        ptr != field.data() + field.size())
      throw std::invalid_argument("malformed partition: '" +
                                  std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  std::vector<int> lengths;
  int m = 0;
  for (const auto& r : rows_) {
    lengths.push_back(static_cast<int>(r.size()));
    m += static_cast<int>(r.size());
  }
  Partition shape_check(lengths);  // validates the shape
  std::vector<bool> seen(m + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v < 1 || v > m || seen[v])
        throw std::invalid_argument("tableau entries must be 1..m, each once");
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v)
        throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  return Partition(std::move(lengths));
}

int StandardTableau::size() const {
  int m = 0;
  for (const auto& r : rows_) m += static_cast<int>(r.size());
  return m;
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& r : rows_) word.insert(word.end(), r.begin(), r.end());
  return word;
}

StandardTableau StandardTableau::transpose() const {
  std::vector<std::vector<int>> cols;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (cols.size() <= j) cols.emplace_back();
      cols[j].push_back(r[j]);
    }
  }
  return StandardTableau(std::move(cols));
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest part first, so output is already reverse lexicographic.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

bool dominated_by(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument(
        "dominance is only defined for partitions of the same size");
  int a = 0, b = 0;
  for (int i = 1; i <= std::max(lambda.rows(), mu.rows()); ++i) {
    a += lambda.row(i);
    b += mu.row(i);
    if (a > b) return false;
  }
  return true;
}

int hook_length(const Partition& lambda, int b, int c) {
  if (b < 1 || b > lambda.rows() || c < 1 || c > lambda.row(b))
    throw std::out_of_range("hook_length: cell (" + std::to_string(b) + "," +
                            std::to_string(c) + ") outside diagram of (" +
                            lambda.to_string() + ")");
  int arm = lambda.row(b) - c;
  int leg = 0;
  for (int i = b + 1; i <= lambda.rows() && lambda.row(i) >= c; ++i) ++leg;
  return arm + leg + 1;
}

BetaSequence first_column_betas(const Partition& lambda, int s) {
  if (s < lambda.rows())
    throw std::invalid_argument("first_column_betas: s smaller than rows");
  BetaSequence out;
  for (int i = 1; i <= s; ++i) out.entries.push_back(lambda.row(i) + s - i);
  return out;
}

std::optional<SignedPartition> partition_from_betas(const BetaSequence& betas) {
  std::vector<int> sorted = betas.entries;
  const int s = betas.length();
  // Sign of the sorting permutation = parity of the inversion count.
  int inversions = 0;
  for (int i = 0; i < s; ++i) {
    if (sorted[i] < 0) return std::nullopt;
    for (int j = i + 1; j < s; ++j) {
      if (sorted[i] == sorted[j]) return std::nullopt;
      if (sorted[i] < sorted[j]) ++inversions;
    }
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<int> parts;
  for (int i = 1; i <= s; ++i) {
    int part = sorted[i - 1] + i - s;
    if (part > 0) parts.push_back(part);
  }
  return SignedPartition{inversions % 2 == 0 ? 1 : -1,
                         Partition(std::move(parts))};
}

Integer dim_specht(const Partition& lambda) {
  Integer num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  Integer den = 1;
  for (int b = 1; b <= lambda.rows(); ++b)
    for (int c = 1; c <= lambda.row(b); ++c) den *= hook_length(lambda, b, c);
  return num / den;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  const int m = lambda.size();
  std::vector<std::vector<int>> rows(lambda.rows());
  std::vector<StandardTableau> out;
  std::function<void(int)> rec = [&](int next) {
    if (next > m) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      const auto len = static_cast<int>(rows[r].size());
      if (len < lambda.row(r + 1) &&
          (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
        rows[r].push_back(next);
        rec(next + 1);
        rows[r].pop_back();
      }
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) {
              return a.reading_word() < b.reading_word();
            });
  return out;
}

Integer d_symbol(const BetaSequence& betas) {
  auto recovered = partition_from_betas(betas);
  if (!recovered) return 0;
  return recovered->sign * dim_specht(recovered->partition);
}

bool is_n_regular(const Partition& lambda, int n) {
  if (n < 2) throw std::invalid_argument("is_n_regular: n must be >= 2");
  int run = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    run = (i > 1 && lambda.row(i) == lambda.row(i - 1)) ? run + 1 : 1;
    if (run >= n) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int c = 1; c <= lambda.row(1); ++c) {
    int len = 0;
    while (len < lambda.rows() && lambda.row(len + 1) >= c) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

}  // namespace fockdec
