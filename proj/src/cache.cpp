#include "fockdec/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "fockdec/serialize.hpp"

namespace fockdec {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("FOCKDEC_CACHE"); env && *env) return env;
  return ".fockdec-cache";
}

std::filesystem::path MatrixCache::path_for(const std::string& kind, int n,
                                            int m) const {
  return dir_ / (kind + "_n" + std::to_string(n) + "_m" + std::to_string(m) +
                 ".json");
}

std::optional<PartitionMatrix> MatrixCache::load(const std::string& kind, int n,
                                                 int m) const {
  std::ifstream in(path_for(kind, n, m));
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("schema").get<std::string>() != kCacheSchema) return std::nullopt;
    PartitionMatrix a = matrix_from_json(j.at("matrix"));
    if (a.n != n || a.m != m) return std::nullopt;
    return a;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void MatrixCache::store(const std::string& kind, const PartitionMatrix& a) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(kind, a.n, a.m);
  // Write-then-rename so concurrent readers never see a partial file.
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << Json{{"schema", kCacheSchema}, {"kind", kind},
                {"matrix", matrix_to_json(a)}}
               .dump()
        << '\n';
  }
  std::filesystem::rename(tmp, target);
}

std::optional<BarMatrix> MatrixCache::load_bar(int n, int m) const {
  auto a = load("bar", n, m);
  if (!a) return std::nullopt;
  return BarMatrix{std::move(*a)};
}

std::optional<DecompositionMatrix> MatrixCache::load_decomposition(int n,
                                                                   int m) const {
  auto a = load("decomp", n, m);
  if (!a) return std::nullopt;
  return DecompositionMatrix{std::move(*a)};
}

void MatrixCache::store(const BarMatrix& a) const { store("bar", a); }
void MatrixCache::store(const DecompositionMatrix& d) const {
  store("decomp", d);
}

BarMatrix MatrixCache::bar(int n, int m) const {
  if (auto hit = load_bar(n, m)) return *hit;
  BarMatrix a = bar_matrix(n, m);
  store(a);
  return a;
}

DecompositionMatrix MatrixCache::decomposition(int n, int m) const {
  if (auto hit = load_decomposition(n, m)) return *hit;
  DecompositionMatrix d = decomposition_matrix(bar(n, m));
  store(d);
  return d;
}

}  // namespace fockdec
