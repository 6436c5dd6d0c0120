#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fockdec/cache.hpp"
#include "fockdec/serialize.hpp"
#include "generators.hpp"

using namespace fockdec;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fockdec-test-" + std::to_string(testing::uniform(0, 1 << 30)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("polynomial JSON round-trip") {
  const LaurentPoly f = LaurentPoly::parse("q^-1 - q + 2*q^3");
  const Json j = laurent_to_json(f);
  CHECK(j.dump() == R"({"-1":1,"1":-1,"3":2})");
  CHECK(laurent_from_json(j) == f);
  const LaurentPoly big(Integer("-98765432109876543210987"), 4);
  CHECK(laurent_to_json(big)["4"] == "-98765432109876543210987");
  CHECK(laurent_from_json(laurent_to_json(big)) == big);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly g = testing::random_poly();
    CHECK(laurent_from_json(Json::parse(laurent_to_json(g).dump())) == g);
  }
  CHECK_THROWS(laurent_from_json(Json::array()));
  CHECK_THROWS(laurent_from_json(Json{{"1", 1.5}}));
}

TEST_CASE("Fock vector and partition JSON round-trip") {
  FockVector v = FockVector::basis(Partition{2});
  v.add(Partition{1, 1}, LaurentPoly::q_power(1));
  const Json j = fock_to_json(v);
  CHECK(j.dump() ==
        R"([{"partition":[2],"coefficient":"1"},{"partition":[1,1],"coefficient":"q"}])");
  CHECK(fock_from_json(j) == v);
  CHECK(partition_from_json(partition_to_json(Partition{3, 1, 1})) == Partition{3, 1, 1});
}

TEST_CASE("matrix formats round-trip") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= 5; ++m) {
      const DecompositionMatrix d = decomposition_matrix(n, m);
      const BarMatrix a = bar_matrix(n, m);
      for (const PartitionMatrix* x : {static_cast<const PartitionMatrix*>(&d),
                                       static_cast<const PartitionMatrix*>(&a)}) {
        CHECK(matrix_from_json(Json::parse(matrix_to_json(*x).dump(2))) == *x);
        CHECK(matrix_from_csv(matrix_to_csv(*x), n) == *x);
        CHECK(matrix_to_json(matrix_from_json(matrix_to_json(*x))).dump() ==
              matrix_to_json(*x).dump());
      }
    }
}

TEST_CASE("matrix rendering") {
  const DecompositionMatrix d = decomposition_matrix(2, 2);
  CHECK(matrix_to_csv(d) == "\"\",\"2\",\"1,1\"\n\"2\",1,0\n\"1,1\",q,1\n");
  const std::string latex = matrix_to_latex(d);
  CHECK(latex.find("$\\cdot$") != std::string::npos);
  CHECK(latex.find("$q$") != std::string::npos);
  CHECK(laurent_to_latex(LaurentPoly::parse("q^-1 - 2*q^3")) == "q^{-1} - 2q^{3}");
  const std::string text = matrix_to_text(d);
  CHECK(text.find("(1,1)") != std::string::npos);
}

TEST_CASE("malformed matrix input is rejected") {
  Json j = matrix_to_json(decomposition_matrix(2, 2));
  Json reordered = j;
  std::swap(reordered["order"][0], reordered["order"][1]);
  CHECK_THROWS(matrix_from_json(reordered));
  Json ragged = j;
  ragged["entries"][0].erase(0);
  CHECK_THROWS(matrix_from_json(ragged));
  CHECK_THROWS(matrix_from_csv("", 2));
  CHECK_THROWS(matrix_from_csv("\"\",\"2\",\"1,1\"\n\"2\",1,0\n", 2));
  CHECK_THROWS(matrix_from_csv("\"\",\"2\",\"1,1\"\n\"1,1\",1,0\n\"2\",q,1\n", 2));
}

TEST_CASE("Grothendieck vector JSON") {
  SpechtClasses v;
  v.add(Partition{2}, 1);
  CHECK(classes_to_json(v).dump() ==
        R"({"basis":"specht","coords":[{"partition":[2],"coefficient":1}]})");
  CHECK(classes_to_json(SimpleClasses(2)).dump() == R"({"basis":"simple","coords":[]})");
}

TEST_CASE("golden matrices") {
  const fs::path dir = FOCKDEC_GOLDEN_DIR;
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{3, 5}}) {
    const std::string suffix = "_n" + std::to_string(n) + "_m" + std::to_string(m) + ".json";
    const std::string bar_text = read_file(dir / ("bar" + suffix));
    const std::string decomp_text = read_file(dir / ("decomp" + suffix));
    REQUIRE_FALSE(bar_text.empty());
    REQUIRE_FALSE(decomp_text.empty());
    CHECK(matrix_to_json(bar_matrix(n, m)).dump(2) + "\n" == bar_text);
    CHECK(matrix_to_json(decomposition_matrix(n, m)).dump(2) + "\n" == decomp_text);
    CHECK(matrix_to_json(matrix_from_json(Json::parse(decomp_text))).dump(2) + "\n" ==
          decomp_text);
  }
}

TEST_CASE("matrix cache") {
  TempDir tmp;
  const MatrixCache cache(tmp.path);
  CHECK_FALSE(cache.load_decomposition(2, 4));
  const DecompositionMatrix fresh = decomposition_matrix(2, 4);
  CHECK(cache.decomposition(2, 4) == fresh);
  CHECK(fs::exists(cache.path_for("decomp", 2, 4)));
  CHECK(fs::exists(cache.path_for("bar", 2, 4)));
  const auto loaded = cache.load_decomposition(2, 4);
  REQUIRE(loaded);
  CHECK(*loaded == fresh);
  CHECK(*cache.load_bar(2, 4) == bar_matrix(2, 4));

  SUBCASE("stale schema is recomputed") {
    Json j = Json::parse(read_file(cache.path_for("decomp", 2, 4)));
    j["schema"] = "fockdec-matrix-v0";
    j["matrix"]["entries"][0][0] = "7";
    std::ofstream(cache.path_for("decomp", 2, 4)) << j.dump();
    CHECK_FALSE(cache.load_decomposition(2, 4));
    CHECK(cache.decomposition(2, 4) == fresh);
    CHECK(cache.load_decomposition(2, 4));
  }
  SUBCASE("corrupt file is recomputed") {
    std::ofstream(cache.path_for("decomp", 2, 4)) << "{not json";
    CHECK_FALSE(cache.load_decomposition(2, 4));
    CHECK(cache.decomposition(2, 4) == fresh);
  }
  SUBCASE("entry for other parameters is ignored") {
    fs::copy_file(cache.path_for("decomp", 2, 4), cache.path_for("decomp", 3, 4));
    CHECK_FALSE(cache.load_decomposition(3, 4));
  }
}

}
