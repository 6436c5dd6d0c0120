#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fockdec/cli.hpp"
#include "fockdec/serialize.hpp"
#include "generators.hpp"

using namespace fockdec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

struct CacheDir {
  fs::path path = fs::temp_directory_path() /
                  ("fockdec-cli-" + std::to_string(testing::uniform(0, 1 << 30)));
  ~CacheDir() { fs::remove_all(path); }
};

Run run(std::vector<std::string> args) {
  static const CacheDir cache_dir;
  const fs::path& cache = cache_dir.path;
  const bool takes_cache = !args.empty() && (args[0] == "decomp" || args[0] == "bar" ||
                                             args[0] == "schaper");
  if (takes_cache) {
    args.push_back("--cache-dir");
    args.push_back(cache.string());
  }
  std::vector<const char*> argv{"fockdec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decomp") {
  const Run r = run({"decomp", "--n", "2", "--m", "2", "--format", "json"});
  CHECK(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j["entries"][1][0] == "q");
  const Run cached = run({"decomp", "--n", "2", "--m", "2", "--format", "json"});
  CHECK(cached.out == r.out);

  const Run identity = run({"decomp", "--n", "5", "--m", "3", "--format", "csv"});
  CHECK(identity.code == kExitPass);
  CHECK(identity.out == "\"\",\"3\",\"2,1\",\"1,1,1\"\n\"3\",1,0,0\n\"2,1\",0,1,0\n\"1,1,1\",0,0,1\n");

  CHECK(run({"decomp", "--n", "1", "--m", "2"}).code == kExitUsage);
  CHECK(run({"decomp", "--n", "2", "--m", "-1"}).code == kExitUsage);
  CHECK(run({"decomp", "--n", "2", "--m", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"decomp", "--m", "2"}).code == kExitUsage);
  CHECK(run({"decomp", "--n", "2", "--m", "2", "--format", "latex"}).out.find("tabular") !=
        std::string::npos);
}

TEST_CASE("bar") {
  const Run r = run({"bar", "--n", "2", "--m", "2", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("-q^-1 + q") != std::string::npos);
  const Run empty = run({"bar", "--n", "3", "--m", "0", "--format", "json"});
  CHECK(Json::parse(empty.out)["entries"] == Json::parse(R"([["1"]])"));
  const Run ident = run({"bar", "--n", "6", "--m", "4", "--format", "json"});
  const Json j = Json::parse(ident.out);
  for (std::size_t r2 = 0; r2 < j["entries"].size(); ++r2)
    for (std::size_t c = 0; c < j["entries"].size(); ++c)
      CHECK(j["entries"][r2][c] == (r2 == c ? "1" : "0"));
}

TEST_CASE("schaper") {
  const Run r = run({"schaper", "--lambda", "1,1", "--n", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "[S(2)], nu=1, theorem1: PASS\n");
  const Run zero = run({"schaper", "--lambda", "2", "--n", "2"});
  CHECK(zero.code == kExitPass);
  CHECK(zero.out == "0, nu=0, theorem1: PASS\n");
  const Run json = run({"schaper", "--lambda", "3,2,1", "--n", "3", "--format", "json"});
  CHECK(Json::parse(json.out)["theorem1"] == true);
  CHECK(run({"schaper", "--lambda", "1,2", "--n", "2"}).code == kExitUsage);
  CHECK(run({"schaper", "--lambda", "a", "--n", "2"}).code == kExitUsage);
}

TEST_CASE("gram") {
  const Run r = run({"gram", "--lambda", "1,1", "--n", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("nu(det)=1") != std::string::npos);
  CHECK(r.out.find("rank=0") != std::string::npos);
  const Run trivial = run({"gram", "--lambda", "2", "--n", "2"});
  CHECK(trivial.out.find("nu(det)=0") != std::string::npos);
  const Run table = run({"gram", "--lambda", "2,1", "--format", "json"});
  CHECK(Json::parse(table.out)["moduli"].size() == 4);
  const Run capped = run({"gram", "--lambda", "3,3", "--n", "2"});
  CHECK(capped.code == kExitUsage);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--max-m", "4", "--format", "json"});
  CHECK(ok.code == kExitPass);
  const Json report = Json::parse(ok.out);
  CHECK(report.size() > 100);
  for (const auto& rec : report) {
    CHECK(rec["pass"] == true);
    CHECK(rec.contains("lambda"));
    CHECK(rec.contains("lhs"));
    CHECK(rec.contains("rhs"));
  }

  const Run fault = run({"verify", "--max-m", "3", "--inject-fault"});
  CHECK(fault.code == kExitFailure);
  CHECK(fault.err.find("failing check: canonical") != std::string::npos);

  const Run empty = run({"verify", "--min-m", "3", "--max-m", "2", "--format", "json"});
  CHECK(empty.code == kExitPass);
  CHECK(Json::parse(empty.out) == Json::array());

  const Run one = run({"verify", "--m", "3", "--n-set", "2", "--suite", "theorem1"});
  CHECK(one.code == kExitPass);
  CHECK(one.out.find("theorem1     2   3/3") != std::string::npos);

  CHECK(run({"verify", "--suite", "nonsense"}).code == kExitUsage);
  CHECK(run({"verify", "--n-set", "1,2"}).code == kExitUsage);
  CHECK(run({"verify", "--n-set", "2,x"}).code == kExitUsage);
}

TEST_CASE("top level") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitPass);
  CHECK(help.out.find("decomp") != std::string::npos);
}

}
