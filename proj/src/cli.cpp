#include "fockdec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "fockdec/cache.hpp"
#include "fockdec/hecke.hpp"
#include "fockdec/schaper.hpp"
#include "fockdec/verify.hpp"

namespace fockdec {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int n = 0;
  int m = -1;
  int min_m = 0;
  int max_m = 8;
  std::string n_set = "2,3,4,5";
  std::string lambda;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::vector<std::string> suites;
  bool inject_fault = false;
  std::string report_path;
  int size_cap = hecke::HeckeOracle::kDefaultSizeCap;
};

void require_modulus(int n) {
  if (n < 2) throw UsageError("--n must be at least 2 (got " + std::to_string(n) + ")");
}

Partition parse_lambda(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed --lambda '" + text + "': " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size())
      throw UsageError(std::string("malformed ") + flag + " entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

MatrixCache make_cache(const Config& c) {
  return MatrixCache(c.cache_dir.empty() ? default_cache_dir()
                                         : std::filesystem::path(c.cache_dir));
}

BarMatrix load_bar(const Config& c, int n, int m) {
  return c.no_cache ? bar_matrix(n, m) : make_cache(c).bar(n, m);
}

DecompositionMatrix load_decomposition(const Config& c, int n, int m) {
  return c.no_cache ? decomposition_matrix(n, m) : make_cache(c).decomposition(n, m);
}

void write_matrix(const PartitionMatrix& a, const std::string& format,
                  std::ostream& out) {
  if (format == "json")
    out << matrix_to_json(a).dump(2) << '\n';
  else if (format == "csv")
    out << matrix_to_csv(a);
  else if (format == "latex")
    out << matrix_to_latex(a);
  else
    out << matrix_to_text(a);
}

int cmd_matrix(const Config& c, bool decomposition, std::ostream& out) {
  require_modulus(c.n);
  if (c.m < 0) throw UsageError("--m must be non-negative");
  if (decomposition)
    write_matrix(load_decomposition(c, c.n, c.m), c.format, out);
  else
    write_matrix(load_bar(c, c.n, c.m), c.format, out);
  return kExitPass;
}

int cmd_schaper(const Config& c, std::ostream& out) {
  require_modulus(c.n);
  const Partition lambda = parse_lambda(c.lambda);
  const BarMatrix a = load_bar(c, c.n, lambda.size());
  const DecompositionMatrix d = load_decomposition(c, c.n, lambda.size());
  const Theorem1Report report = theorem1_check(lambda, a, d);
  const Integer nu = schaper_det_rhs(lambda, c.n);
  if (c.format == "json") {
    Json j{{"lambda", partition_to_json(lambda)},
           {"n", c.n},
           {"sum_formula", classes_to_json(report.schaper)},
           {"det_valuation", nu.get_si()},
           {"gabber_joseph", classes_to_json(report.gabber_joseph)},
           {"jantzen_prediction", classes_to_json(report.prediction)},
           {"theorem1", report.pass}};
    out << j.dump(2) << '\n';
  } else {
    out << report.schaper.to_string() << ", nu=" << nu.get_str()
        << ", theorem1: " << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.pass ? kExitPass : kExitFailure;
}

int cmd_gram(const Config& c, std::ostream& out) {
  const Partition lambda = parse_lambda(c.lambda);
  std::vector<int> moduli;
  if (c.n != 0) {
    require_modulus(c.n);
    moduli.push_back(c.n);
  } else {
    moduli = parse_int_list(c.n_set, "--n-set");
    for (int n : moduli) require_modulus(n);
  }
  hecke::GramMatrix gram;
  try {
    gram = hecke::gram_matrix(lambda, c.size_cap);
  } catch (const hecke::SizeCapExceeded& e) {
    throw UsageError(e.what());
  }
  const LaurentPoly det = hecke::determinant(gram.entries);
  struct Row {
    int n;
    std::optional<int> nu;
    int rank;
  };
  std::vector<Row> rows;
  for (int n : moduli)
    rows.push_back({n,
                    det.is_zero() ? std::nullopt
                                  : std::optional<int>(cyclotomic_valuation(det, n)),
                    hecke::gram_rank_at_root(gram, n)});
  if (c.format == "json") {
    Json table = Json::array();
    for (const auto& r : rows)
      table.push_back({{"n", r.n},
                       {"nu_det", r.nu ? Json(*r.nu) : Json()},
                       {"rank", r.rank}});
    out << Json{{"lambda", partition_to_json(lambda)},
                {"dimension", gram.index.size()},
                {"determinant", det.to_string()},
                {"moduli", table}}
               .dump(2)
        << '\n';
  } else {
    out << "lambda=(" << lambda.to_string() << ") dim=" << gram.index.size()
        << '\n'
        << "det=" << det.to_string() << '\n';
    for (const auto& r : rows)
      out << "n=" << r.n << ": nu(det)="
          << (r.nu ? std::to_string(*r.nu) : std::string("undefined (det = 0)"))
          << " rank=" << r.rank << '\n';
  }
  return det.is_zero() ? kExitFailure : kExitPass;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.m_values.clear();
  if (c.m >= 0) {
    o.m_values.push_back(c.m);
  } else {
    if (c.min_m < 0) throw UsageError("--min-m must be non-negative");
    for (int m = c.min_m; m <= c.max_m; ++m) o.m_values.push_back(m);
  }
  o.n_values = parse_int_list(c.n_set, "--n-set");
  for (int n : o.n_values) require_modulus(n);
  o.suites.insert(c.suites.begin(), c.suites.end());
  o.inject_fault = c.inject_fault;

  const VerifyReport report = run_verify(o);
  const Json j = report_to_json(report);
  if (!c.report_path.empty()) {
    std::ofstream file(c.report_path);
    if (!file) throw UsageError("cannot write report to " + c.report_path);
    file << j.dump(2) << '\n';
  }
  if (c.format == "json")
    out << j.dump(2) << '\n';
  else
    out << report_to_text(report);
  for (const auto* r : report.failures())
    err << "failing check: " << r->check << " n=" << r->n << " m=" << r->m
        << (r->lambda ? " lambda=(" + r->lambda->to_string() + ")" : "") << '\n';
  return report.pass() ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Canonical bases of the level-1 q-Fock space and Jantzen sum formula checks",
               "fockdec"};
  app.require_subcommand(1);
  Config c;

  const std::vector<std::string> matrix_formats{"text", "json", "csv", "latex"};
  const std::vector<std::string> report_formats{"text", "json"};

  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", c.cache_dir,
                    "Matrix cache directory (default: $FOCKDEC_CACHE or .fockdec-cache)");
    sub->add_flag("--no-cache", c.no_cache, "Always recompute");
  };

  auto* decomp = app.add_subcommand("decomp", "Decomposition matrix D = (d_{lambda mu}(q))");
  auto* bar = app.add_subcommand("bar", "Bar-involution matrix A = (a_{lambda tau}(q))");
  for (auto* sub : {decomp, bar}) {
    sub->add_option("--n", c.n, "Modulus n >= 2")->required();
    sub->add_option("--m", c.m, "Size of partitions")->required();
    sub->add_option("--format", c.format)->check(CLI::IsMember(matrix_formats));
    add_cache(sub);
  }

  auto* schaper = app.add_subcommand("schaper", "Sum-formula vector compared with the Gabber-Joseph side for one partition");
  schaper->add_option("--n", c.n, "Modulus n >= 2")->required();
  schaper->add_option("--lambda", c.lambda, "Partition, e.g. 3,1,1")->required();
  schaper->add_option("--format", c.format)->check(CLI::IsMember(report_formats));
  add_cache(schaper);

  auto* gram = app.add_subcommand("gram", "Hecke-algebra Gram determinant of a Specht module");
  gram->add_option("--lambda", c.lambda, "Partition, e.g. 2,1")->required();
  gram->add_option("--n", c.n, "Single modulus (default: --n-set)");
  gram->add_option("--n-set", c.n_set, "Comma-separated moduli");
  gram->add_option("--format", c.format)->check(CLI::IsMember(report_formats));
  gram->add_option("--size-cap", c.size_cap, "Largest |lambda| accepted")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--m", c.m, "Single m (overrides --min-m/--max-m)");
  verify->add_option("--min-m", c.min_m)->capture_default_str();
  verify->add_option("--max-m", c.max_m)->capture_default_str();
  verify->add_option("--n-set", c.n_set, "Comma-separated moduli")->capture_default_str();
  verify->add_option("--suite", c.suites, "Restrict to these suites (repeatable)")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--format", c.format)->check(CLI::IsMember(report_formats));
  verify->add_option("--report", c.report_path, "Also write the JSON report here");
  verify->add_flag("--inject-fault", c.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*decomp) return cmd_matrix(c, true, out);
    if (*bar) return cmd_matrix(c, false, out);
    if (*schaper) return cmd_schaper(c, out);
    if (*gram) return cmd_gram(c, out);
    return cmd_verify(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace fockdec
