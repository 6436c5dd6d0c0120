#include "fockdec/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdec {

Json laurent_to_json(const LaurentPoly& f) {
  Json j = Json::object();
  for (const auto& [e, c] : f.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = c.get_si();
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly f;
  for (const auto& [key, value] : j.items()) {
    const int e = std::stoi(key);
    if (value.is_number_integer())
      f.add_term(e, Integer(value.get<long>()));
    else if (value.is_string())
      f.add_term(e, Integer(value.get<std::string>()));
    else
      throw std::invalid_argument("polynomial coefficient must be an integer");
  }
  return f;
}

Json partition_to_json(const Partition& lambda) {
  return Json(lambda.parts());
}

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json fock_to_json(const FockVector& v) {
  Json j = Json::array();
  for (const auto& [lambda, c] : v.terms())
    j.push_back({{"partition", partition_to_json(lambda)},
                 {"coefficient", c.to_string()}});
  return j;
}

FockVector fock_from_json(const Json& j) {
  FockVector v;
  for (const auto& term : j)
    v.add(partition_from_json(term.at("partition")),
          LaurentPoly::parse(term.at("coefficient").get<std::string>()));
  return v;
}

Json matrix_to_json(const PartitionMatrix& a) {
  Json order = Json::array();
  for (const auto& lambda : a.order) order.push_back(partition_to_json(lambda));
  Json entries = Json::array();
  for (const auto& row : a.entries) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    entries.push_back(std::move(r));
  }
  return Json{{"n", a.n}, {"m", a.m}, {"order", order}, {"entries", entries}};
}

PartitionMatrix matrix_from_json(const Json& j) {
  PartitionMatrix a;
  a.n = j.at("n").get<int>();
  a.m = j.at("m").get<int>();
  for (const auto& p : j.at("order")) a.order.push_back(partition_from_json(p));
  for (const auto& row : j.at("entries")) {
    a.entries.emplace_back();
    for (const auto& x : row)
      a.entries.back().push_back(LaurentPoly::parse(x.get<std::string>()));
  }
  if (a.entries.size() != a.order.size())
    throw std::invalid_argument("matrix JSON: row count does not match order");
  for (const auto& row : a.entries)
    if (row.size() != a.order.size())
      throw std::invalid_argument("matrix JSON: ragged entries");
  if (a.order != partitions_of(a.m))
    throw std::invalid_argument("matrix JSON: order is not the canonical "
                                "partition order for m");
  return a;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) throw std::invalid_argument("CSV: unbalanced quote");
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::string matrix_to_csv(const PartitionMatrix& a) {
  std::ostringstream out;
  out << "\"\"";
  for (const auto& lambda : a.order) out << ",\"" << lambda.to_string() << '"';
  out << '\n';
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    out << '"' << a.order[r].to_string() << '"';
    for (const auto& x : a.entries[r]) out << ',' << x.to_string();
    out << '\n';
  }
  return out.str();
}

PartitionMatrix matrix_from_csv(std::string_view text, int n) {
  PartitionMatrix a;
  a.n = n;
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw std::invalid_argument("CSV: empty input");
  const auto header = split_csv_line(lines[0]);
  for (std::size_t i = 1; i < header.size(); ++i)
    a.order.push_back(Partition::parse(header[i]));
  a.m = a.order.empty() ? 0 : a.order.front().size();
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_csv_line(lines[r]);
    if (fields.size() != header.size())
      throw std::invalid_argument("CSV: row width differs from header");
    if (!(Partition::parse(fields[0]) == a.order[r - 1]))
      throw std::invalid_argument("CSV: row label out of order");
    a.entries.emplace_back();
    for (std::size_t i = 1; i < fields.size(); ++i)
      a.entries.back().push_back(LaurentPoly::parse(fields[i]));
  }
  if (a.entries.size() != a.order.size())
    throw std::invalid_argument("CSV: row count does not match header");
  if (a.order != partitions_of(a.m))
    throw std::invalid_argument("CSV: header is not the canonical order");
  return a;
}

std::string laurent_to_latex(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    Integer magnitude = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "q";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string matrix_to_latex(const PartitionMatrix& a) {
  std::ostringstream out;
  out << "\\begin{tabular}{c|" << std::string(a.dimension(), 'c') << "}\n";
  for (const auto& lambda : a.order)
    out << " & $(" << lambda.to_string() << ")$";
  out << " \\\\\n\\hline\n";
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    out << "$(" << a.order[r].to_string() << ")$";
    for (const auto& x : a.entries[r])
      out << " & " << (x.is_zero() ? std::string("$\\cdot$")
                                   : "$" + laurent_to_latex(x) + "$");
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string matrix_to_text(const PartitionMatrix& a) {
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back();
  cells.back().push_back("n=" + std::to_string(a.n) + " m=" + std::to_string(a.m));
  for (const auto& lambda : a.order) cells.back().push_back("(" + lambda.to_string() + ")");
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    cells.emplace_back();
    cells.back().push_back("(" + a.order[r].to_string() + ")");
    for (const auto& x : a.entries[r])
      cells.back().push_back(x.is_zero() ? "." : x.to_string());
  }
  std::vector<std::size_t> width(a.dimension() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i] << std::string(width[i] - row[i].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

template <ClassBasis B>
Json classes_to_json(const GrothendieckVector<B>& v) {
  Json coords = Json::array();
  for (const auto& [lambda, c] : v.coords()) {
    Json coefficient = c.fits_slong_p() ? Json(c.get_si()) : Json(c.get_str());
    coords.push_back({{"partition", partition_to_json(lambda)},
                      {"coefficient", coefficient}});
  }
  return Json{{"basis", B == ClassBasis::specht ? "specht" : "simple"},
              {"coords", coords}};
}

template Json classes_to_json(const SpechtClasses&);
template Json classes_to_json(const SimpleClasses&);

}  // namespace fockdec
