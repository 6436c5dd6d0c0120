#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "fockdec/canonical.hpp"
#include "fockdec/schaper.hpp"

namespace fockdec {

using Json = nlohmann::ordered_json;

/// {"-1": 1, "3": 2}: exponent -> coefficient with string keys. Coefficients
/// outside the int64 range are written as decimal strings.
Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// [{"partition": [3, 2], "coefficient": "q + q^-1"}, ...] in ReverseLex order.
Json fock_to_json(const FockVector& v);
FockVector fock_from_json(const Json& j);

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"n": .., "m": .., "order": [[parts]...], "entries": [[polystring]...]}
Json matrix_to_json(const PartitionMatrix& a);
PartitionMatrix matrix_from_json(const Json& j);

/// Header row of quoted partition labels, then one row per partition with
/// canonical polynomial strings.
std::string matrix_to_csv(const PartitionMatrix& a);
/// Needs n, since the CSV body carries only the order and the entries.
PartitionMatrix matrix_from_csv(std::string_view text, int n);

/// LaTeX tabular body; output only.
std::string matrix_to_latex(const PartitionMatrix& a);

/// Fixed-width table for terminals.
std::string matrix_to_text(const PartitionMatrix& a);

/// {"basis": "specht"|"simple", "coords": [{"partition": [...], "coefficient": c}]}
template <ClassBasis B>
Json classes_to_json(const GrothendieckVector<B>& v);

/// TeX rendering of a polynomial, e.g. "q^{-1} - q + 2q^{3}".
std::string laurent_to_latex(const LaurentPoly& f);

}  // namespace fockdec
