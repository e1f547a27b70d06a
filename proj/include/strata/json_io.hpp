#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "strata/bordism.hpp"
#include "strata/classes.hpp"
#include "strata/strat.hpp"

namespace strata::io {

using Json = nlohmann::json;

Json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

/// {name?, dimension (empty complex only), facets} with sorted facets.
Json complex_to_json(const SimplicialComplex& K, const std::string& name = {});
SimplicialComplex complex_from_json(const Json& j);

/// Complex format plus skeleta (generators of X^0..X^{n−1}), boundary, classical, orientation.
Json filtered_to_json(const FilteredComplex& FX);
/// Missing skeleta give the trivial filtration.
FilteredComplex filtered_from_json(const Json& j);

Json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const Json& j);

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json homology_to_json(const std::vector<HomologyGroup>& groups);
Json report_to_json(const ValidationReport& R);
Json clause_to_json(const ClauseResult& c);
Json verdict_to_json(const ClassVerdict& v, bool with_links);

Json certificate_to_json(const BordismCertificate& C);
BordismCertificate certificate_from_json(const Json& j);
Json check_to_json(const CertificateCheck& c);

/// Compact dump with keys in sorted order.
std::string canonical(const Json& j);
/// FNV-1a 64-bit, as 16 hex digits.
std::string digest(const std::string& bytes);

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

}  // namespace strata::io
