#ifndef ROOTLEN_JSON_IO_HPP
#define ROOTLEN_JSON_IO_HPP

#include "rootlen/length.hpp"
#include "rootlen/monoid.hpp"
#include "rootlen/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rootlen {

nlohmann::json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const nlohmann::json& j);

/// Facet list: alpha, canonical tau word, exact functional ("p/q" strings),
/// and the roots of the facet under "vertices".
nlohmann::json facets_to_json(const RootSystem& rs);

/// Re-checks the half-space certificate of an exported facet list: every root
/// lies in every half-space and each tightness set equals the listed vertices.
bool recheck_halfspace_certificate(const RootSystem& rs, const nlohmann::json& j,
                                   std::string* why = nullptr);

/// Standard parabolic faces (A in I): closure data, beta_A, roots, barycenter.
nlohmann::json faces_to_json(const RootSystem& rs);

nlohmann::json generator_report_to_json(const GeneratorReport& rep);

nlohmann::json length_result_to_json(const std::string& type, const LengthResult& r,
                                     const std::optional<long long>& positive);

nlohmann::json check_results_to_json(const std::vector<verify::CheckResult>& results);

} // namespace rootlen

#endif
