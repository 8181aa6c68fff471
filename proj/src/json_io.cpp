#include "rootlen/json_io.hpp"

#include "rootlen/errors.hpp"

#include <algorithm>
#include <set>

namespace rootlen {

using nlohmann::json;

json ratvec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

RatVec ratvec_from_json(const json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_string(x.get<std::string>()));
  return v;
}

json facets_to_json(const RootSystem& rs) {
  json out;
  out["type"] = rs.name();
  json list = json::array();
  for (const Facet& f : enumerate_facets(rs)) {
    json jf;
    jf["alpha"] = f.alpha;
    jf["tau"] = f.tau;
    jf["lambda"] = ratvec_to_json(f.lambda);
    jf["vertices"] = face_roots(rs, FaceSpec{{f.alpha}, f.tau});
    list.push_back(std::move(jf));
  }
  out["facets"] = std::move(list);
  return out;
}

bool recheck_halfspace_certificate(const RootSystem& rs, const json& j, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!j.contains("facets") || j["facets"].empty()) return fail("no facets in document");
  std::set<RatVec> seen;
  for (const auto& jf : j["facets"]) {
    RatVec lambda = ratvec_from_json(jf["lambda"]);
    if (!seen.insert(lambda).second) return fail("duplicate facet functional");
    std::set<LatticeVec> vertices;
    for (const auto& jv : jf["vertices"]) vertices.insert(jv.get<LatticeVec>());
    if (vertices.empty()) return fail("facet with no roots");
    for (const auto& b : rs.roots()) {
      Rat v = rs.pairing(lambda, b);
      if (v > 1) return fail("root outside a half-space");
      if ((v == 1) != (vertices.count(b) > 0)) return fail("tightness set mismatch");
    }
  }
  // the listed functionals must include every facet (count check)
  if (seen.size() != enumerate_facets(rs).size()) return fail("facet count mismatch");
  return true;
}

json faces_to_json(const RootSystem& rs) {
  json out;
  out["type"] = rs.name();
  json list = json::array();
  for (int mask = 1; mask < (1 << rs.rank()); ++mask) {
    std::vector<int> A;
    for (int i = 0; i < rs.rank(); ++i)
      if (mask & (1 << i)) A.push_back(i + 1);
    if (!in_I(rs, A)) continue;
    ClosureData cd = closure_data(rs, A);
    json jf;
    jf["A"] = A;
    jf["boundary"] = cd.boundary;
    jf["closure"] = cd.closure;
    jf["stab"] = cd.stab;
    jf["beta"] = cd.beta;
    jf["codim"] = A.size();
    jf["roots"] = face_roots(rs, FaceSpec{A, {}});
    jf["barycenter"] = ratvec_to_json(barycenter(rs, A));
    jf["orbit_size"] = (rs.weyl_order() / rs.parabolic_order(cd.stab)).str();
    list.push_back(std::move(jf));
  }
  out["faces"] = std::move(list);
  return out;
}

json generator_report_to_json(const GeneratorReport& rep) {
  json out;
  out["type"] = rep.type;
  out["facet"] = rep.alpha;
  out["generators"] = rep.generators;
  out["certificate"] = rep.certificate;
  out["level_bound"] = rep.level_bound;
  if (rep.certificate == "slab-exhaustive") out["stable_at_next_bound"] = rep.stable;
  return out;
}

json length_result_to_json(const std::string& type, const LengthResult& r,
                           const std::optional<long long>& positive) {
  json out;
  out["type"] = type;
  out["gamma"] = r.gamma;
  out["length"] = r.length;
  if (positive) out["positive_length"] = *positive;
  out["attaining"] = r.attaining;
  if (r.decomposition) out["decomposition"] = *r.decomposition;
  return out;
}

json check_results_to_json(const std::vector<verify::CheckResult>& results) {
  json out;
  json list = json::array();
  bool all = true;
  for (const auto& r : results) {
    json jr;
    jr["criterion"] = r.criterion;
    jr["name"] = r.name;
    jr["pass"] = r.pass;
    jr["notes"] = r.notes;
    all = all && r.pass;
    list.push_back(std::move(jr));
  }
  out["checks"] = std::move(list);
  out["pass"] = all;
  return out;
}

} // namespace rootlen
