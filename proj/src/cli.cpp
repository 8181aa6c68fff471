#include "rootlen/cli.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/json_io.hpp"
#include "rootlen/length.hpp"
#include "rootlen/monoid.hpp"
#include "rootlen/oracle.hpp"
#include "rootlen/verify.hpp"

#include <CLI11.hpp>

#include <numeric>
#include <sstream>

namespace rootlen {

namespace {

// "B3" or "A2xB3" or bare family "B" with a separate rank
std::vector<RootSystem> parse_components(const std::string& type, int rank) {
  std::vector<RootSystem> comps;
  std::stringstream ss(type);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    if (token.empty()) throw InvalidInput("empty type token in '" + type + "'");
    if (token.size() == 1) {
      if (rank <= 0)
        throw InvalidInput("type '" + token + "' needs --rank (or embed it, e.g. B3)");
      comps.push_back(RootSystem::build(
          static_cast<char>(std::toupper(static_cast<unsigned char>(token[0]))), rank));
    } else {
      auto [f, l] = parse_type_token(token);
      comps.push_back(RootSystem::build(f, l));
    }
  }
  if (comps.empty()) throw InvalidInput("no type given");
  if (comps.size() > 1 && rank > 0)
    throw InvalidInput("--rank is only meaningful with a single bare family letter");
  return comps;
}

std::string product_name(const std::vector<RootSystem>& comps) {
  std::string name;
  for (const auto& rs : comps) name += (name.empty() ? "" : "x") + rs.name();
  return name;
}

LatticeVec parse_gamma(const std::string& csv, int expected_rank) {
  LatticeVec g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      g.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("malformed coordinate '" + tok + "' in --gamma");
    }
  }
  if (static_cast<int>(g.size()) != expected_rank)
    throw InvalidInput("--gamma has " + std::to_string(g.size()) + " coordinates, expected " +
                       std::to_string(expected_rank));
  return g;
}

// integer weight coordinates -> root coordinates; must land in R
LatticeVec weight_to_root_basis(const RootSystem& rs, const LatticeVec& c) {
  RatVec v(rs.rank(), 0);
  for (int i = 1; i <= rs.rank(); ++i) v = add(v, scale(rs.weight(i), Rat(c[i - 1])));
  LatticeVec out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!is_integer(v[i]))
      throw InvalidInput("weight-basis input is not in the root lattice");
    out[i] = static_cast<Coord>(Int(rat_num(v[i])));
  }
  return out;
}

struct SplitGamma {
  std::vector<LatticeVec> parts; // per component, in root coordinates
  bool nonneg = true;
};

SplitGamma split_gamma(const std::vector<RootSystem>& comps, const LatticeVec& g,
                       const std::string& basis) {
  SplitGamma out;
  std::size_t off = 0;
  for (const auto& rs : comps) {
    LatticeVec part(g.begin() + off, g.begin() + off + rs.rank());
    if (basis == "weight") part = weight_to_root_basis(rs, part);
    for (Coord c : part) out.nonneg = out.nonneg && c >= 0;
    out.parts.push_back(std::move(part));
    off += rs.rank();
  }
  return out;
}

int total_rank(const std::vector<RootSystem>& comps) {
  int r = 0;
  for (const auto& rs : comps) r += rs.rank();
  return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rootlen: lengths of root-lattice elements and root-polytope data"};
  app.require_subcommand(1);

  std::string type, gamma_csv, basis = "root", suite = "all";
  int rank = 0, facet_alpha = 0;
  std::string route = "auto";
  verify::Options vopt;
  bool with_decomposition = false;
  long long gen_bound = 7;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "irreducible type (B3) or product (A2xB3)")->required();
    cmd->add_option("--rank", rank, "rank when --type is a bare family letter");
  };

  CLI::App* c_length = app.add_subcommand("length", "minimal number of roots summing to gamma");
  add_type(c_length);
  c_length->add_option("--gamma", gamma_csv, "comma-separated coordinates")->required();
  c_length->add_option("--basis", basis, "coordinate basis of --gamma: root|weight")
      ->check(CLI::IsMember({"root", "weight"}));
  c_length->add_flag("--decompose", with_decomposition, "include a minimal decomposition");

  CLI::App* c_dec = app.add_subcommand("decompose", "a minimal partition of gamma into roots");
  add_type(c_dec);
  c_dec->add_option("--gamma", gamma_csv)->required();
  c_dec->add_option("--basis", basis)->check(CLI::IsMember({"root", "weight"}));

  CLI::App* c_pos =
      app.add_subcommand("positive-length", "minimal number of positive roots summing to gamma");
  add_type(c_pos);
  c_pos->add_option("--gamma", gamma_csv)->required();
  c_pos->add_option("--basis", basis)->check(CLI::IsMember({"root", "weight"}));

  CLI::App* c_facets = app.add_subcommand("facets", "facet functionals and their roots");
  add_type(c_facets);

  CLI::App* c_faces = app.add_subcommand("faces", "standard parabolic faces F(A), A in I");
  add_type(c_faces);

  CLI::App* c_gen =
      app.add_subcommand("generators", "proper minimal generators of a coordinate facet");
  add_type(c_gen);
  c_gen->add_option("--facet", facet_alpha, "maximal simple root index alpha")->required();
  c_gen->add_option("--level-bound", gen_bound, "slab level bound (default 7)");
  c_gen->add_option("--route", route, "slab|criterion|auto")
      ->check(CLI::IsMember({"slab", "criterion", "auto"}));

  CLI::App* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->add_option("--suite", suite, "length-oracle|intro|theoremB|normality|"
                                         "integral-closure|typeA|typeC|strictness|geometry|"
                                         "lattice|all");
  c_verify->add_option("--max-rank", vopt.max_rank, "restrict checked ranks");
  c_verify->add_option("--level-bound", vopt.level_bound, "generator slab bound (default 7)");
  c_verify->add_option("--closure-bound", vopt.closure_bound,
                       "normality/closure bound (default 4)");
  c_verify->add_option("--samples", vopt.samples, "sampled points per rank-4 box (default 500)");
  c_verify->add_option("--seed", vopt.seed, "sampling seed");

  std::vector<const char*> argv;
  argv.push_back("rootlen");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*c_length || *c_dec || *c_pos) {
      auto comps = parse_components(type, rank);
      LatticeVec g = parse_gamma(gamma_csv, total_rank(comps));
      SplitGamma sg = split_gamma(comps, g, basis);

      if (*c_pos) {
        long long total = 0;
        for (std::size_t k = 0; k < comps.size(); ++k)
          total += positive_length(comps[k], sg.parts[k]); // throws unless in R+
        nlohmann::json j;
        j["type"] = product_name(comps);
        j["gamma"] = g;
        j["positive_length"] = total;
        out << j.dump(2) << "\n";
        return 0;
      }

      // length / decompose: componentwise, decomposition re-embedded
      long long total = 0;
      std::vector<LatticeVec> parts;
      nlohmann::json jcomp = nlohmann::json::array();
      std::size_t off = 0;
      bool have_positive = sg.nonneg;
      long long pos_total = 0;
      bool want_dec = *c_dec || with_decomposition;
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const RootSystem& rs = comps[k];
        LengthResult r = length(rs, sg.parts[k]);
        total += r.length;
        if (want_dec)
          for (const auto& b : decompose(rs, sg.parts[k])) {
            LatticeVec full(g.size(), 0);
            std::copy(b.begin(), b.end(), full.begin() + off);
            parts.push_back(std::move(full));
          }
        if (have_positive) {
          // optional enrichment here; the positive-length subcommand is the
          // strict entry point and reports cap violations as errors
          try {
            pos_total += positive_length(rs, sg.parts[k]);
          } catch (const CapExceeded& e) {
            err << "note: positive length omitted: " << e.what() << "\n";
            have_positive = false;
          }
        }
        if (comps.size() > 1) {
          nlohmann::json jc;
          jc["type"] = rs.name();
          jc["gamma"] = sg.parts[k];
          jc["length"] = r.length;
          jc["attaining"] = r.attaining;
          jcomp.push_back(std::move(jc));
        }
        off += rs.rank();
      }

      if (comps.size() == 1) {
        LengthResult r = length(comps[0], sg.parts[0]);
        if (want_dec) r.decomposition = parts;
        nlohmann::json j = length_result_to_json(
            comps[0].name(), r,
            have_positive ? std::optional<long long>(pos_total) : std::nullopt);
        if (basis == "weight") j["gamma_weight"] = g;
        out << j.dump(2) << "\n";
        return 0;
      }
      nlohmann::json j;
      j["type"] = product_name(comps);
      {
        LatticeVec converted;
        for (const auto& part : sg.parts) converted.insert(converted.end(), part.begin(), part.end());
        j["gamma"] = converted;
      }
      if (basis == "weight") j["gamma_weight"] = g;
      j["length"] = total;
      if (have_positive) j["positive_length"] = pos_total;
      j["components"] = std::move(jcomp);
      if (want_dec) j["decomposition"] = parts;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_facets || *c_faces || *c_gen) {
      auto comps = parse_components(type, rank);
      if (comps.size() != 1)
        throw InvalidInput("this subcommand needs a single irreducible type");
      const RootSystem& rs = comps[0];
      if (*c_facets) out << facets_to_json(rs).dump(2) << "\n";
      if (*c_faces) out << faces_to_json(rs).dump(2) << "\n";
      if (*c_gen) {
        GeneratorRoute r = route == "slab"        ? GeneratorRoute::Slab
                           : route == "criterion" ? GeneratorRoute::Criterion
                                                  : GeneratorRoute::Auto;
        out << generator_report_to_json(proper_minimal_generators(rs, facet_alpha, gen_bound, r))
                   .dump(2)
            << "\n";
      }
      return 0;
    }

    if (*c_verify) {
      auto results = verify::run_suite(suite, vopt);
      bool all = true;
      for (const auto& r : results) {
        err << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << "\n";
        for (const auto& n : r.notes) err << "       " << n << "\n";
        all = all && r.pass;
      }
      out << check_results_to_json(results).dump(2) << "\n";
      return all ? 0 : 1;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace rootlen
