#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epglab/epg.hpp"
#include "epglab/exports.hpp"
#include "epglab/isomorphism.hpp"
#include "epglab/metric.hpp"

namespace epglab {

/// Parse of a group spec string "sd:N" | "q:N" | "d:N" | "file:PATH".
struct GroupSpec {
  GroupFamily family = GroupFamily::Custom;
  int n = 0;
  std::string path;

  static GroupSpec parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw parameter_error("group spec must look like sd:N, q:N, d:N or file:PATH");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    GroupSpec spec;
    if (kind == "file") {
      spec.family = GroupFamily::Custom;
      spec.path = rest;
      if (rest.empty()) throw parameter_error("file: spec needs a path");
      return spec;
    }
    size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(rest, &pos);
    } catch (const std::exception&) {
      throw parameter_error("group spec parameter is not a number: " + rest);
    }
    if (pos != rest.size()) throw parameter_error("group spec parameter is not a number: " + rest);
    spec.n = n;
    if (kind == "sd")
      spec.family = GroupFamily::Semidihedral;
    else if (kind == "q")
      spec.family = GroupFamily::GeneralizedQuaternion;
    else if (kind == "d")
      spec.family = GroupFamily::Dihedral;
    else
      throw parameter_error("unknown group family: " + kind);
    return spec;
  }

  FiniteGroup build() const {
    switch (family) {
      case GroupFamily::Semidihedral: return make_semidihedral(n);
      case GroupFamily::GeneralizedQuaternion: return make_generalized_quaternion(n);
      case GroupFamily::Dihedral: return make_dihedral(n);
      case GroupFamily::Custom: {
        std::ifstream in(path);
        if (!in) throw parameter_error("cannot open group file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return load_cayley_table(buf.str());
      }
    }
    throw std::logic_error("unreachable family");
  }
};

enum class VerdictStatus { Pass, Fail, Skipped };

/// One closed-form-versus-computed comparison.
struct VerifyVerdict {
  std::string check;
  std::string expected;
  std::string computed;
  VerdictStatus status = VerdictStatus::Pass;
  std::string note;
};

struct VerifyOptions {
  int detour_cap = kDefaultDetourCap;
  int enum_cap = kDefaultEnumCap;
  int charpoly_cap = kDefaultCharpolyCap;
};

namespace detail {

inline const std::vector<std::string>& check_order() {
  static const std::vector<std::string> order = {
      "nbd",      "detour",    "dds",      "interior", "closure", "eccentric",
      "dimension", "resolving", "spectrum", "trees",    "decomposition"};
  return order;
}

inline std::vector<std::string> checks_for_family(GroupFamily family) {
  switch (family) {
    case GroupFamily::Semidihedral:
      return {"nbd",       "detour",    "dds",      "interior", "closure",
              "eccentric", "dimension", "resolving", "spectrum", "trees"};
    case GroupFamily::GeneralizedQuaternion:
    case GroupFamily::Dihedral:
      return {"spectrum", "trees", "decomposition"};
    default:
      return {};
  }
}

inline std::string set_to_string(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << '}';
  return out.str();
}

inline std::string spectrum_to_string(const SpectrumSummary& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.roots.size(); ++i) {
    if (i) out << ", ";
    out << s.roots[i].first << ':' << s.roots[i].second;
  }
  out << '}';
  if (s.residual.degree() > 0) out << " residual degree " << s.residual.degree();
  return out.str();
}

inline VerifyVerdict make_pass(const std::string& check, const std::string& expected,
                               const std::string& computed, const std::string& note = "") {
  return VerifyVerdict{check, expected, computed,
                       expected == computed ? VerdictStatus::Pass : VerdictStatus::Fail, note};
}

inline VerifyVerdict make_skip(const std::string& check, const std::string& why) {
  return VerifyVerdict{check, "", "", VerdictStatus::Skipped, why};
}

// --- semidihedral checks ---------------------------------------------------

inline VerifyVerdict check_sd_nbd(int n, const SimpleGraph& g) {
  int mismatches = 0;
  for (int v = 0; v < g.vcount(); ++v)
    if (g.closed_neighborhood(v) != sd_neighborhood_oracle(n, v)) ++mismatches;
  return make_pass("nbd", "all " + std::to_string(g.vcount()) + " neighborhoods match",
                   mismatches == 0
                       ? "all " + std::to_string(g.vcount()) + " neighborhoods match"
                       : std::to_string(mismatches) + " neighborhoods differ");
}

inline VerifyVerdict check_sd_detour(int n, const SimpleGraph& g, const VerifyOptions& opt) {
  const int m = g.vcount();
  if (m > opt.detour_cap)
    return make_skip("detour", "vertex count " + std::to_string(m) + " exceeds detour cap " +
                                   std::to_string(opt.detour_cap));
  std::ostringstream expected, computed;
  expected << "case table on ";
  computed << "case table on ";
  int pairs = 0, mismatches = 0;
  auto mat = all_pairs_detour(g, opt.detour_cap);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v, ++pairs)
      if (mat.at(u, v) != sd_detour_closed_form(n, u, v)) ++mismatches;
  auto prof = detour_profile_from_matrix(mat);
  expected << pairs << " pairs, rad_D=" << 4 * n + 1 << ", diam_D=" << 4 * n + 3;
  computed << pairs - mismatches << " pairs, rad_D=" << prof.radius
           << ", diam_D=" << prof.diameter;
  auto v = make_pass("detour", expected.str(), computed.str());
  if (m > kDetourDpLimit) v.note = "branch-and-bound band";
  return v;
}

inline VerifyVerdict check_sd_dds(int n, const SimpleGraph& g, const VerifyOptions& opt) {
  const int m = g.vcount();
  if (m > opt.detour_cap)
    return make_skip("dds", "vertex count " + std::to_string(m) + " exceeds detour cap " +
                                std::to_string(opt.detour_cap));
  auto prof = detour_profile(g, opt.detour_cap);
  int bad_dds = 0, bad_deg = 0;
  for (int v = 0; v < m; ++v) {
    if (prof.dds[v] != sd_dds_closed_form(n, v)) ++bad_dds;
    if (prof.detour_degree[v] != sd_detour_degree_closed_form(n, v)) ++bad_deg;
  }
  BigRational expected_av(8 * n * n - n - 1, 2 * n);
  std::ostringstream expected, computed;
  expected << "all dds rows and detour degrees match, D_av=" << rational_string(expected_av);
  computed << (bad_dds == 0 && bad_deg == 0 ? "all dds rows and detour degrees match"
                                            : std::to_string(bad_dds) + " dds rows and " +
                                                  std::to_string(bad_deg) +
                                                  " detour degrees differ")
           << ", D_av=" << rational_string(prof.average_degree);
  return make_pass("dds", expected.str(), computed.str());
}

inline VerifyVerdict check_sd_interior(int n, const SimpleGraph& g, const VerifyOptions& opt) {
  const int m = g.vcount();
  DistanceMatrix dmat;
  std::string note;
  if (m <= opt.detour_cap) {
    dmat = all_pairs_detour(g, opt.detour_cap);
    note = "detour distances from the exact engine";
  } else {
    dmat = sd_detour_closed_form_matrix(n);
    note = "detour distances from the closed form (vertex count exceeds detour cap " +
           std::to_string(opt.detour_cap) + ")";
  }
  auto rep = boundary_interior(g, dmat);
  std::vector<int> expected_interior{0, 2 * n};
  bool interior_ok = rep.interior == expected_interior &&
                     rep.interior_subgraph.same_edges(complete(2));
  std::vector<int> expected_complete;
  for (int v = 0; v < m; ++v)
    if (v != 0 && v != 2 * n) expected_complete.push_back(v);
  bool complete_ok = rep.complete == expected_complete;
  auto v = make_pass("interior", "Int = K_2 on {e, a^2n}; complete = all others",
                     (interior_ok ? std::string("Int = K_2 on {e, a^2n}")
                                  : "Int = " + set_to_string(rep.interior)) +
                         (complete_ok ? "; complete = all others"
                                      : "; complete = " + set_to_string(rep.complete)));
  v.note = note + "; geodesic interior is K_1 on {e}";
  return v;
}

inline VerifyVerdict check_sd_closure(const SimpleGraph& g) {
  bool fixed = closure(g).same_edges(g);
  return make_pass("closure", "Cl(g) = g", fixed ? "Cl(g) = g" : "closure added edges");
}

inline VerifyVerdict check_sd_eccentric(const SimpleGraph& g) {
  auto ecc = eccentric_vertices(g);
  std::vector<int> expected;
  for (int v = 1; v < g.vcount(); ++v) expected.push_back(v);
  return make_pass("eccentric", "V \\ {e}",
                   ecc == expected ? "V \\ {e}" : set_to_string(ecc));
}

inline std::vector<int> sd_paper_witness(int n) {
  // R = {a^{2i}b : 1<=i<=2n-1} u {a^i : i != 1, 2n, 4n} u {a^{2i+1}b : 0<=i<=n-1}
  std::vector<int> witness;
  for (int i = 1; i <= 2 * n - 1; ++i) witness.push_back(4 * n + 2 * i);
  for (int i = 2; i <= 4 * n - 1; ++i)
    if (i != 2 * n) witness.push_back(i);
  for (int i = 0; i <= n - 1; ++i) witness.push_back(4 * n + 2 * i + 1);
  std::sort(witness.begin(), witness.end());
  return witness;
}

inline VerifyVerdict check_sd_dimension(int n, const SimpleGraph& g) {
  if (g.vcount() > 32)
    return make_skip("dimension", "vertex count " + std::to_string(g.vcount()) +
                                      " exceeds dimension search limit 32");
  auto dist = all_pairs_geodesic(g);
  auto witness = sd_paper_witness(n);
  bool witness_ok = is_resolving(g, witness, dist);
  int lb = twin_lower_bound(twin_classes(g));
  MetricDimensionResult result;
  try {
    result = metric_dimension(g);
  } catch (const capacity_error& e) {
    return make_skip("dimension", e.what());
  }
  std::ostringstream expected, computed;
  expected << "dim = " << 7 * n - 4 << ", twin bound = " << 7 * n - 4
           << ", paper witness resolves";
  computed << "dim = " << result.dimension << ", twin bound = " << lb << ", paper witness "
           << (witness_ok ? "resolves" : "does not resolve");
  return make_pass("dimension", expected.str(), computed.str());
}

inline VerifyVerdict check_sd_resolving(int n, const SimpleGraph& g, const VerifyOptions& opt) {
  if (g.vcount() > opt.enum_cap)
    return make_skip("resolving", "vertex count " + std::to_string(g.vcount()) +
                                      " exceeds enumeration cap " + std::to_string(opt.enum_cap));
  auto rep = resolving_counts(g, opt.enum_cap);
  auto closed = sd_resolving_polynomial_closed_form(n);
  std::vector<int> mismatched;
  for (int i = 0; i <= g.vcount(); ++i)
    if (rep.counts[i] != closed[i]) mismatched.push_back(i);
  auto cov = sd_resolving_branch_coverage(n);
  std::ostringstream expected, computed, note;
  expected << "closed-form coefficients for i = " << 7 * n - 4 << ".." << 8 * n;
  if (mismatched.empty()) {
    computed << "closed-form coefficients for i = " << 7 * n - 4 << ".." << 8 * n;
  } else {
    computed << "brute force differs at";
    for (int i : mismatched)
      computed << " i=" << i << " (" << rep.counts[i].str() << " vs " << closed[i].str() << ")";
  }
  note << "branch coverage of [" << 7 * n - 4 << "," << 8 * n - 2 << "]: ";
  if (!cov.uncovered.empty()) note << cov.uncovered.size() << " uncovered, ";
  if (!cov.overlapping.empty())
    note << cov.overlapping.size() << " overlapping ("
         << (cov.disagreeing.empty() ? "values agree" : "values disagree") << ")";
  else
    note << "disjoint";
  auto v = make_pass("resolving", expected.str(), computed.str());
  v.note = note.str();
  if (!cov.disagreeing.empty()) v.status = VerdictStatus::Fail;
  return v;
}

// --- shared spectrum/tree checks -------------------------------------------

inline VerifyVerdict check_spectrum(SpectrumFamily family, int n, const SimpleGraph& g,
                                    const VerifyOptions& opt) {
  if (g.vcount() > opt.charpoly_cap)
    return make_skip("spectrum", "vertex count " + std::to_string(g.vcount()) +
                                     " exceeds charpoly cap " + std::to_string(opt.charpoly_cap));
  auto expected_spectrum = closed_form_spectrum(family, n);
  auto charpoly = laplacian_charpoly(g, opt.charpoly_cap);
  auto spectrum = integer_spectrum_of_charpoly(charpoly, g.vcount());
  bool poly_ok = charpoly == expand_spectrum(expected_spectrum);
  std::string exp = spectrum_to_string(expected_spectrum) + ", charpoly equal";
  std::string got = spectrum_to_string(spectrum) + (poly_ok ? ", charpoly equal" : ", charpoly differs");
  return make_pass("spectrum", exp, got);
}

inline VerifyVerdict check_trees(SpectrumFamily family, int n, const SimpleGraph& g,
                                 const VerifyOptions& opt) {
  BigInt expected = closed_form_tree_count(family, n);
  BigInt kirchhoff = spanning_tree_count(g);
  std::string note;
  std::string got = kirchhoff.str();
  if (g.vcount() <= opt.charpoly_cap) {
    auto spectrum = integer_spectrum(g, opt.charpoly_cap);
    if (spectrum.fully_integer()) {
      BigInt from_spectrum = tree_count_from_spectrum(spectrum, g.vcount());
      if (from_spectrum != kirchhoff) got += " (eigenvalue product gives " + from_spectrum.str() + ")";
      else note = "Kirchhoff determinant and eigenvalue product agree";
    }
  }
  auto v = make_pass("trees", expected.str(), got);
  v.note = note;
  return v;
}

inline VerifyVerdict check_decomposition(const GroupSpec& spec, const FiniteGroup& group,
                                         const SimpleGraph& g) {
  if (g.vcount() > 64)
    return make_skip("decomposition", "vertex count " + std::to_string(g.vcount()) +
                                          " exceeds isomorphism limit 64");
  int n = spec.n;
  SimpleGraph model(0);
  std::string model_name;
  std::string note;
  if (spec.family == GroupFamily::GeneralizedQuaternion) {
    model = join(complete(2), disjoint_union(complete(2 * n - 2), copies(n, complete(2))));
    model_name = "K_2 v (K_" + std::to_string(2 * n - 2) + " u " + std::to_string(n) + "K_2)";
    note = "clique part uses 2n-2 = " + std::to_string(2 * n - 2) +
           " (the printed K_{n-2} does not account for all 4n vertices)";
  } else {
    model = join(complete(1), disjoint_union(complete(n - 1), edgeless(n)));
    model_name =
        "K_1 v (K_" + std::to_string(n - 1) + " u complement(K_" + std::to_string(n) + "))";
  }
  bool iso = is_isomorphic(g, model).has_value();
  std::string exp = "EPG isomorphic to " + model_name;
  std::string got = iso ? exp : "EPG not isomorphic to " + model_name;
  if (spec.family == GroupFamily::GeneralizedQuaternion && (n & (n - 1)) == 0) {
    bool pg_equal = power_graph(group).same_edges(g);
    exp += "; power graph = EPG";
    got += pg_equal ? "; power graph = EPG" : "; power graph differs from EPG";
  }
  auto v = make_pass("decomposition", exp, got);
  v.note = note;
  return v;
}

}  // namespace detail

/// One verdict per requested check, in canonical check order.
inline std::vector<VerifyVerdict> cmd_verify(const GroupSpec& spec,
                                             const std::vector<std::string>& checks,
                                             const VerifyOptions& opt = {}) {
  auto valid = detail::checks_for_family(spec.family);
  if (valid.empty())
    throw parameter_error("no closed-form checks exist for custom groups");
  for (const auto& c : checks) {
    if (std::find(detail::check_order().begin(), detail::check_order().end(), c) ==
        detail::check_order().end())
      throw parameter_error("unknown check name: " + c);
    if (std::find(valid.begin(), valid.end(), c) == valid.end())
      throw parameter_error("check '" + c + "' is not available for this group family");
  }
  FiniteGroup group = spec.build();
  SimpleGraph g = enhanced_power_graph(group);
  SpectrumFamily sf = spec.family == GroupFamily::Semidihedral ? SpectrumFamily::SD
                      : spec.family == GroupFamily::GeneralizedQuaternion ? SpectrumFamily::Q
                                                                          : SpectrumFamily::D;
  std::vector<VerifyVerdict> verdicts;
  for (const auto& name : detail::check_order()) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    if (name == "nbd") verdicts.push_back(detail::check_sd_nbd(spec.n, g));
    else if (name == "detour") verdicts.push_back(detail::check_sd_detour(spec.n, g, opt));
    else if (name == "dds") verdicts.push_back(detail::check_sd_dds(spec.n, g, opt));
    else if (name == "interior") verdicts.push_back(detail::check_sd_interior(spec.n, g, opt));
    else if (name == "closure") verdicts.push_back(detail::check_sd_closure(g));
    else if (name == "eccentric") verdicts.push_back(detail::check_sd_eccentric(g));
    else if (name == "dimension") verdicts.push_back(detail::check_sd_dimension(spec.n, g));
    else if (name == "resolving") verdicts.push_back(detail::check_sd_resolving(spec.n, g, opt));
    else if (name == "spectrum") verdicts.push_back(detail::check_spectrum(sf, spec.n, g, opt));
    else if (name == "trees") verdicts.push_back(detail::check_trees(sf, spec.n, g, opt));
    else if (name == "decomposition")
      verdicts.push_back(detail::check_decomposition(spec, group, g));
  }
  return verdicts;
}

inline std::vector<std::string> all_checks_for(const GroupSpec& spec) {
  return detail::checks_for_family(spec.family);
}

/// Deterministic report rendering; throws parameter_error for invalid
/// what/format combinations.
inline std::string cmd_report(const GroupSpec& spec, const std::string& what,
                              const std::string& format, bool oracle_only,
                              const VerifyOptions& opt = {}) {
  auto require_sd = [&](const char* feature) {
    if (spec.family != GroupFamily::Semidihedral)
      throw parameter_error(std::string(feature) + " closed forms exist only for sd:N specs");
  };
  if (what == "graph") {
    SimpleGraph g = enhanced_power_graph(spec.build());
    if (format == "dot") return to_dot(g);
    if (format == "json") return graph_to_json(g).dump(2) + "\n";
    throw parameter_error("graph reports support formats dot and json");
  }
  if (what == "distant") {
    SimpleGraph g = enhanced_power_graph(spec.build());
    auto m = all_pairs_geodesic(g);
    if (format == "csv") return distance_matrix_to_csv(m, g.labels());
    if (format == "json") return distance_matrix_to_json(m, g.labels()).dump(2) + "\n";
    throw parameter_error("distant reports support formats csv and json");
  }
  if (what == "detour") {
    SimpleGraph g = enhanced_power_graph(spec.build());
    DistanceMatrix m;
    if (oracle_only) {
      require_sd("detour");
      m = sd_detour_closed_form_matrix(spec.n);
    } else {
      m = all_pairs_detour(g, opt.detour_cap);
    }
    if (format == "csv") return distance_matrix_to_csv(m, g.labels());
    if (format == "json")
      return detour_profile_to_json(detour_profile_from_matrix(m), g.labels()).dump(2) + "\n";
    throw parameter_error("detour reports support formats csv and json");
  }
  if (what == "resolving") {
    if (format != "json") throw parameter_error("resolving reports support format json");
    SimpleGraph g = enhanced_power_graph(spec.build());
    if (oracle_only) {
      require_sd("resolving");
      ResolvingReport rep;
      rep.polynomial = sd_resolving_polynomial_closed_form(spec.n);
      rep.dimension = 7 * spec.n - 4;
      rep.counts.assign(g.vcount() + 1, 0);
      for (int i = 0; i <= g.vcount(); ++i) rep.counts[i] = rep.polynomial[i];
      rep.twins = twin_classes(g);
      return resolving_report_to_json(rep).dump(2) + "\n";
    }
    return resolving_report_to_json(resolving_counts(g, opt.enum_cap)).dump(2) + "\n";
  }
  if (what == "spectrum") {
    if (format != "json") throw parameter_error("spectrum reports support format json");
    if (oracle_only) {
      if (spec.family == GroupFamily::Custom)
        throw parameter_error("spectrum closed forms exist only for sd/q/d specs");
      SpectrumFamily sf = spec.family == GroupFamily::Semidihedral ? SpectrumFamily::SD
                          : spec.family == GroupFamily::GeneralizedQuaternion ? SpectrumFamily::Q
                                                                              : SpectrumFamily::D;
      auto spectrum = closed_form_spectrum(sf, spec.n);
      return spectrum_to_json(expand_spectrum(spectrum), spectrum,
                              closed_form_tree_count(sf, spec.n))
                 .dump(2) +
             "\n";
    }
    SimpleGraph g = enhanced_power_graph(spec.build());
    auto charpoly = laplacian_charpoly(g, opt.charpoly_cap);
    auto spectrum = integer_spectrum_of_charpoly(charpoly, g.vcount());
    return spectrum_to_json(charpoly, spectrum, spanning_tree_count(g)).dump(2) + "\n";
  }
  throw parameter_error("unknown report kind: " + what);
}

/// Group summary; with orders, one line per element.
inline std::string cmd_group(const GroupSpec& spec, bool orders) {
  FiniteGroup g = spec.build();
  std::ostringstream out;
  out << "order " << g.order << ", maximal cyclic subgroups "
      << maximal_cyclic_subgroups(g).size() << "\n";
  if (orders) {
    for (int x = 0; x < g.order; ++x)
      out << x << ' ' << g.labels[x] << ' ' << element_order(g, x) << "\n";
  }
  return out.str();
}

inline const char* status_word(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::Fail: return "FAIL";
    default: return "SKIP";
  }
}

/// Entry point shared by the binary and the tests.
/// Exit codes: 0 all checks pass, 1 any check fails, 2 usage or capacity error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"enhanced power graph laboratory"};
  app.require_subcommand(1);

  std::string spec_text;
  std::vector<std::string> check_names;
  bool all_checks = false;
  VerifyOptions opt;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--detour-cap", opt.detour_cap, "detour engine vertex cap");
    cmd->add_option("--enum-cap", opt.enum_cap, "resolving enumeration vertex cap");
    cmd->add_option("--charpoly-cap", opt.charpoly_cap, "characteristic polynomial vertex cap");
  };

  auto* verify = app.add_subcommand("verify", "compare closed forms against brute force");
  verify->add_option("spec", spec_text, "group spec: sd:N | q:N | d:N | file:PATH")->required();
  verify->add_flag("--all", all_checks, "run every check available for the family");
  verify->add_option("--check", check_names, "run the named check (repeatable)");
  add_caps(verify);

  std::string what, format = "json", out_path;
  bool oracle_only = false;
  auto* report = app.add_subcommand("report", "export graphs, matrices and summaries");
  report->add_option("spec", spec_text, "group spec")->required();
  report->add_option("what", what, "graph | distant | detour | resolving | spectrum")->required();
  report->add_option("--format", format, "json | csv | dot");
  report->add_option("-o,--output", out_path, "write to file instead of stdout");
  report->add_flag("--oracle-only", oracle_only, "closed forms only, no brute force");
  add_caps(report);

  bool orders = false;
  auto* group_cmd = app.add_subcommand("group", "group facts");
  group_cmd->add_option("spec", spec_text, "group spec")->required();
  group_cmd->add_flag("--orders", orders, "list element orders");

  try {
    std::vector<const char*> argv;
    argv.push_back("epglab");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    GroupSpec spec = GroupSpec::parse(spec_text);
    if (verify->parsed()) {
      std::vector<std::string> checks = check_names;
      if (all_checks || checks.empty()) checks = all_checks_for(spec);
      auto verdicts = cmd_verify(spec, checks, opt);
      bool any_fail = false;
      for (const auto& v : verdicts) {
        out << '[' << status_word(v.status) << "] " << v.check;
        if (v.status == VerdictStatus::Skipped) {
          out << ": " << v.note << "\n";
          continue;
        }
        out <<": expected " << v.expected << "; computed " << v.computed;
        if (!v.note.empty()) out << " (" << v.note << ")";
        out << "\n";
        if (v.status == VerdictStatus::Fail) any_fail = true;
      }
      return any_fail ? 1 : 0;
    }
    if (report->parsed()) {
      std::string rendered = cmd_report(spec, what, format, oracle_only, opt);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw parameter_error("cannot write output file: " + out_path);
        file << rendered;
      } else {
        out << rendered;
      }
      return 0;
    }
    out << cmd_group(spec, orders);
    return 0;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const parameter_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace epglab
