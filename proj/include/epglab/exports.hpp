#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "epglab/detour.hpp"
#include "epglab/distance.hpp"
#include "epglab/graph.hpp"
#include "epglab/resolving.hpp"
#include "epglab/spectra.hpp"

namespace epglab {

// nlohmann's default json keeps object keys sorted, which is what the
// byte-identical-output contract needs.
using json = nlohmann::json;

/// DOT rendering: one node line per vertex with its label, then each edge once
/// as `i -- j` with i < j, ascending by (i, j).
inline std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph epg {\n";
  for (int v = 0; v < g.vcount(); ++v)
    out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (int i = 0; i < g.vcount(); ++i)
    for (int j = i + 1; j < g.vcount(); ++j)
      if (g.adjacent(i, j)) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

/// Adjacency as sorted neighbor lists.
inline json graph_to_json(const SimpleGraph& g) {
  json adjacency = json::array();
  for (int v = 0; v < g.vcount(); ++v) adjacency.push_back(g.neighbors(v));
  return json{{"labels", g.labels()}, {"adjacency", adjacency}};
}

/// CSV distance matrix: header row of vertex labels, then one row per vertex.
inline std::string distance_matrix_to_csv(const DistanceMatrix& m,
                                          const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "vertex";
  for (const auto& l : labels) out << ',' << l;
  out << '\n';
  for (int u = 0; u < m.vcount; ++u) {
    out << labels[u];
    for (int v = 0; v < m.vcount; ++v) {
      out << ',';
      if (m.reachable(u, v))
        out << m.at(u, v);
      else
        out << "inf";
    }
    out << '\n';
  }
  return out.str();
}

inline json distance_matrix_to_json(const DistanceMatrix& m,
                                    const std::vector<std::string>& labels) {
  json rows = json::array();
  for (int u = 0; u < m.vcount; ++u) {
    json row = json::array();
    for (int v = 0; v < m.vcount; ++v) row.push_back(m.at(u, v));
    rows.push_back(std::move(row));
  }
  return json{{"kind", m.kind == DistanceKind::Geodesic ? "geodesic" : "detour"},
              {"labels", labels},
              {"matrix", rows}};
}

inline std::string rational_string(const BigRational& r) {
  return BigInt(boost::multiprecision::numerator(r)).str() + "/" +
         BigInt(boost::multiprecision::denominator(r)).str();
}

/// Detour profile with exact rationals rendered as "p/q".
inline json detour_profile_to_json(const DetourProfile& p,
                                   const std::vector<std::string>& labels) {
  json vertices = json::array();
  for (size_t v = 0; v < p.ecc.size(); ++v) {
    vertices.push_back(json{{"label", labels[v]},
                            {"ecc", p.ecc[v]},
                            {"detour_degree", p.detour_degree[v]},
                            {"dds", p.dds[v]}});
  }
  return json{{"radius", p.radius},
              {"diameter", p.diameter},
              {"degree_sequence", p.degree_sequence},
              {"average_degree", rational_string(p.average_degree)},
              {"vertices", vertices}};
}

inline const char* twin_kind_name(TwinKind k) {
  switch (k) {
    case TwinKind::True: return "true";
    case TwinKind::False: return "false";
    default: return "singleton";
  }
}

/// {dim, r: [[i, "count"]...], twin_classes, polynomial (lowest degree first)}
inline json resolving_report_to_json(const ResolvingReport& rep) {
  json r = json::array();
  for (size_t i = rep.dimension; i < rep.counts.size(); ++i)
    r.push_back(json::array({int(i), rep.counts[i].str()}));
  json twins = json::array();
  for (const auto& c : rep.twins)
    twins.push_back(json{{"kind", twin_kind_name(c.kind)}, {"members", c.members}});
  return json{{"dim", rep.dimension},
              {"r", r},
              {"twin_classes", twins},
              {"polynomial", rep.polynomial.coefficient_strings()}};
}

/// {charpoly, spectrum: [[lambda, mult]...], residual, trees} with every big
/// number rendered as a decimal string.
inline json spectrum_to_json(const IntPolynomial& charpoly, const SpectrumSummary& spectrum,
                             const BigInt& trees) {
  json roots = json::array();
  for (const auto& [lambda, mult] : spectrum.roots)
    roots.push_back(json::array({lambda, mult}));
  return json{{"charpoly", charpoly.coefficient_strings()},
              {"spectrum", roots},
              {"residual", spectrum.residual.coefficient_strings()},
              {"trees", trees.str()}};
}

}  // namespace epglab
