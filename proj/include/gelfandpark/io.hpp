#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gelfand.hpp"
#include "parking.hpp"
#include "polynomial.hpp"
#include "qcatalan.hpp"
#include "repthy.hpp"
#include "spherical.hpp"
#include "treepoly.hpp"

namespace gelfandpark::io {

using nlohmann::json;

inline json to_json(SmallSeq const& s) {
  json a = json::array();
  for (auto v : s) a.push_back(v);
  return a;
}

inline json to_json(WeightVector const& k) {
  json a = json::array();
  for (auto v : k.counts()) a.push_back(v);
  return a;
}

// [[exponent, coefficient], ...] as decimal strings, ascending exponent.
inline json to_json(SparsePolynomial const& p) {
  json a = json::array();
  for (auto const& [e, c] : p.terms()) a.push_back({e.str(), c.str()});
  return a;
}

inline SparsePolynomial polynomial_from_json(json const& a) {
  SparsePolynomial p;
  for (auto const& term : a)
    p.add_term(BigInt(term.at(0).get<std::string>()), BigInt(term.at(1).get<std::string>()));
  return p;
}

// [[[d_0, d_1, ...], coefficient], ...]
inline json to_json(DegreeTypePolynomial const& p) {
  json a = json::array();
  for (auto const& [t, c] : p.terms) a.push_back({t, c.str()});
  return a;
}

inline json to_json(std::vector<BigInt> const& v) {
  json a = json::array();
  for (auto const& x : v) a.push_back(x.str());
  return a;
}

inline json to_json(GelfandVerdict const& v) {
  json j{{"gamma", v.gamma}, {"n", v.n}, {"gelfand", v.gelfand}, {"suborbits", v.suborbits}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

inline json to_json(CensusResult const& c) {
  return {{"n", c.n}, {"real_count", c.real_count}, {"total", c.total}};
}

inline json to_json(AlphaComparison const& c) {
  json j{{"n", c.n},
         {"equal", c.equal},
         {"multiset_equal", c.multiset_equal},
         {"alpha", to_json(c.alpha)},
         {"v", to_json(c.v)}};
  j["first_divergence"] = c.first_divergence ? json(*c.first_divergence) : json(nullptr);
  return j;
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

inline std::string csv_quote(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// index,re,im
inline std::string cloud_csv(ValueCloud const& cloud) {
  std::ostringstream os;
  os << "index,re,im\n";
  for (auto const& p : cloud) os << p.index << ',' << format_double(p.re) << ',' << format_double(p.im) << '\n';
  return os.str();
}

// representative,size
inline std::string orbit_csv(std::vector<OrbitEntry> const& orbits) {
  std::ostringstream os;
  os << "representative,size\n";
  for (auto const& o : orbits) os << to_string(o.representative.entries) << ',' << o.size << '\n';
  return os.str();
}

// Rows are orbit representatives, columns partitions of n.
inline std::string multiplicity_csv(OrbitMultiplicityTable const& t) {
  std::ostringstream os;
  os << "orbit";
  for (auto const& mu : t.columns) os << ',' << csv_quote(to_string(mu));
  os << '\n';
  for (auto const& row : t.rows) {
    os << to_string(row.representative.entries);
    for (auto m : row.multiplicities) os << ',' << m;
    os << '\n';
  }
  return os.str();
}

// index,coefficient (1-based, ascending exponent)
inline std::string coefficients_csv(std::vector<BigInt> const& v) {
  std::ostringstream os;
  os << "index,coefficient\n";
  for (std::size_t i = 0; i < v.size(); ++i) os << i + 1 << ',' << v[i] << '\n';
  return os.str();
}

}  // namespace gelfandpark::io
