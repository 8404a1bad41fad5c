// gelfandpark: command-line front end for the parking-function / Gelfand-pair
// library. Exit status: 0 success, 1 a mathematical check failed, 2 usage
// error, 3 budget exceeded.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef GELFANDPARK_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <gelfandpark/gelfandpark.hpp>
#include <gelfandpark/io.hpp>

namespace gp = gelfandpark;
using gp::io::json;

namespace {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::size_t n = 0;
  std::size_t r = 0;
  std::string gamma;
  std::string k;
  std::string format;  // empty: the command's natural format
  std::string out;
  std::string kind = "parking";
  bool full = false;
  bool ballot = false;
  bool every_point = false;
  bool all_tuples = false;
  gp::Budget budget;
  unsigned workers = gp::default_workers();
};

// Collected output of one command.
struct Output {
  std::string text;
  int status = kOk;
};

Output json_out(json const& j, int status = kOk) { return {j.dump(2) + "\n", status}; }

std::string effective_format(RunConfig const& cfg, std::string const& natural) {
  std::string f = cfg.format.empty() ? natural : cfg.format;
  if (f != "json" && f != "csv") throw gp::invalid_input("--format must be json or csv");
  return f;
}

void require_n(RunConfig const& cfg) {
  if (cfg.n == 0) throw gp::invalid_input("--n is required and must be >= 1");
}

// ---------------------------------------------------------------------------
// park

Output park_enumerate(RunConfig const& cfg) {
  require_n(cfg);
  std::vector<gp::SmallSeq> seqs;
  if (cfg.kind == "parking") {
    for (auto const& a : gp::enumerate_parking_functions(cfg.n)) seqs.push_back(a.entries);
  } else if (cfg.kind == "ballot") {
    for (auto const& b : gp::enumerate_ballot_sequences(cfg.n)) seqs.push_back(b.entries);
  } else if (cfg.kind == "multiset") {
    for (auto const& m : gp::enumerate_zero_sum_multisets(cfg.n)) seqs.push_back(m.residues);
  } else {
    throw gp::invalid_input("--kind must be parking, ballot or multiset");
  }
  if (effective_format(cfg, "json") == "csv") {
    std::string s = "sequence\n";
    for (auto const& q : seqs) {
      for (std::size_t i = 0; i < q.size(); ++i) s += (i ? " " : "") + std::to_string(q[i]);
      s += "\n";
    }
    return {s};
  }
  json a = json::array();
  for (auto const& q : seqs) a.push_back(gp::io::to_json(q));
  return json_out(a);
}

Output park_orbits(RunConfig const& cfg) {
  require_n(cfg);
  auto const orbits = gp::orbit_decomposition(cfg.n);
  if (effective_format(cfg, "json") == "csv") return {gp::io::orbit_csv(orbits)};
  json a = json::array();
  for (auto const& o : orbits)
    a.push_back({{"representative", gp::io::to_json(o.representative.entries)}, {"size", o.size}});
  return json_out(a);
}

Output park_pollak(RunConfig const& cfg) {
  require_n(cfg);
  gp::CosetSpace const space(gp::make_group(gp::GroupSpec::cyclic(static_cast<std::uint32_t>(cfg.n + 1))), cfg.n);
  std::vector<char> hit(space.size(), 0);
  json rows = json::array();
  std::string csv = "parking_function,coset_index,coset\n";
  for (auto const& a : gp::enumerate_parking_functions(cfg.n)) {
    auto const x = gp::pollak_map(a);
    if (gp::pollak_inverse(x) != a) throw gp::invariant_violation("pollak round trip failed");
    std::uint64_t const idx = space.index(x);
    if (hit[idx]++) throw gp::invariant_violation("pollak map is not injective");
    rows.push_back({{"parking_function", gp::io::to_json(a.entries)}, {"coset_index", idx}, {"coset", x}});
    std::string xs;
    for (auto v : x) xs += std::to_string(v);
    csv += gp::to_string(a.entries) + "," + std::to_string(idx) + "," + xs + "\n";
  }
  if (effective_format(cfg, "json") == "csv") return {csv};
  return json_out(rows);
}

// ---------------------------------------------------------------------------
// qcat

Output qcat_poly(RunConfig const& cfg) {
  require_n(cfg);
  auto const p = cfg.ballot ? gp::sq_polynomial(cfg.n) : gp::cq_polynomial(cfg.n);
  if (effective_format(cfg, "json") == "csv") {
    std::string s = "exponent,coefficient\n";
    for (auto const& [e, c] : p.terms()) s += e.str() + "," + c.str() + "\n";
    return {s};
  }
  return json_out(gp::io::to_json(p));
}

Output qcat_conjecture(RunConfig const& cfg) {
  require_n(cfg);
  auto const c = gp::verify_conjecture(cfg.n);
  json j{{"n", cfg.n}, {"holds", c.holds}};
  if (c.first_exponent) {
    j["first_exponent"] = c.first_exponent->str();
    j["c_coefficient"] = c.c_coefficient.str();
    j["s_coefficient"] = c.s_coefficient.str();
  } else {
    j["first_exponent"] = nullptr;
  }
  effective_format(cfg, "json");
  return json_out(j, c.holds ? kOk : kCheckFailed);
}

Output qcat_identity(RunConfig const& cfg) {
  require_n(cfg);
  if (cfg.r == 0) throw gp::invalid_input("--r is required and must be >= 1");
  auto const c = gp::check_r_power_identity(cfg.n, cfg.r, cfg.budget);
  effective_format(cfg, "json");
  return json_out({{"n", cfg.n}, {"r", cfg.r}, {"holds", c.holds}, {"sum", c.sum.str()},
                   {"expected", c.expected.str()}},
                  c.holds ? kOk : kCheckFailed);
}

Output qcat_stats(RunConfig const& cfg) {
  require_n(cfg);
  auto const st = gp::poly_stats(cfg.ballot ? gp::sq_polynomial(cfg.n) : gp::cq_polynomial(cfg.n));
  if (effective_format(cfg, "json") == "csv") return {gp::io::coefficients_csv(st.coefficients)};
  return json_out({{"n", cfg.n},
                   {"value_at_one", st.value_at_one.str()},
                   {"derivative_at_one", st.derivative_at_one.str()},
                   {"coefficients", gp::io::to_json(st.coefficients)}});
}

// ---------------------------------------------------------------------------
// rep

Output rep_decompose(RunConfig const& cfg) {
  require_n(cfg);
  std::size_t const r = cfg.r == 0 ? cfg.n + 1 : cfg.r;
  auto const ks = gp::induced_decomposition(cfg.n, r, !cfg.full, cfg.budget);
  if (effective_format(cfg, "json") == "csv") {
    std::string s = "k,dimension\n";
    for (auto const& k : ks) s += gp::io::csv_quote(k.to_string()) + "," + gp::module_dimension(k).str() + "\n";
    return {s};
  }
  json a = json::array();
  for (auto const& k : ks) a.push_back({{"k", gp::io::to_json(k)}, {"dimension", gp::module_dimension(k).str()}});
  return json_out(a);
}

Output rep_multiplicity(RunConfig const& cfg) {
  if (cfg.k.empty()) throw gp::invalid_input("--k is required");
  auto const k = gp::WeightVector::parse(cfg.k);
  if (cfg.n != 0 && cfg.n != k.n())
    throw gp::invalid_input("sum of --k entries must equal --n");
  auto const m = gp::multiplicity_in_induced(k, !cfg.full);
  effective_format(cfg, "json");
  return json_out({{"k", gp::io::to_json(k)}, {"quotient", !cfg.full}, {"multiplicity", m}});
}

Output rep_table(RunConfig const& cfg) {
  require_n(cfg);
  auto const t = gp::orbit_multiplicity_table(static_cast<std::uint32_t>(cfg.n));
  if (effective_format(cfg, "csv") == "csv") return {gp::io::multiplicity_csv(t)};
  json rows = json::array();
  for (auto const& row : t.rows) {
    json m = json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) m[gp::to_string(t.columns[c])] = row.multiplicities[c];
    rows.push_back({{"orbit", gp::to_string(row.representative.entries)}, {"multiplicities", m}});
  }
  return json_out(rows);
}

// ---------------------------------------------------------------------------
// spherical

Output spherical_census(RunConfig const& cfg) {
  require_n(cfg);
  auto const c = gp::realness_census(cfg.n, cfg.every_point, cfg.workers);
  effective_format(cfg, "json");
  return json_out(gp::io::to_json(c));
}

Output spherical_cloud(RunConfig const& cfg) {
  if (cfg.k.empty()) throw gp::invalid_input("--k is required");
  auto const given = gp::WeightVector::parse(cfg.k);
  if (cfg.n != 0 && cfg.n != given.n()) throw gp::invalid_input("sum of --k entries must equal --n");
  // A short k is padded with zero counts, by default up to r = n + 1.
  std::size_t const r = cfg.r != 0 ? cfg.r : std::max(given.r(), given.n() + 1);
  if (given.r() > r) throw gp::invalid_input("--k has more than --r entries");
  auto const k = given.padded(r);
  auto const cloud = gp::value_cloud(k, cfg.budget, cfg.workers, cfg.all_tuples);
  if (effective_format(cfg, "csv") == "csv") return {gp::io::cloud_csv(cloud)};
  json a = json::array();
  for (auto const& p : cloud) a.push_back({p.index, p.re == 0.0 ? 0.0 : p.re, p.im == 0.0 ? 0.0 : p.im});
  return json_out(a);
}

Output spherical_crosscheck(RunConfig const& cfg) {
  require_n(cfg);
  auto const r = static_cast<std::uint32_t>(cfg.r == 0 ? cfg.n + 1 : cfg.r);
  gp::WreathProduct const w(gp::make_group(gp::GroupSpec::cyclic(r)), cfg.n);
  gp::CosetSpace const space(w.gamma(), cfg.n);
  auto const ks = gp::enumerate_weight_vectors(cfg.n, r);
  std::size_t checked = 0, mismatches = 0;
  for (auto const& k : ks)
    for (std::uint64_t xi = 0; xi < space.size(); ++xi)
      for (auto const& sigma : gp::all_perms(cfg.n)) {
        gp::WreathElement const x{space.point(xi), sigma};
        ++checked;
        if (!(gp::zonal_via_definition(k, x) == gp::zonal_value(k, x.gamma_part))) ++mismatches;
      }
  effective_format(cfg, "json");
  return json_out({{"n", cfg.n}, {"r", r}, {"k_count", ks.size()}, {"evaluations", checked},
                   {"mismatches", mismatches}, {"agree", mismatches == 0}},
                  mismatches == 0 ? kOk : kCheckFailed);
}

// ---------------------------------------------------------------------------
// gelfand

std::optional<json> cache_lookup(std::string const& key) {
  char const* dir = std::getenv("GELFANDPARK_CACHE");
  if (!dir || !*dir) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / key);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (json::exception const&) {
    return std::nullopt;
  }
}

void cache_store(std::string const& key, json const& value) {
  char const* dir = std::getenv("GELFANDPARK_CACHE");
  if (!dir || !*dir) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream(std::filesystem::path(dir) / key) << value.dump() << "\n";
}

json gelfand_verdict(std::string const& gamma_spec, std::size_t n, RunConfig const& cfg) {
  auto const spec = gp::GroupSpec::parse(gamma_spec);
  std::string key = "gelfand_" + spec.to_string() + "_n" + std::to_string(n) + ".json";
  for (char& c : key)
    if (c == '(' || c == ')' || c == ',') c = '_';
  if (auto hit = cache_lookup(key)) return *hit;
  auto const v = gp::is_gelfand_pair(gp::make_group(spec, cfg.budget), n, cfg.budget, cfg.workers);
  json j = gp::io::to_json(v);
  cache_store(key, j);
  return j;
}

Output gelfand_check(RunConfig const& cfg) {
  require_n(cfg);
  if (cfg.gamma.empty()) throw gp::invalid_input("--gamma is required");
  effective_format(cfg, "json");
  return json_out(gelfand_verdict(cfg.gamma, cfg.n, cfg));
}

struct TableRow {
  std::string gamma;
  std::size_t max_n;
};
std::vector<TableRow> const kGapTable = {{"S3", 6}, {"A4", 4}, {"GL(2,3)", 3}, {"SL(3,2)", 3}};

std::string describe(std::vector<std::size_t> const& ns, bool prefix_from_two) {
  if (ns.empty()) return "";
  bool contiguous = prefix_from_two && ns.front() == 2;
  for (std::size_t i = 1; i < ns.size(); ++i) contiguous = contiguous && ns[i] == ns[i - 1] + 1;
  if (ns.size() == 1) return "n=" + std::to_string(ns[0]);
  if (contiguous) return "n<=" + std::to_string(ns.back());
  std::string s;
  for (auto v : ns) s += (s.empty() ? "n=" : ";n=") + std::to_string(v);
  return s;
}

Output gelfand_table(RunConfig const& cfg) {
  std::string csv = "group,true,false\n";
  json rows = json::array();
  for (auto const& row : kGapTable) {
    std::vector<std::size_t> yes, no;
    json verdicts = json::array();
    for (std::size_t n = 2; n <= row.max_n; ++n) {
      json const v = gelfand_verdict(row.gamma, n, cfg);
      (v.at("gelfand").get<bool>() ? yes : no).push_back(n);
      verdicts.push_back(v);
    }
    csv += gp::io::csv_quote(row.gamma) + "," + describe(yes, true) + "," + describe(no, false) + "\n";
    rows.push_back({{"gamma", row.gamma}, {"verdicts", verdicts}});
  }
  if (effective_format(cfg, "csv") == "csv") return {csv};
  return json_out(rows);
}

// ---------------------------------------------------------------------------
// tree

Output tree_poly(RunConfig const& cfg) {
  require_n(cfg);
  auto const p = gp::s_polynomial(cfg.n);
  if (effective_format(cfg, "json") == "csv") {
    std::string s = "monomial,coefficient\n";
    for (auto const& [t, c] : p.terms) {
      std::string m;
      for (std::size_t i = 0; i < t.size(); ++i) m += (i ? " " : "") + std::to_string(t[i]);
      s += m + "," + c.str() + "\n";
    }
    return {s};
  }
  return json_out(gp::io::to_json(p));
}

Output tree_compare(RunConfig const& cfg) {
  require_n(cfg);
  auto const c = gp::compare_with_alpha(cfg.n);
  effective_format(cfg, "json");
  return json_out(gp::io::to_json(c));
}

// ---------------------------------------------------------------------------
// repro: recompute the published numbers and compare against embedded values.

struct ReproLine {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass() const { return expected == computed; }
};

std::string join(std::vector<gp::BigInt> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Output repro(RunConfig const& cfg) {
  std::vector<ReproLine> lines;
  auto add = [&](std::string check, std::string expected, std::string computed) {
    lines.push_back({std::move(check), std::move(expected), std::move(computed)});
  };
  add("parking functions n=3", "16", std::to_string(gp::enumerate_parking_functions(3).size()));
  {
    std::string orbits;
    for (auto const& o : gp::orbit_decomposition(3))
      orbits += (orbits.empty() ? "" : " ") + gp::to_string(o.representative.entries) + ":" + std::to_string(o.size);
    add("S3 orbits on parking functions", "111:1 112:3 113:3 122:3 123:6", orbits);
  }
  {
    std::string d3;
    for (auto const& k : gp::enumerate_weight_vectors(3, 4)) {
      std::string s;
      for (auto v : k.counts()) s += std::to_string(v);
      d3 += (d3.empty() ? "" : " ") + s;
    }
    // Stored in the library's colexicographic order.
    add("D(3)", "3000 0210 1020 1101 0012", d3);
  }
  add("C_3(q)", "q + 3q^3 + q^6", gp::cq_polynomial(3).to_string());
  add("C_4(q)", "q + 4q^4 + 2q^6 + 6q^12 + q^24", gp::cq_polynomial(4).to_string());
  add("alpha(7)", "(1,7,7,7,21,42,21,56,105,35,35,70,21,1)", join(gp::poly_stats(gp::cq_polynomial(7)).coefficients));
  add("v_4", "(1,3,1)", join(gp::coefficient_vector(gp::s_polynomial(4))));
  add("v_8", "(1,7,7,7,21,42,21,21,35,105,35,35,70,21,1)", join(gp::coefficient_vector(gp::s_polynomial(8))));
  add("s_4", "t0^3 t3 + 3 t0^2 t1 t2 + t0 t1^3", gp::s_polynomial(4).to_string());
  {
    std::string agree;
    for (std::size_t n = 1; n <= 7; ++n) agree += gp::compare_with_alpha(n).equal ? "1" : "0";
    add("v_{n+1} == alpha(n) for n=1..7", "1111110", agree);
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const st = gp::poly_stats(gp::cq_polynomial(n));
    add("C_" + std::to_string(n) + "(1), C'_" + std::to_string(n) + "(1)",
        gp::catalan(n).str() + "," + gp::power(n + 1, n - 1).str(),
        st.value_at_one.str() + "," + st.derivative_at_one.str());
  }
  {
    std::string held;
    for (std::size_t n = 1; n <= 10; ++n) held += gp::verify_conjecture(n).holds ? "1" : "0";
    add("C_n(q) == S_n(q) for n=1..10", "1111111111", held);
  }
  {
    std::string census;
    for (std::size_t n = 2; n <= 5; ++n)
      census += (census.empty() ? "" : ",") + std::to_string(gp::realness_census(n, false, cfg.workers).real_count);
    add("real zonal functions n=2..5", "2,3,6,10", census);
  }
  {
    auto const t = gp::orbit_multiplicity_table(3);
    std::string s;
    for (auto const& row : t.rows) {
      s += (s.empty() ? "" : " ") + gp::to_string(row.representative.entries) + ":";
      for (auto m : row.multiplicities) s += std::to_string(m);
    }
    // Columns (3), (2,1), (1,1,1).
    add("pf(3) multiplicity table", "111:100 112:110 113:110 122:110 123:121", s);
  }
  for (auto const& row : kGapTable) {
    std::string verdicts;
    for (std::size_t n = 2; n <= row.max_n; ++n)
      verdicts += gelfand_verdict(row.gamma, n, cfg).at("gelfand").get<bool>() ? "T" : "F";
    std::string expected = std::string(row.max_n - 2, 'T') + "F";
    add("Gelfand " + row.gamma + " n=2.." + std::to_string(row.max_n), expected, verdicts);
  }
  bool all = true;
  for (auto const& l : lines) all = all && l.pass();
  int const status = all ? kOk : kCheckFailed;
  if (effective_format(cfg, "csv") == "csv") {
    std::string s = "check,expected,computed,pass\n";
    for (auto const& l : lines)
      s += gp::io::csv_quote(l.check) + "," + gp::io::csv_quote(l.expected) + "," +
           gp::io::csv_quote(l.computed) + "," + (l.pass() ? "true" : "false") + "\n";
    return {s, status};
  }
  json a = json::array();
  for (auto const& l : lines)
    a.push_back({{"check", l.check}, {"expected", l.expected}, {"computed", l.computed}, {"pass", l.pass()}});
  return json_out(a, status);
}

// ---------------------------------------------------------------------------

void emit(Output const& o, RunConfig const& cfg) {
  if (cfg.out.empty()) {
    std::cout << o.text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw gp::invalid_input("cannot open --out path: " + cfg.out);
  f << o.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions, q-Catalan polynomials, zonal spherical functions and Gelfand pairs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Output(RunConfig const&)> action;

  enum Flag : unsigned { N = 1, R = 2, Gamma = 4, K = 8, Full = 16, Ballot = 32, Kind = 64, Every = 128, Tuples = 256 };

  auto leaf = [&](CLI::App* parent, std::string name, std::string help, unsigned flags,
                  Output (*fn)(RunConfig const&)) {
    auto* sub = parent->add_subcommand(std::move(name), std::move(help));
    if (flags & N) sub->add_option("--n", cfg.n, "Length / degree n")->check(CLI::Range(1, 1000));
    if (flags & R) sub->add_option("--r", cfg.r, "Cyclic order r")->check(CLI::Range(1, 1000));
    if (flags & Gamma) sub->add_option("--gamma", cfg.gamma, "Group spec: Z4, S3, A4, GL(2,3), SL(3,2)");
    if (flags & K) sub->add_option("--k", cfg.k, "Weight vector as a comma list, e.g. 0,0,0,2,3");
    if (flags & Full) sub->add_flag("--full", cfg.full, "Use the full wreath product instead of the quotient");
    if (flags & Ballot) sub->add_flag("--ballot", cfg.ballot, "Use S_n(q) (ballot sequences) instead of C_n(q)");
    if (flags & Kind) sub->add_option("--kind", cfg.kind, "parking | ballot | multiset")->check(CLI::IsMember({"parking", "ballot", "multiset"}));
    if (flags & Every) sub->add_flag("--every-point", cfg.every_point, "Visit every coset point instead of one per S_n-orbit");
    if (flags & Tuples) sub->add_flag("--all-tuples", cfg.all_tuples, "One row per tuple of Z_r^n instead of per coset");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Write output to this path instead of stdout");
    sub->add_option("--budget-points", cfg.budget.points, "Maximum coset points")->check(CLI::PositiveNumber);
    sub->add_option("--budget-elements", cfg.budget.elements, "Maximum group elements / compositions")->check(CLI::PositiveNumber);
    sub->add_option("--budget-seconds", cfg.budget.seconds, "Wall-clock limit per verdict")->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "Worker threads for data-parallel sections")->check(CLI::Range(1u, 1024u));
    sub->callback([&action, fn] { action = fn; });
  };

  auto* park = app.add_subcommand("park", "Parking functions")->require_subcommand(1);
  leaf(park, "enumerate", "List parking functions, ballot sequences or zero-sum multisets", N | Kind, park_enumerate);
  leaf(park, "orbits", "S_n-orbits of parking functions", N, park_orbits);
  leaf(park, "pollak", "Pollak bijection to Z_{n+1}^n / diagonal", N, park_pollak);

  auto* qcat = app.add_subcommand("qcat", "q-Catalan polynomials")->require_subcommand(1);
  leaf(qcat, "poly", "C_n(q) (or S_n(q) with --ballot)", N | Ballot, qcat_poly);
  leaf(qcat, "conjecture", "Compare C_n(q) with S_n(q)", N, qcat_conjecture);
  leaf(qcat, "identity", "Check r^{n-1} = sum of multinomials", N | R, qcat_identity);
  leaf(qcat, "stats", "Value and derivative at 1, coefficient vector", N | Ballot, qcat_stats);

  auto* rep = app.add_subcommand("rep", "Representations of Z_r wr S_n")->require_subcommand(1);
  leaf(rep, "decompose", "Constituents of the induced trivial representation", N | R | Full, rep_decompose);
  leaf(rep, "multiplicity", "Multiplicity of CM(k) in the induced representation", N | K | Full, rep_multiplicity);
  leaf(rep, "table", "S_n multiplicity table of parking-function orbits", N, rep_table);

  auto* sph = app.add_subcommand("spherical", "Zonal spherical functions")->require_subcommand(1);
  leaf(sph, "census", "Count real-valued zonal spherical functions", N | Every, spherical_census);
  leaf(sph, "cloud", "Values of one zonal spherical function at every coset", N | R | K | Tuples, spherical_cloud);
  leaf(sph, "crosscheck", "Compare the character-average and monomial formulas", N | R, spherical_crosscheck);

  auto* gel = app.add_subcommand("gelfand", "Gelfand pair decisions")->require_subcommand(1);
  leaf(gel, "check", "Decide (Gamma wr S_n, diag x S_n)", N | Gamma, gelfand_check);
  leaf(gel, "table", "Reproduce the four-group verdict table", 0, gelfand_table);

  auto* tree = app.add_subcommand("tree", "Plane-tree degree polynomials")->require_subcommand(1);
  leaf(tree, "poly", "s_n over rooted plane trees", N, tree_poly);
  leaf(tree, "compare", "Compare v_{n+1} with the coefficients of C_n(q)", N, tree_compare);

  leaf(&app, "repro", "Recompute every published value and report mismatches", 0, repro);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output const o = action(cfg);
    emit(o, cfg);
    return o.status;
  } catch (gp::budget_exceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (gp::invalid_input const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (gp::invariant_violation const& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kCheckFailed;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
