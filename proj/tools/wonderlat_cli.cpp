// Batch front end: load catalog lattices, run any operation, emit
// machine-readable reports. Exit codes: 0 success, 1 mathematical
// refutation, 2 usage error, 3 cap reached / inconclusive.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "wonderlat/acceptance.hpp"
#include "wonderlat/hvectors.hpp"
#include "wonderlat/json_io.hpp"

using namespace wlat;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kRefuted = 1, kUsage = 2, kInconclusive = 3 };

struct Options {
  std::string format = "text";
  std::string lattice;
  bool full_support = false;
  std::string pair, divisor, shift, subset, family, orbit_case, triple;
  long n_max = 5;
  std::string dim_cap, ht_bound;
};

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kUsage);
}

DivisorVec parse_divisor(const WonderfulLattice& L, const std::string& expr) {
  DivisorVec d = L.zero_divisor();
  if (expr.empty() || expr == "0") return d;
  std::size_t pos = 0;
  while (pos < expr.size()) {
    std::size_t next = expr.find('+', pos);
    std::string term = expr.substr(pos, next == std::string::npos ? next : next - pos);
    std::size_t i = 0;
    long coeff = 1;
    if (i < term.size() && std::isdigit(term[i])) {
      coeff = std::stol(term.substr(i));
      while (i < term.size() && std::isdigit(term[i])) ++i;
    }
    if (i >= term.size()) usage_error("cannot parse divisor term '" + term + "'");
    d[L.color_index(term.substr(i))] += coeff;
    pos = next == std::string::npos ? expr.size() : next + 1;
  }
  return d;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// rows with fixed columns back the tsv and text renderings; the json carries
// the same data
struct Report {
  json body;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.body.dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
      std::cout << rep.columns[i] << (i + 1 < rep.columns.size() ? "\t" : "\n");
    for (auto& row : rep.rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << row[i] << (i + 1 < row.size() ? "\t" : "\n");
    return;
  }
  // text
  for (auto& row : rep.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << rep.columns[i] << "=" << row[i];
    }
    std::cout << "\n";
  }
}

std::string vec_str(const IVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string divisor_str(const WonderfulLattice& L, const DivisorVec& d) {
  std::string s;
  for (int i = 0; i < L.n_colors(); ++i) {
    if (d[i] == 0) continue;
    if (d[i] > 0 && !s.empty()) s += "+";
    if (d[i] == -1)
      s += "-";
    else if (d[i] != 1)
      s += std::to_string(d[i]);
    s += L.colors[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of wonderful varieties"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: json, tsv or text")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--dim-cap", opt.dim_cap, "multiplicity oracle dimension cap");
  app.add_option("--ht-bound", opt.ht_bound, "covering enumeration height bound");

  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", opt.lattice, "catalog id, e.g. model:E8")->required();
  };
  CLI::App* c_catalog = app.add_subcommand("catalog", "emit a lattice document");
  add_lattice(c_catalog);
  CLI::App* c_covers = app.add_subcommand("covers", "covering differences");
  add_lattice(c_covers);
  c_covers->add_flag("--full-support", opt.full_support);
  CLI::App* c_2ht = app.add_subcommand("check-2ht", "test ht(gamma+) <= 2");
  add_lattice(c_2ht);
  CLI::App* c_low = app.add_subcommand("low-triples", "low fundamental triples");
  add_lattice(c_low);
  c_low->add_flag("--full-support", opt.full_support);
  CLI::App* c_vt = app.add_subcommand("verify-triple", "leaf verdict of one triple");
  add_lattice(c_vt);
  c_vt->add_option("--triple", opt.triple, "D;E;F as divisor expressions")->required();
  CLI::App* c_surj = app.add_subcommand("surjectivity", "multiplication certificate");
  add_lattice(c_surj);
  c_surj->add_option("--pair", opt.pair, "two divisors, comma separated")->required();
  CLI::App* c_min = app.add_subcommand("minuscule", "minimality of a divisor");
  add_lattice(c_min);
  c_min->add_option("--divisor", opt.divisor)->required();
  CLI::App* c_dist = app.add_subcommand("distinguished", "distinguished subset test");
  add_lattice(c_dist);
  c_dist->add_option("--subset", opt.subset, "colors, comma separated")->required();
  CLI::App* c_orbit = app.add_subcommand("orbit-verdict", "normality of orbit closures");
  c_orbit->add_option("--case", opt.orbit_case, "roman numeral, default all");
  CLI::App* c_ring = app.add_subcommand("coord-ring", "graded decomposition");
  add_lattice(c_ring);
  c_ring->add_option("--divisor", opt.divisor)->required();
  c_ring->add_option("--shift", opt.shift);
  c_ring->add_option("--n-max", opt.n_max);
  CLI::App* c_ident = app.add_subcommand("identities", "invariant-vector identity table");
  c_ident->add_option("--family", opt.family, "prefix filter, e.g. comodel-E8");
  app.add_subcommand("acceptance", "run the acceptance suite");
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (!opt.dim_cap.empty()) setenv("WONDERLAT_DIM_CAP", opt.dim_cap.c_str(), 1);
  if (!opt.ht_bound.empty()) setenv("WONDERLAT_HT_BOUND", opt.ht_bound.c_str(), 1);

  try {
    if (app.got_subcommand("catalog")) {
      WonderfulLattice L = catalog(opt.lattice);
      std::cout << to_json(L).dump(2) << "\n";
      return kOk;
    }
    if (app.got_subcommand("covers")) {
      WonderfulLattice L = catalog(opt.lattice);
      auto cov = covering_differences(L, opt.full_support);
      Report rep;
      rep.columns = {"gamma", "expansion", "pos_height"};
      json arr = json::array();
      for (auto& g : cov) {
        DivisorVec x = L.expand(g);
        arr.push_back({{"gamma", g}, {"expansion", x}, {"pos_height", pos_height(x)}});
        rep.rows.push_back({vec_str(g), divisor_str(L, x), std::to_string(pos_height(x))});
      }
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id},
                  {"full_support", opt.full_support}, {"covering_differences", arr},
                  {"count", cov.size()}};
      emit(rep, opt.format);
      return kOk;
    }
    if (app.got_subcommand("check-2ht")) {
      WonderfulLattice L = catalog(opt.lattice);
      TwoHtReport r = check_2ht(L);
      Report rep;
      rep.columns = {"holds", "max_pos_height", "violations"};
      rep.rows.push_back({r.holds() ? "true" : "false", std::to_string(r.max_pos_height),
                          std::to_string(r.violations.size())});
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id},
                  {"holds", r.holds()}, {"max_pos_height", r.max_pos_height},
                  {"violations", r.violations}};
      emit(rep, opt.format);
      return r.holds() ? kOk : kRefuted;
    }
    if (app.got_subcommand("low-triples")) {
      WonderfulLattice L = catalog(opt.lattice);
      auto triples = low_fundamental_triples(L, opt.full_support);
      Report rep;
      rep.columns = {"d", "e", "f"};
      json arr = json::array();
      for (auto& t : triples) {
        arr.push_back({{"d", t.d}, {"e", t.e}, {"f", t.f}});
        rep.rows.push_back(
            {divisor_str(L, t.d), divisor_str(L, t.e), divisor_str(L, t.f)});
      }
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id},
                  {"full_support", opt.full_support}, {"triples", arr},
                  {"count", triples.size()}};
      emit(rep, opt.format);
      return kOk;
    }
    if (app.got_subcommand("verify-triple")) {
      WonderfulLattice L = catalog(opt.lattice);
      auto parts = split(opt.triple, ';');
      if (parts.size() != 3) usage_error("--triple needs D;E;F");
      Triple t{parse_divisor(L, parts[0]), parse_divisor(L, parts[1]),
               parse_divisor(L, parts[2])};
      if (!sigma_leq(t.f, ivec_add(t.d, t.e), L)) usage_error("F is not <=_Sigma D+E");
      bool low = is_low_triple(t, L);
      TripleVerdict v = default_leaf_oracle(t, L);
      Report rep;
      rep.columns = {"low", "status", "witness"};
      rep.rows.push_back({low ? "true" : "false", to_string(v.status), v.witness});
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id}, {"low", low},
                  {"verdict", to_json(v)}};
      emit(rep, opt.format);
      if (v.status == LeafStatus::MultiplicityFail) return kRefuted;
      if (v.status == LeafStatus::OutOfCap ||
          v.status == LeafStatus::MultiplicityNecessaryPass)
        return kInconclusive;
      return kOk;
    }
    if (app.got_subcommand("surjectivity")) {
      WonderfulLattice L = catalog(opt.lattice);
      auto parts = split(opt.pair, ',');
      if (parts.size() != 2) usage_error("--pair needs two divisors");
      Certificate c =
          verify_multiplication(parse_divisor(L, parts[0]), parse_divisor(L, parts[1]), L);
      Report rep;
      rep.columns = {"d", "e", "f", "status", "witness"};
      for (const CertNode& tree : c.trees) {
        std::vector<const CertNode*> leaves;
        collect_leaves(tree, leaves);
        for (auto* leaf : leaves)
          rep.rows.push_back({divisor_str(L, leaf->triple.d), divisor_str(L, leaf->triple.e),
                              divisor_str(L, leaf->triple.f),
                              to_string(leaf->verdict->status), leaf->verdict->witness});
      }
      std::sort(rep.rows.begin(), rep.rows.end());
      rep.rows.erase(std::unique(rep.rows.begin(), rep.rows.end()), rep.rows.end());
      rep.body = to_json(c);
      rep.body["lattice"] = L.id;
      emit(rep, opt.format);
      if (c.refuted) return kRefuted;
      if (c.inconclusive) return kInconclusive;
      return kOk;
    }
    if (app.got_subcommand("minuscule")) {
      WonderfulLattice L = catalog(opt.lattice);
      DivisorVec d = parse_divisor(L, opt.divisor);
      bool m = is_minuscule(d, L);
      Report rep;
      rep.columns = {"divisor", "minuscule"};
      rep.rows.push_back({divisor_str(L, d), m ? "true" : "false"});
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id}, {"divisor", d},
                  {"minuscule", m}};
      emit(rep, opt.format);
      return kOk;
    }
    if (app.got_subcommand("distinguished")) {
      WonderfulLattice L = catalog(opt.lattice);
      std::vector<int> subset;
      for (auto& label : split(opt.subset, ','))
        subset.push_back(L.color_index(label));
      bool dist = is_distinguished(subset, L);
      Report rep;
      rep.columns = {"subset", "distinguished"};
      rep.rows.push_back({opt.subset, dist ? "true" : "false"});
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id},
                  {"subset", subset}, {"distinguished", dist}};
      emit(rep, opt.format);
      return kOk;
    }
    if (app.got_subcommand("orbit-verdict")) {
      Report rep;
      rep.columns = {"case", "theta", "minuscule", "faithful", "verdict"};
      json arr = json::array();
      for (const OrbitCase& c : orbit_cases()) {
        if (!opt.orbit_case.empty() &&
            c.case_id.substr(0, c.case_id.find(':')) != opt.orbit_case)
          continue;
        NormalityVerdict v = normality_verdict(c);
        arr.push_back(to_json(v));
        rep.rows.push_back({c.case_id, divisor_str(c.lattice, c.theta),
                            v.minuscule ? "true" : "false", v.faithful ? "true" : "false",
                            v.verdict == Normality::Normal ? "normal" : "non-normal"});
      }
      if (arr.empty()) usage_error("unknown case " + opt.orbit_case);
      rep.body = {{"schema_version", kSchemaVersion}, {"verdicts", arr}};
      emit(rep, opt.format);
      return kOk;
    }
    if (app.got_subcommand("coord-ring")) {
      WonderfulLattice L = catalog(opt.lattice);
      DivisorVec e = parse_divisor(L, opt.divisor);
      DivisorVec shift =
          opt.shift.empty() ? L.zero_divisor() : parse_divisor(L, opt.shift);
      GradedDecomposition dec = coordinate_ring_degrees(L, e, shift, opt.n_max);
      Report rep;
      rep.columns = {"degree", "weight", "f", "gamma"};
      json degrees = json::array();
      for (std::size_t n = 0; n < dec.degrees.size(); ++n) {
        json level = json::array();
        for (auto& p : dec.degrees[n]) {
          level.push_back({{"f", p.f}, {"gamma", p.gamma}, {"weight", p.weight}});
          rep.rows.push_back({std::to_string(n), vec_str(p.weight), divisor_str(L, p.f),
                              vec_str(p.gamma)});
        }
        degrees.push_back(level);
      }
      rep.body = {{"schema_version", kSchemaVersion}, {"lattice", L.id},
                  {"divisor", e}, {"shift", shift},
                  {"multiplicity_free", dec.multiplicity_free},
                  {"positivity_ok", dec.positivity_ok}, {"degrees", degrees}};
      emit(rep, opt.format);
      return dec.multiplicity_free && dec.positivity_ok ? kOk : kRefuted;
    }
    if (app.got_subcommand("identities")) {
      Report rep;
      rep.columns = {"identity", "matched", "scalar", "note"};
      json arr = json::array();
      bool all_ok = true;
      for (const std::string& id : projection_table_ids()) {
        if (!opt.family.empty() && id.rfind(opt.family, 0) != 0) continue;
        ProjectionResult res = apply_projection(id);
        all_ok = all_ok && res.matched;
        arr.push_back({{"id", id}, {"matched", res.matched},
                       {"scalar", res.scalar.get_str()}, {"note", res.note}});
        rep.rows.push_back({id, res.matched ? "true" : "false", res.scalar.get_str(),
                            res.note});
      }
      if (arr.empty()) usage_error("no identities match family " + opt.family);
      rep.body = {{"schema_version", kSchemaVersion}, {"identities", arr}};
      emit(rep, opt.format);
      return all_ok ? kOk : kRefuted;
    }
    if (app.got_subcommand("acceptance")) {
      auto results = run_acceptance(std::cout);
      for (auto& r : results)
        if (!r.pass) return kRefuted;
      return kOk;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvalidType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
