#include "icosa/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "icosa/catalog.hpp"
#include "icosa/classify.hpp"
#include "icosa/errors.hpp"
#include "icosa/valentiner.hpp"

namespace ico {

namespace {

using ojson = nlohmann::ordered_json;

std::string x60_string(const std::array<int, 4>& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]) + ")/60";
}

std::vector<std::string> strings_of(const ThetaVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

int reference_row(const SolutionClass& c) {
  for (const auto& r : expected_table1())
    if (r.alcove_x60 == c.alcove_x60) return r.row;
  return 0;
}

Pipeline pipeline(const Config& cfg) { return run_pipeline({cfg.threads, cfg.cache_path}); }

// ------------------------------------------------------------- enumerate

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  Pipeline P = pipeline(cfg);
  const auto classes = P.G.conjugacy_classes();
  const auto centre = P.G.center();
  if (cfg.format == OutputFormat::Json) {
    ojson j;
    j["group_order"] = P.G.elements().size();
    j["center"] = centre.size();
    j["conjugacy_classes"] = classes.size();
    j["generating_triples"] = P.from_cache ? ojson(nullptr) : ojson(P.S.generating_triples());
    j["S"] = P.S.size();
    j["geometric_orbits"] = P.orbits.count();
    j["from_cache"] = P.from_cache;
    out << j.dump(2) << "\n";
  } else {
    out << "group: order " << P.G.elements().size() << ", centre " << centre.size() << ", conjugacy classes "
        << classes.size() << "\n";
    if (P.from_cache)
      out << "generating triples: not recounted (S read from cache)\n";
    else
      out << "generating triples: " << P.S.generating_triples() << "\n";
    out << "|S| = " << P.S.size() << "\n";
    out << "geometric orbits: " << P.orbits.count() << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- classify

int cmd_classify(const Config& cfg, std::ostream& out, std::ostream& err) {
  Pipeline P = pipeline(cfg);
  ClassTable T = build_table(P);
  auto checks = compare_table1(T);
  auto reps = check_table2(P, T);

  switch (cfg.format) {
    case OutputFormat::Json: out << export_json(T); break;
    case OutputFormat::Csv: out << export_csv(T); break;
    case OutputFormat::Text: out << export_text(T); break;
  }

  int good1 = 0;
  for (const auto& c : checks) {
    if (c.found && c.mismatched.empty()) {
      ++good1;
      continue;
    }
    err << "row " << c.row << ": " << (c.found ? "mismatch in " + join(c.mismatched, ", ") : "no computed class") << "\n";
  }
  int good2 = 0;
  for (const auto& r : reps) {
    if (r.in_S && r.row_matches) ++good2;
    if (!r.in_S || !r.row_matches || r.corrected)
      err << "representative " << r.row << ": " << (r.in_S && r.row_matches ? "ok, " : "FAILED, ") << r.detail << "\n";
  }
  err << "reference rows matched: " << good1 << "/" << checks.size() << "\n";
  err << "representatives in their class: " << good2 << "/" << reps.size() << "\n";
  return all_match(checks) ? 0 : 1;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const Config& cfg, const std::string& theta_text, std::ostream& out) {
  ThetaVec v = parse_theta(theta_text);
  Reduction r = reduce_to_alcove(v);
  const int walls = wall_count(r.point);
  const auto x60 = alcove_x60(r.point);
  std::vector<int> facets;
  for (const auto& refl : r.word) facets.push_back(refl.facet + 1);
  if (cfg.format == OutputFormat::Json) {
    ojson j;
    j["theta"] = strings_of(v);
    j["point"] = strings_of(r.point);
    j["alcove_x60"] = x60;
    j["walls"] = walls;
    j["word"] = facets;
    out << j.dump(2) << "\n";
  } else {
    out << x60_string(x60) << ", walls=" << walls << "\n";
    std::vector<std::string> f;
    for (int i : facets) f.push_back(std::to_string(i));
    out << "reflections: " << facets.size() << (facets.empty() ? "" : " (facets " + join(f, " ") + ")") << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- orbit

MTuple parse_mtuple(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 7) throw ParseError("--mtuple needs seven values theta1..theta4,sigma12,sigma23,sigma13");
  std::array<Trace, 7> codes;
  for (int i = 0; i < 7; ++i) codes[i] = trace_from_theta(parse_rational(parts[i]));
  return MTuple(codes);
}

int cmd_orbit(const Config& cfg, const std::string& theta_text, const std::string& mtuple_text, std::ostream& out,
              std::ostream& err) {
  Pipeline P = pipeline(cfg);
  ClassTable T = build_table(P);
  std::size_t base = 0;
  const SolutionClass* cls = nullptr;
  if (!mtuple_text.empty()) {
    MTuple m = parse_mtuple(mtuple_text);
    auto idx = P.S.index_of(m);
    if (!idx) {
      err << m.to_string() << " is not in S\n";
      return 1;
    }
    base = *idx;
    for (std::size_t i = 0; i < T.classes.size(); ++i)
      if (T.orbit_index[i] == P.orbits.orbit_of[base]) cls = &T.classes[i];
  } else {
    const auto x60 = alcove_x60(reduce_to_alcove(parse_theta(theta_text)).point);
    for (const auto& c : T.classes)
      if (c.alcove_x60 == x60) cls = &c;
    if (!cls) {
      err << "no class at alcove point " << x60_string(x60) << "\n";
      return 1;
    }
    base = *P.S.index_of(cls->rep);
  }
  BranchData bd = branch_data(P.B, base, T.convention);
  const int row = reference_row(*cls);

  if (cfg.format == OutputFormat::Json) {
    ojson j;
    j["row"] = row;
    j["degree"] = cls->degree;
    j["genus"] = cls->genus;
    j["walls"] = cls->walls;
    j["a5_type"] = cls->a5_type;
    j["alcove_x60"] = cls->alcove_x60;
    j["n"] = cls->n;
    j["group"] = cls->group_string();
    j["group_order"] = cls->group_order.get_str();
    j["partitions"] = cls->partitions_display();
    j["base_point"] = P.S.tuple(base).to_string();
    j["base_theta"] = strings_of(theta_of(P.S.tuple(base)));
    j["convention"] = to_string(T.convention);
    j["rho0"] = bd.rho0.to_cycles();
    j["rho1"] = bd.rho1.to_cycles();
    j["rho_inf"] = bd.rho_inf.to_cycles();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "row " << row << ": degree " << cls->degree << ", genus " << cls->genus << ", walls " << cls->walls
      << ", A5 type " << cls->a5_type << ", alcove " << x60_string(cls->alcove_x60) << ", n " << cls->n << "\n";
  out << "group: " << cls->group_string();
  if (!cls->group_label.empty()) out << " (order " << cls->group_order.get_str() << ")";
  out << "\n";
  out << "partitions: " << join(cls->partitions_display(), "; ") << "\n";
  out << "base point: " << P.S.tuple(base).to_string() << ", theta " << to_string(theta_of(P.S.tuple(base))) << "\n";
  out << "branch permutations on " << bd.k << " points, " << to_string(T.convention) << ":\n";
  out << "  rho0    = " << bd.rho0.to_cycles() << "\n";
  out << "  rho1    = " << bd.rho1.to_cycles() << "\n";
  out << "  rho_inf = " << bd.rho_inf.to_cycles() << "\n";
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Config& cfg, const std::string& id, std::ostream& out) {
  std::vector<const CatalogEntry*> entries;
  if (id.empty()) {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    entries.push_back(&find_entry(id));
  }
  bool all_ok = true;
  ojson jall = ojson::array();
  for (const CatalogEntry* e : entries) {
    EntryReport r = verify_entry(*e);
    bool ok = r.pass();
    std::optional<Rational> lead;
    Rational lead_expected;
    if (e->leading) {
      lead = entry_leading(*e);
      lead_expected = e->theta[0] / (e->theta[0] + e->theta[1]);
      ok = ok && *lead == lead_expected;
    }
    all_ok = all_ok && ok;

    if (cfg.format == OutputFormat::Json) {
      ojson j;
      j["id"] = e->id;
      j["theta"] = strings_of(e->theta);
      j["pass"] = ok;
      j["residual_zero"] = r.residual_zero;
      if (!r.residual_zero) j["residual"] = r.residual;
      if (r.implicit_ok) j["implicit"] = *r.implicit_ok;
      ojson fam = ojson::array();
      for (const auto& [th, good] : r.family) fam.push_back({{"theta", strings_of(th)}, {"residual_zero", good}});
      if (!r.family.empty()) j["family"] = fam;
      if (r.printed_fails) j["printed_variant_fails"] = *r.printed_fails;
      if (lead) j["leading"] = lead->get_str();
      j["seconds"] = r.seconds;
      jall.push_back(j);
      continue;
    }
    out << e->id << (e->alias.empty() ? "" : " (" + e->alias + ")") << ", theta " << to_string(e->theta) << ": "
        << (r.residual_zero ? "residual ≡ 0" : "residual ≠ 0: " + r.residual);
    if (r.implicit_ok) out << "; implicit relation " << (*r.implicit_ok ? "≡ 0" : "FAILS");
    out << std::fixed << std::setprecision(3) << " [" << r.seconds << " s]" << std::defaultfloat << "\n";
    for (const auto& [th, good] : r.family)
      out << "  family theta " << to_string(th) << ": " << (good ? "residual ≡ 0" : "residual ≠ 0") << "\n";
    if (r.printed_fails)
      out << "  uncorrected printed data: " << (*r.printed_fails ? "residual ≠ 0 (correction needed)" : "also solves")
          << "\n";
    if (lead)
      out << "  lim y/t at s0 = " << e->leading->s0.get_str() << ": " << lead->get_str()
          << (*lead == lead_expected ? "" : " (expected " + lead_expected.get_str() + ")") << "\n";
    if (!ok) out << "  FAILED\n";
  }
  if (cfg.format == OutputFormat::Json) out << jall.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------------ valentiner

int cmd_valentiner(const Config& cfg, std::ostream& out) {
  Pipeline P = pipeline(cfg);
  ClassTable T = build_table(P);
  auto matches = run_valentiner(P, T, cfg.precision);
  if (cfg.format == OutputFormat::Json) {
    ojson all = ojson::array();
    for (const auto& m : matches) {
      ojson j;
      j["triple"] = m.name;
      j["mtuple"] = m.m.to_string();
      j["theta"] = strings_of(m.theta);
      j["row"] = m.row;
      j["degree"] = m.degree;
      j["genus"] = m.genus;
      j["alcove_x60"] = m.alcove_x60;
      j["recognition_error"] = m.max_error;
      j["eigenvalue_defect"] = m.eigen_defect;
      all.push_back(j);
    }
    out << all.dump(2) << "\n";
    return 0;
  }
  out << "precision: " << cfg.precision << " digits\n";
  for (const auto& m : matches) {
    out << m.name << ": " << m.m.to_string() << ", theta " << to_string(m.theta) << " -> row " << m.row << " (degree "
        << m.degree << ", genus " << m.genus << ", alcove " << x60_string(m.alcove_x60) << ")"
        << std::scientific << std::setprecision(1) << ", recognition error " << m.max_error << std::defaultfloat
        << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- genus

int cmd_genus(const Config& cfg, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read " << path << "\n";
    return 1;
  }
  std::vector<std::string> lines;
  std::string line;
  std::size_t degree = 0;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
    // largest point mentioned fixes the degree
    std::string digits;
    for (char ch : line + " ") {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
      } else if (!digits.empty()) {
        degree = std::max<std::size_t>(degree, std::stoul(digits));
        digits.clear();
      }
    }
  }
  if (lines.size() != 2 && lines.size() != 3) {
    err << "expected two or three permutations, found " << lines.size() << "\n";
    return 1;
  }
  std::vector<Perm> p;
  for (const auto& l : lines) p.push_back(Perm::parse_cycles(l, degree));
  if (p.size() == 2) p.push_back((p[1] * p[0]).inverse());
  if (!(p[2] * p[1] * p[0]).is_identity()) {
    err << "the permutations do not multiply to the identity\n";
    return 1;
  }
  std::array<CycleType, 3> types{cycle_type(p[0]), cycle_type(p[1]), cycle_type(p[2])};
  const int genus = genus_rh(static_cast<int>(degree), types);
  GroupOrder g = describe_group({p[0], p[1]}, degree);
  if (cfg.format == OutputFormat::Json) {
    ojson j;
    j["degree"] = degree;
    j["cycle_types"] = {partition_string(types[0]), partition_string(types[1]), partition_string(types[2])};
    j["genus"] = genus;
    j["group_order"] = g.order.get_str();
    j["group"] = g.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << "degree " << degree << "\n";
    out << "cycle types: " << partition_string(types[0]) << " | " << partition_string(types[1]) << " | "
        << partition_string(types[2]) << "\n";
    out << "genus " << genus << "\n";
    out << "group order " << g.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Icosahedral Painleve VI classification and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Config cfg;
  std::string format = "text";
  app.add_option("--cache", cfg.cache_path, "Cache file for the seven-tuple set S");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", cfg.precision, "Decimal digits for the Valentiner computation")
      ->check(CLI::Range(40u, 10000u));

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate S and print the counts");
  auto* classify = app.add_subcommand("classify", "Emit the 52-class table and compare it with the reference rows");
  auto* reduce = app.add_subcommand("reduce", "Reduce a theta vector to the standard alcove");
  std::string theta;
  reduce->add_option("--theta", theta, "theta1,theta2,theta3,theta4")->required();
  auto* orbit = app.add_subcommand("orbit", "Look up a class and its branch permutations");
  std::string orbit_theta, orbit_mtuple;
  auto* ot = orbit->add_option("--theta", orbit_theta, "theta1,...,theta4 (class by alcove point)");
  auto* om = orbit->add_option("--mtuple", orbit_mtuple, "theta1,...,theta4,sigma12,sigma23,sigma13");
  ot->excludes(om);
  orbit->require_option(1);
  auto* verify = app.add_subcommand("verify", "Exact symbolic verification of catalogued solutions");
  std::string entry;
  bool verify_all = false;
  auto* ve = verify->add_option("--entry", entry, "Catalogue id (or alias)");
  auto* va = verify->add_flag("--all", verify_all, "Verify every entry");
  ve->excludes(va);
  auto* valentiner = app.add_subcommand("valentiner", "Map the three Valentiner reflection triples to classes");
  auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus of a permutation triple");
  std::string perms;
  genus->add_option("--perms", perms, "File with permutations in cycle notation, one per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*classify) return cmd_classify(cfg, out, err);
    if (*reduce) return cmd_reduce(cfg, theta, out);
    if (*orbit) return cmd_orbit(cfg, orbit_theta, orbit_mtuple, out, err);
    if (*verify) return cmd_verify(cfg, entry, out);
    if (*valentiner) return cmd_valentiner(cfg, out);
    if (*genus) return cmd_genus(cfg, perms, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.push_back("icosa");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace ico
