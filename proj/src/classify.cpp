#include "icosa/classify.hpp"

#include <omp.h>

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <sstream>

#include "icosa/cache.hpp"
#include "icosa/errors.hpp"

namespace ico {

Pipeline run_pipeline(const PipelineOptions& opt) {
  Pipeline P{build_group(), {}, {}, {}, false};
  if (!opt.cache_path.empty()) {
    if (auto cached = read_cache(opt.cache_path, P.G)) {
      if (cached->size() != kExpectedS) throw CountMismatch("cached |S| = " + std::to_string(cached->size()));
      P.S = std::move(*cached);
      P.from_cache = true;
    }
  }
  if (!P.from_cache) {
    P.S = enumerate_S(P.G, opt.threads);
    if (!opt.cache_path.empty()) write_cache(opt.cache_path, P.G, P.S);
  }
  P.B = build_braid_tables(P.S);
  P.orbits = geometric_orbits(P.S, P.B);
  return P;
}

std::string a5_type_of(const MTuple& m) {
  std::string s;
  for (int j = 0; j < 4; ++j) {
    A5Class c = a5_class_of_trace(m.code(j));
    if (c != A5Class::Trivial) s += to_char(c);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::string> SolutionClass::partitions_display() const { return display_partitions(partitions); }

std::string to_string(InfinityConvention c) {
  return c == InfinityConvention::Standard ? "rho_inf = (rho1 rho0)^-1" : "rho_inf = (rho0 rho1)^-1";
}

SolutionClass build_class(const Pipeline& P, std::size_t orbit, InfinityConvention conv) {
  const auto& members = P.orbits.members.at(orbit);
  SolutionClass c;
  c.rep = P.S.tuple(members.front());
  c.rep_theta = theta_of(c.rep);
  c.n = members.size();
  c.a5_type = a5_type_of(c.rep);
  ThetaVec reduced = reduce_to_alcove(c.rep_theta).point;
  c.alcove_x60 = alcove_x60(reduced);
  c.walls = wall_count(reduced);

  BranchData bd = branch_data(P.B, members.front(), conv);
  c.degree = static_cast<int>(bd.k);
  std::array<CycleType, 3> types = {cycle_type(bd.rho0), cycle_type(bd.rho1), cycle_type(bd.rho_inf)};
  c.genus = genus_rh(c.degree, types);
  std::sort(types.begin(), types.end());
  c.partitions = types;
  GroupOrder g = describe_group({bd.rho0, bd.rho1}, bd.k);
  c.group_order = g.order;
  c.group_label = g.label;
  c.group_factored = GroupOrder{g.order, g.factors, ""}.to_string();
  return c;
}

namespace {

bool class_less(const SolutionClass& a, const SolutionClass& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.alcove_x60 < b.alcove_x60;
}

ClassTable build_with(const Pipeline& P, InfinityConvention conv) {
  const std::size_t n = P.orbits.count();
  std::vector<SolutionClass> by_orbit(n);
  // Orbit sizes differ by two orders of magnitude; hand them out one by one.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t o = 0; o < n; ++o) by_orbit[o] = build_class(P, o, conv);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return class_less(by_orbit[a], by_orbit[b]); });
  ClassTable T;
  T.convention = conv;
  for (auto o : order) {
    T.classes.push_back(by_orbit[o]);
    T.orbit_index.push_back(o);
  }
  return T;
}

const ExpectedRow* row_with_alcove(const std::array<int, 4>& a) {
  for (const auto& r : expected_table1())
    if (r.alcove_x60 == a) return &r;
  return nullptr;
}

bool partitions_agree(const SolutionClass& c, const ExpectedRow& r) {
  return expand_partitions(r.partitions, c.degree) == c.partitions;
}

std::vector<std::string> mismatches(const SolutionClass& c, const ExpectedRow& r) {
  std::vector<std::string> bad;
  if (c.degree != r.degree) bad.push_back("degree");
  if (c.genus != r.genus) bad.push_back("genus");
  if (c.walls != r.walls) bad.push_back("walls");
  if (c.a5_type != r.a5_type) bad.push_back("a5_type");
  if (c.alcove_x60 != r.alcove_x60) bad.push_back("alcove_x60");
  if (c.n != r.n) bad.push_back("n");
  bool printed_label = !r.group.empty() && (r.group[0] == 'A' || r.group[0] == 'S');
  bool computed_label = !c.group_label.empty() && (c.group_label[0] == 'A' || c.group_label[0] == 'S');
  if (c.group_order != order_of_group_entry(r.group) || printed_label != computed_label ||
      (printed_label && c.group_label != r.group))
    bad.push_back("group");
  if (c.degree != r.degree || !partitions_agree(c, r)) bad.push_back("partitions");
  return bad;
}

}  // namespace

ClassTable build_table(const Pipeline& P) {
  ClassTable T = build_with(P, InfinityConvention::Standard);
  bool ok = std::all_of(T.classes.begin(), T.classes.end(), [](const SolutionClass& c) {
    const ExpectedRow* r = row_with_alcove(c.alcove_x60);
    return r && r->degree == c.degree && partitions_agree(c, *r);
  });
  if (ok) return T;
  ClassTable alt = build_with(P, InfinityConvention::Reversed);
  bool alt_ok = std::all_of(alt.classes.begin(), alt.classes.end(), [](const SolutionClass& c) {
    const ExpectedRow* r = row_with_alcove(c.alcove_x60);
    return r && r->degree == c.degree && partitions_agree(c, *r);
  });
  return alt_ok ? alt : T;
}

std::vector<RowCheck> compare_table1(const ClassTable& T) {
  std::vector<RowCheck> out;
  for (const auto& r : expected_table1()) {
    RowCheck rc{r.row, false, {}};
    int hits = 0;
    for (const auto& c : T.classes)
      if (c.alcove_x60 == r.alcove_x60) {
        ++hits;
        rc.found = true;
        rc.mismatched = mismatches(c, r);
      }
    if (hits > 1) rc.mismatched.push_back("alcove point not unique");
    out.push_back(std::move(rc));
  }
  return out;
}

bool all_match(const std::vector<RowCheck>& checks) {
  return checks.size() == expected_table1().size() &&
         std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.found && c.mismatched.empty(); });
}

MTuple mtuple_of(const ExpectedRep& r) {
  return MTuple({trace_from_theta(r.theta[0]), trace_from_theta(r.theta[1]), trace_from_theta(r.theta[2]),
                 trace_from_theta(r.theta[3]), trace_from_theta(r.sigma[0]), trace_from_theta(r.sigma[1]),
                 trace_from_theta(r.sigma[2])});
}

std::size_t count_realisations(const GroupTable& G, const MTuple& m) {
  std::array<std::vector<Elem>, 3> by_trace;
  for (int g = 0; g < static_cast<int>(kGroupOrder); ++g)
    for (int s = 0; s < 3; ++s)
      if (G.trace(static_cast<Elem>(g)) == m.code(s)) by_trace[s].push_back(static_cast<Elem>(g));
  std::size_t count = 0;
  for (Elem a : by_trace[0])
    for (Elem b : by_trace[1])
      for (Elem c : by_trace[2])
        if (seven_tuple(G, complete_tuple(G, a, b, c)) == m) ++count;
  return count;
}

namespace {

// Locates m in S and compares its class with the reference row.
void check_rep(const Pipeline& P, const ClassTable& T, const MTuple& m, int row_no, Table2Check& chk) {
  auto idx = P.S.index_of(m);
  if (!idx) return;
  chk.in_S = true;
  std::uint32_t orbit = P.orbits.orbit_of[*idx];
  auto it = std::find(T.orbit_index.begin(), T.orbit_index.end(), orbit);
  const ExpectedRow* row = nullptr;
  for (const auto& r : expected_table1())
    if (r.row == row_no) row = &r;
  if (it == T.orbit_index.end() || !row) return;
  const SolutionClass& c = T.classes[it - T.orbit_index.begin()];
  auto bad = mismatches(c, *row);
  chk.row_matches = bad.empty();
  for (const auto& b : bad) chk.detail += (chk.detail.empty() ? "" : ",") + b;
}

}  // namespace

std::vector<Table2Check> check_table2(const Pipeline& P, const ClassTable& T) {
  std::vector<Table2Check> out;
  for (const auto& rep : expected_table2()) {
    Table2Check chk{rep.row, false, false, false, ""};
    std::optional<MTuple> printed;
    try {
      printed = mtuple_of(rep);
    } catch (const NotIcosahedralTrace& e) {
      chk.detail = e.what();
    }
    if (printed) check_rep(P, T, *printed, rep.row, chk);
    if (printed && !chk.in_S) {
      chk.detail = "seven-tuple not in S";
      // Only an impossible tuple may be replaced by its recorded correction.
      if (rep.erratum_theta && count_realisations(P.G, *printed) == 0) {
        ExpectedRep fixed = rep;
        fixed.theta = *rep.erratum_theta;
        chk.detail.clear();
        check_rep(P, T, mtuple_of(fixed), rep.row, chk);
        chk.corrected = true;
        chk.detail = "printed tuple realised by no triple; corrected: " + rep.erratum_note +
                     (chk.detail.empty() ? "" : "; " + chk.detail);
      }
    }
    out.push_back(std::move(chk));
  }
  return out;
}

// ------------------------------------------------------------------ export

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> theta_strings(const ThetaVec& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string export_json(const ClassTable& T) {
  ojson j;
  j["convention"] = to_string(T.convention);
  j["classes"] = ojson::array();
  for (const auto& c : T.classes) {
    ojson r;
    r["degree"] = c.degree;
    r["genus"] = c.genus;
    r["walls"] = c.walls;
    r["a5_type"] = c.a5_type;
    r["alcove_x60"] = c.alcove_x60;
    r["n"] = c.n;
    r["group_order"] = c.group_order.get_str();
    r["group_factored"] = c.group_factored;
    r["group_label"] = c.group_label;
    r["partitions"] = ojson::array();
    for (const auto& p : c.partitions) r["partitions"].push_back(p);
    std::vector<std::string> m;
    for (int i = 0; i < 7; ++i) m.push_back(c.rep.value(i).to_string());
    r["rep_mtuple"] = m;
    r["rep_theta"] = theta_strings(c.rep_theta);
    j["classes"].push_back(std::move(r));
  }
  return j.dump(1) + "\n";
}

ClassTable classes_from_json(const std::string& text) {
  ClassTable T;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw ParseError(e.what());
  }
  T.convention = j.at("convention").get<std::string>() == to_string(InfinityConvention::Reversed)
                     ? InfinityConvention::Reversed
                     : InfinityConvention::Standard;
  for (const auto& r : j.at("classes")) {
    SolutionClass c;
    c.degree = r.at("degree");
    c.genus = r.at("genus");
    c.walls = r.at("walls");
    c.a5_type = r.at("a5_type");
    c.alcove_x60 = r.at("alcove_x60").get<std::array<int, 4>>();
    c.n = r.at("n");
    c.group_order = Integer(r.at("group_order").get<std::string>());
    c.group_factored = r.at("group_factored");
    c.group_label = r.at("group_label");
    auto parts = r.at("partitions").get<std::vector<CycleType>>();
    if (parts.size() != 3) throw ParseError("expected three partitions");
    std::copy(parts.begin(), parts.end(), c.partitions.begin());
    std::array<GoldenNum, 7> v;
    for (int i = 0; i < 7; ++i) v[i] = GoldenNum::parse(r.at("rep_mtuple").at(i).get<std::string>());
    c.rep = MTuple::from_values(v);
    for (int i = 0; i < 4; ++i) c.rep_theta[i] = parse_rational(r.at("rep_theta").at(i).get<std::string>());
    T.classes.push_back(std::move(c));
  }
  return T;
}

std::string export_csv(const ClassTable& T) {
  std::ostringstream os;
  os << "degree,genus,walls,a5_type,alcove_x60,n,group_order,group_label,partitions,rep_theta\n";
  for (const auto& c : T.classes) {
    os << c.degree << ',' << c.genus << ',' << c.walls << ',' << c.a5_type << ',' << c.alcove_x60[0] << ' '
       << c.alcove_x60[1] << ' ' << c.alcove_x60[2] << ' ' << c.alcove_x60[3] << ',' << c.n << ','
       << c.group_order.get_str() << ',' << c.group_string() << ',' << join(c.partitions_display(), "; ") << ','
       << join(theta_strings(c.rep_theta), " ") << '\n';
  }
  return os.str();
}

std::string export_text(const ClassTable& T) {
  std::ostringstream os;
  os << std::left << std::setw(7) << "degree" << std::setw(6) << "genus" << std::setw(6) << "walls"
     << std::setw(7) << "A5" << std::setw(16) << "alcove x60" << std::setw(6) << "n" << std::setw(30)
     << "group" << "partitions\n";
  for (const auto& c : T.classes) {
    std::ostringstream alc;
    alc << c.alcove_x60[0] << ", " << c.alcove_x60[1] << ", " << c.alcove_x60[2] << ", " << c.alcove_x60[3];
    os << std::left << std::setw(7) << c.degree << std::setw(6) << c.genus << std::setw(6) << c.walls
       << std::setw(7) << c.a5_type << std::setw(16) << alc.str() << std::setw(6) << c.n << std::setw(30)
       << c.group_string() << join(c.partitions_display(), ", ") << "\n";
  }
  return os.str();
}

}  // namespace ico
