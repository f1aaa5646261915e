#include "icosa/expected.hpp"

#include <json.hpp>
#include <sstream>

#include "icosa/errors.hpp"

namespace ico {

namespace {

nlohmann::json parse_embedded(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

const std::vector<ExpectedRow>& expected_table1() {
  static const std::vector<ExpectedRow> rows = [] {
    std::vector<ExpectedRow> out;
    auto j = parse_embedded(embedded::table1_json(), "table1.json");
    for (const auto& r : j.at("rows")) {
      ExpectedRow e;
      e.row = r.at("row");
      e.degree = r.at("degree");
      e.genus = r.at("genus");
      e.walls = r.at("walls");
      e.a5_type = r.at("a5_type");
      e.alcove_x60 = r.at("alcove_x60").get<std::array<int, 4>>();
      e.n = r.at("n");
      e.good = r.at("good");
      e.group = r.at("group");
      e.partitions = r.at("partitions").get<std::vector<std::string>>();
      out.push_back(std::move(e));
    }
    return out;
  }();
  return rows;
}

const std::vector<ExpectedRep>& expected_table2() {
  static const std::vector<ExpectedRep> rows = [] {
    std::vector<ExpectedRep> out;
    auto j = parse_embedded(embedded::table2_json(), "table2.json");
    for (const auto& r : j.at("rows")) {
      ExpectedRep e;
      e.row = r.at("row");
      for (int i = 0; i < 4; ++i) e.theta[i] = parse_rational(r.at("theta").at(i).get<std::string>());
      for (int i = 0; i < 3; ++i) e.sigma[i] = parse_rational(r.at("sigma").at(i).get<std::string>());
      if (r.contains("erratum")) {
        const auto& er = r.at("erratum");
        std::array<Rational, 4> th;
        for (int i = 0; i < 4; ++i) th[i] = parse_rational(er.at("theta").at(i).get<std::string>());
        e.erratum_theta = th;
        e.erratum_note = er.value("note", "");
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return rows;
}

Integer order_of_group_entry(std::string_view entry) {
  if (!entry.empty() && (entry[0] == 'A' || entry[0] == 'S')) {
    unsigned long k = std::stoul(std::string(entry.substr(1)));
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return entry[0] == 'A' ? Integer(f / 2) : f;
  }
  Integer order = 1;
  std::istringstream in{std::string(entry)};
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    unsigned long p = std::stoul(tok.substr(0, caret));
    unsigned long e = caret == std::string::npos ? 1 : std::stoul(tok.substr(caret + 1));
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    order *= pe;
  }
  return order;
}

}  // namespace ico
