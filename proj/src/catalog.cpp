#include "icosa/catalog.hpp"

#include <chrono>
#include <json.hpp>
#include <stdexcept>

#include "icosa/errors.hpp"
#include "icosa/expected.hpp"

namespace ico {

namespace {

using nlohmann::json;

ThetaVec theta_from(const json& j) {
  ThetaVec v;
  if (j.size() != 4) throw ParseError("theta needs four entries");
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_rational(j[i].get<std::string>());
  return v;
}

RatFunc ratfunc_from(const json& j) {
  return RatFunc(Poly::from_strings(j.at("num").get<std::vector<std::string>>()),
                 Poly::from_strings(j.at("den").get<std::vector<std::string>>()));
}

CurveFieldElem elem_from(const json& j, const CurveFieldElem::Modulus& f) {
  RatFunc a = ratfunc_from(j.at("a"));
  RatFunc b = ratfunc_from(j.at("b"));
  if (!b.is_zero() && !f) throw ParseError("u-term on a rational curve");
  return CurveFieldElem(std::move(a), std::move(b), f);
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  try {
    json j = json::parse(text);
    for (const auto& r : j.at("entries")) {
      CatalogEntry e;
      e.id = r.at("id");
      e.alias = r.value("alias", "");
      e.anchor = r.value("anchor", "");
      e.note = r.value("note", "");
      e.theta = theta_from(r.at("theta"));
      for (const auto& th : r.value("family", json::array())) e.family.push_back(theta_from(th));
      if (!r.at("modulus").is_null())
        e.modulus = std::make_shared<const Poly>(Poly::from_strings(r.at("modulus").get<std::vector<std::string>>()));
      e.y = elem_from(r.at("y"), e.modulus);
      e.t = elem_from(r.at("t"), e.modulus);
      for (const auto& term : r.value("implicit", json::array()))
        e.implicit.push_back({term.at("y").get<int>(), term.at("t").get<int>(), parse_rational(term.at("c").get<std::string>())});
      if (r.contains("leading")) {
        const auto& l = r.at("leading");
        LeadingBranch b{parse_rational(l.at("s0").get<std::string>()), std::nullopt};
        if (l.contains("u0")) b.u0 = parse_rational(l.at("u0").get<std::string>());
        e.leading = b;
      }
      if (r.contains("printed")) {
        const auto& p = r.at("printed");
        if (p.contains("theta")) e.printed_theta = theta_from(p.at("theta"));
        if (p.contains("y")) e.printed_y = elem_from(p.at("y"), e.modulus);
      }
      out.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("catalog: ") + ex.what());
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(std::string(embedded::catalog_json()));
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id || (!e.alias.empty() && e.alias == id)) return e;
  throw std::out_of_range("no catalog entry '" + id + "'");
}

bool EntryReport::pass() const {
  if (!residual_zero) return false;
  if (implicit_ok && !*implicit_ok) return false;
  for (const auto& [th, ok] : family)
    if (!ok) return false;
  return true;
}

namespace {

bool residual_vanishes(const CurveFieldElem& y, const CurveFieldElem& t, const ThetaVec& th, std::string* text) {
  CurveFieldElem r = pvi_residual(y, t, th);
  if (r.is_zero()) return true;
  if (text) {
    *text = r.to_string();
    if (text->size() > 400) *text = text->substr(0, 400) + "...";
  }
  return false;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport rep;
  rep.id = e.id;
  rep.theta = e.theta;
  rep.residual_zero = residual_vanishes(e.y, e.t, e.theta, &rep.residual);
  if (!e.implicit.empty()) rep.implicit_ok = check_implicit(e.implicit, e.y, e.t);
  for (const auto& th : e.family) rep.family.emplace_back(th, residual_vanishes(e.y, e.t, th, nullptr));
  if (e.printed_theta || e.printed_y) {
    const CurveFieldElem& y = e.printed_y ? *e.printed_y : e.y;
    const ThetaVec& th = e.printed_theta ? *e.printed_theta : e.theta;
    rep.printed_fails = !residual_vanishes(y, e.t, th, nullptr);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

EntryReport verify_entry_or_throw(const CatalogEntry& e) {
  EntryReport rep = verify_entry(e);
  if (!rep.pass()) {
    std::string why = rep.residual_zero ? "" : "residual " + rep.residual;
    if (rep.implicit_ok && !*rep.implicit_ok) why += " implicit relation fails";
    for (const auto& [th, ok] : rep.family)
      if (!ok) why += " family theta " + to_string(th) + " fails";
    throw VerificationFailed(e.id + ":" + why);
  }
  return rep;
}

Rational entry_leading(const CatalogEntry& e) {
  if (!e.leading) throw std::logic_error(e.id + " has no designated branch");
  return leading_coeff(e.y, e.t, e.leading->s0, e.leading->u0);
}

}  // namespace ico
