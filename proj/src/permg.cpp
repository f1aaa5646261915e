#include "icosa/permg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "icosa/errors.hpp"

namespace ico {

Perm::Perm(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0u); }

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || hit[x]) throw ParseError("not a permutation");
    hit[x] = true;
  }
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm operator*(const Perm& p, const Perm& q) {
  std::vector<std::uint32_t> r(q.degree());
  for (std::uint32_t i = 0; i < r.size(); ++i) r[i] = p(q(i));
  return Perm(std::move(r));
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    for (std::uint32_t x = i; !seen[x]; x = img_[x]) {
      seen[x] = true;
      if (x != i) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t top = 0;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("bad cycle notation: '" + std::string(text) + "'"); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') fail();
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail();
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v == 0) fail();
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      top = std::max(top, v);
    }
    cycles.push_back(std::move(cyc));
  }
  if (degree == 0) degree = top;
  if (top > degree) fail();
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (used[cyc[j]]) fail();  // only disjoint cycles are accepted
      used[cyc[j]] = true;
      p.img_[cyc[j]] = cyc[(j + 1) % cyc.size()];
    }
  return p;
}

CycleType cycle_type(const Perm& p) {
  CycleType c;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::uint32_t x = i; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    c.push_back(len);
  }
  std::sort(c.begin(), c.end());
  return c;
}

std::string partition_string(const CycleType& c) {
  std::map<int, int> mult;
  for (int part : c)
    if (part > 1) ++mult[part];
  if (mult.empty()) return c.size() > 1 ? "1" : "";
  std::string out;
  for (const auto& [part, e] : mult) {
    if (!out.empty()) out += " ";
    out += std::to_string(part);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

CycleType parse_partition(std::string_view text, int k) {
  CycleType c;
  int used = 0;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto caret = tok.find('^');
    int part = 0, e = 1;
    try {
      part = std::stoi(tok.substr(0, caret));
      if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw ParseError("bad partition token '" + tok + "'");
    }
    if (part < 1 || e < 1) throw ParseError("bad partition token '" + tok + "'");
    if (part == 1) continue;  // "1" names the identity
    for (int j = 0; j < e; ++j) c.push_back(part);
    used += part * e;
  }
  if (used > k) throw ParseError("partition '" + std::string(text) + "' exceeds " + std::to_string(k));
  for (; used < k; ++used) c.push_back(1);
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<std::string> display_partitions(const std::array<CycleType, 3>& types) {
  if (types[0].size() <= 1) return {};
  std::array<std::string, 3> s = {partition_string(types[0]), partition_string(types[1]),
                                  partition_string(types[2])};
  if (s[0] == s[1] && s[1] == s[2]) return {s[0]};
  for (int odd = 0; odd < 3; ++odd) {
    int a = (odd + 1) % 3, b = (odd + 2) % 3;
    if (s[a] == s[b]) return {s[odd], s[a]};
  }
  std::vector<std::string> all(s.begin(), s.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::array<CycleType, 3> expand_partitions(const std::vector<std::string>& shown, int k) {
  std::vector<CycleType> v;
  for (const auto& s : shown) v.push_back(parse_partition(s, k));
  if (v.empty()) v.push_back(parse_partition("", k));
  while (v.size() < 3) v.push_back(v.back());
  if (v.size() > 3) throw ParseError("more than three partitions listed");
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

// ------------------------------------------------------------ Schreier-Sims

namespace {

struct Level {
  std::uint32_t point = 0;
  std::vector<Perm> gens;                  // strong generators fixing earlier base points
  std::vector<std::optional<Perm>> trans;  // trans[b] maps point to b
  std::vector<std::uint32_t> orbit;
};

void build_orbit(Level& L, std::size_t n) {
  L.trans.assign(n, std::nullopt);
  L.orbit.assign(1, L.point);
  L.trans[L.point] = Perm(n);
  for (std::size_t h = 0; h < L.orbit.size(); ++h) {
    std::uint32_t a = L.orbit[h];
    for (const Perm& g : L.gens) {
      std::uint32_t b = g(a);
      if (!L.trans[b]) {
        L.trans[b] = g * *L.trans[a];
        L.orbit.push_back(b);
      }
    }
  }
}

std::optional<std::uint32_t> first_moved(const Perm& p) {
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return std::nullopt;
}

// Sifts h from level `from`; returns the residue and the level where it
// dropped out (levels.size() if it passed every level).
std::pair<Perm, std::size_t> strip(const std::vector<Level>& levels, Perm h, std::size_t from) {
  for (std::size_t l = from; l < levels.size(); ++l) {
    std::uint32_t b = h(levels[l].point);
    if (!levels[l].trans[b]) return {std::move(h), l};
    h = levels[l].trans[b]->inverse() * h;
  }
  return {std::move(h), levels.size()};
}

}  // namespace

Integer group_order(const std::vector<Perm>& gens_in) {
  if (gens_in.empty()) return 1;
  const std::size_t n = gens_in.front().degree();
  std::vector<Perm> gens;
  for (const Perm& g : gens_in) {
    if (g.degree() != n) throw ParseError("generators of different degree");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return 1;

  std::vector<Level> levels;
  for (const Perm& g : gens) {
    bool fixes_base = std::all_of(levels.begin(), levels.end(),
                                  [&](const Level& L) { return g(L.point) == L.point; });
    if (fixes_base) levels.push_back(Level{*first_moved(g), {}, {}, {}});
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const Perm& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < l && fixes; ++j) fixes = g(levels[j].point) == levels[j].point;
      if (fixes) levels[l].gens.push_back(g);
    }
    build_orbit(levels[l], n);
  }

  long i = static_cast<long>(levels.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level& L = levels[i];
    for (std::size_t oi = 0; !restart && oi < L.orbit.size(); ++oi) {
      std::uint32_t beta = L.orbit[oi];
      for (std::size_t gi = 0; !restart && gi < L.gens.size(); ++gi) {
        const Perm& g = L.gens[gi];
        Perm schreier = L.trans[g(beta)]->inverse() * g * *L.trans[beta];
        auto [h, j] = strip(levels, std::move(schreier), i + 1);
        if (j == levels.size()) {
          auto moved = first_moved(h);
          if (!moved) continue;
          levels.push_back(Level{*moved, {}, {}, {}});
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels[l].gens.push_back(h);
          build_orbit(levels[l], n);
        }
        i = static_cast<long>(j);
        restart = true;
      }
    }
    if (!restart) --i;
  }

  Integer order = 1;
  for (const Level& L : levels) order *= static_cast<unsigned long>(L.orbit.size());
  return order;
}

std::vector<std::pair<unsigned long, int>> factor(Integer n) {
  std::vector<std::pair<unsigned long, int>> f;
  for (unsigned long p = 2; n > 1; ++p) {
    if (Integer(p) * p > n) {
      f.emplace_back(n.get_ui(), 1);
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  return f;
}

std::string GroupOrder::to_string() const {
  if (!label.empty()) return label;
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += " ";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

GroupOrder describe_group(const std::vector<Perm>& gens, std::size_t degree) {
  GroupOrder g;
  g.order = group_order(gens);
  g.factors = factor(g.order);
  if (degree <= 2) {
    g.label = g.order.get_str();
  } else {
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), degree);
    if (g.order == fact) g.label = "S" + std::to_string(degree);
    else if (2 * g.order == fact) g.label = "A" + std::to_string(degree);
  }
  return g;
}

int genus_rh(int k, const std::array<CycleType, 3>& types) {
  int sum = 0;
  for (const auto& t : types) {
    int total = std::accumulate(t.begin(), t.end(), 0);
    if (total != k) throw NonIntegralGenus("cycle type does not partition " + std::to_string(k));
    sum += k - static_cast<int>(t.size());
  }
  if (sum % 2 != 0) throw NonIntegralGenus("odd ramification total " + std::to_string(sum));
  int g = 1 - k + sum / 2;
  if (g < 0) throw NonIntegralGenus("negative genus " + std::to_string(g));
  return g;
}

// ------------------------------------------------------- pair conjugacy

namespace {

// Extends sigma from seed -> image along p1/q1 edges; false on conflict.
bool propagate(const Perm& p1, const Perm& q1, const Perm& p2, const Perm& q2, std::uint32_t seed,
               std::uint32_t image, std::vector<std::int64_t>& sigma, std::vector<bool>& used,
               std::vector<std::uint32_t>& assigned) {
  auto assign = [&](std::uint32_t a, std::uint32_t b) {
    if (sigma[a] >= 0) return sigma[a] == b;
    if (used[b]) return false;
    sigma[a] = b;
    used[b] = true;
    assigned.push_back(a);
    return true;
  };
  std::size_t head = assigned.size();
  if (!assign(seed, image)) return false;
  for (; head < assigned.size(); ++head) {
    std::uint32_t a = assigned[head];
    auto b = static_cast<std::uint32_t>(sigma[a]);
    if (!assign(p1(a), p2(b)) || !assign(q1(a), q2(b))) return false;
  }
  return true;
}

bool search(const Perm& p1, const Perm& q1, const Perm& p2, const Perm& q2, std::vector<std::int64_t>& sigma,
            std::vector<bool>& used) {
  std::uint32_t n = static_cast<std::uint32_t>(sigma.size());
  std::uint32_t seed = 0;
  while (seed < n && sigma[seed] >= 0) ++seed;
  if (seed == n) return true;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (used[x]) continue;
    std::vector<std::uint32_t> assigned;
    if (propagate(p1, q1, p2, q2, seed, x, sigma, used, assigned) && search(p1, q1, p2, q2, sigma, used))
      return true;
    for (auto a : assigned) {
      used[static_cast<std::size_t>(sigma[a])] = false;
      sigma[a] = -1;
    }
  }
  return false;
}

}  // namespace

bool pairs_conjugate(const Perm& p1, const Perm& q1, const Perm& p2, const Perm& q2) {
  std::size_t n = p1.degree();
  if (q1.degree() != n || p2.degree() != n || q2.degree() != n) return false;
  if (cycle_type(p1) != cycle_type(p2) || cycle_type(q1) != cycle_type(q2)) return false;
  std::vector<std::int64_t> sigma(n, -1);
  std::vector<bool> used(n, false);
  return search(p1, q1, p2, q2, sigma, used);
}

}  // namespace ico
