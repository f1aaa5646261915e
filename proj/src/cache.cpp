#include "icosa/cache.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "icosa/errors.hpp"

namespace ico {

namespace {

constexpr std::string_view kMagic = "# icosa-S v1 group=";

std::string line_of(const MTuple& m) {
  std::string s;
  for (int i = 0; i < 7; ++i) {
    if (i) s += ';';
    s += m.value(i).to_string();
  }
  return s;
}

}  // namespace

std::string format_cache(const GroupTable& G, const TripleSet& S) {
  std::vector<std::string> lines;
  lines.reserve(S.size());
  for (const MTuple& m : S.tuples()) lines.push_back(line_of(m));
  std::sort(lines.begin(), lines.end());
  std::string out = std::string(kMagic) + G.hash() + " count=" + std::to_string(S.size()) + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::optional<TripleSet> parse_cache(const GroupTable& G, const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind(kMagic, 0) != 0) throw CacheError("missing header");
  auto rest = header.substr(kMagic.size());
  auto space = rest.find(' ');
  if (rest.substr(0, space) != G.hash()) return std::nullopt;
  constexpr std::string_view kCount = " count=";
  if (space == std::string::npos || rest.compare(space, kCount.size(), kCount) != 0)
    throw CacheError("header has no count");
  std::size_t declared = 0;
  try {
    declared = std::stoul(rest.substr(space + kCount.size()));
  } catch (const std::exception&) {
    throw CacheError("bad count in header");
  }

  std::vector<MTuple> tuples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<GoldenNum, 7> v;
    std::size_t start = 0;
    for (int i = 0; i < 7; ++i) {
      auto semi = line.find(';', start);
      if ((i < 6) == (semi == std::string::npos)) throw CacheError("expected 7 fields: " + line);
      try {
        v[i] = GoldenNum::parse(std::string_view(line).substr(start, semi - start));
      } catch (const Error& e) {
        throw CacheError(e.what());
      }
      start = semi + 1;
    }
    try {
      tuples.push_back(MTuple::from_values(v));
    } catch (const NotIcosahedralTrace& e) {
      throw CacheError(e.what());
    }
  }
  std::sort(tuples.begin(), tuples.end());
  if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end()) throw CacheError("duplicate lines");
  // also catches a truncated file
  if (tuples.size() != declared)
    throw CacheError(std::to_string(tuples.size()) + " lines, header says " + std::to_string(declared));
  return TripleSet(std::move(tuples), {}, 0);
}

void write_cache(const std::string& path, const GroupTable& G, const TripleSet& S) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << format_cache(G, S);
  }
  std::filesystem::rename(tmp, p);
}

std::optional<TripleSet> read_cache(const std::string& path, const GroupTable& G) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cache(G, buf.str());
}

}  // namespace ico
