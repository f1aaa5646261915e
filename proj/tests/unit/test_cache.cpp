#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "fixture.hpp"
#include "icosa/cache.hpp"
#include "icosa/errors.hpp"

using namespace ico;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / ("icosa_test_" + std::string(name))).string();
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("round trip") {
    const auto& P = fixture::pipeline();
    std::string text = format_cache(P.G, P.S);
    auto back = parse_cache(P.G, text);
    REQUIRE(back);
    CHECK(back->tuples() == P.S.tuples());
    CHECK_FALSE(back->has_reps());
    CHECK(format_cache(P.G, *back) == text);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(P.S.size() + 1));
  }

  TEST_CASE("files") {
    const auto& P = fixture::pipeline();
    std::string path = temp_path("roundtrip.txt");
    write_cache(path, P.G, P.S);
    auto back = read_cache(path, P.G);
    REQUIRE(back);
    CHECK(back->size() == P.S.size());
    std::filesystem::remove(path);
    CHECK_FALSE(read_cache(path, P.G));
  }

  TEST_CASE("stale header is ignored") {
    const auto& P = fixture::pipeline();
    std::string text = format_cache(P.G, P.S);
    auto pos = text.find(P.G.hash());
    REQUIRE(pos != std::string::npos);
    text[pos] = text[pos] == '0' ? '1' : '0';
    CHECK_FALSE(parse_cache(P.G, text));
  }

  TEST_CASE("malformed files are rejected") {
    const auto& P = fixture::pipeline();
    std::string text = format_cache(P.G, P.S);
    std::string header = text.substr(0, text.find('\n') + 1);
    CHECK_THROWS_AS(parse_cache(P.G, header + "garbage\n"), CacheError);
    CHECK_THROWS_AS(parse_cache(P.G, header), CacheError);  // wrong count
    std::string truncated = text.substr(0, text.size() / 2);
    CHECK_THROWS_AS(parse_cache(P.G, truncated), CacheError);
    CHECK_THROWS_AS(parse_cache(P.G, ""), CacheError);
  }

  TEST_CASE("pipeline reuses a valid cache") {
    std::string path = temp_path("pipeline.txt");
    std::filesystem::remove(path);
    Pipeline first = run_pipeline({0, path});
    CHECK_FALSE(first.from_cache);
    Pipeline second = run_pipeline({0, path});
    CHECK(second.from_cache);
    CHECK(second.S.tuples() == first.S.tuples());
    CHECK(second.orbits.count() == 52);
    std::filesystem::remove(path);
  }
}
