#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cluskit/io.hpp"

using namespace cluskit;
namespace fs = std::filesystem;

namespace {

PolyRecord sample_record() {
  PolyRecord rec;
  rec.pattern = {"123"};
  rec.family = "ides";
  rec.n = 4;
  rec.s_value = Int(0);
  rec.poly = Poly::parse("5*t^2 + 11*t^3 + t^4");
  return rec;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cluskit-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("json rendering is canonical and round-trips") {
  auto rec = sample_record();
  std::string text = render_poly_json(rec);
  CHECK(text.find("\"family\": \"ides\"") != std::string::npos);
  CHECK(text.find("\"symbolic\"") == std::string::npos);
  CHECK(parse_poly_json(text) == rec);
  // rendering is deterministic
  CHECK(render_poly_json(parse_poly_json(text)) == text);

  rec.s_value.reset();
  std::string sym = render_poly_json(rec);
  CHECK(sym.find("\"s\": \"symbolic\"") != std::string::npos);
  CHECK(parse_poly_json(sym) == rec);

  // values outside int64 survive as decimal strings
  rec.s_value = Int("123456789012345678901234567890");
  CHECK(parse_poly_json(render_poly_json(rec)) == rec);
  rec.s_value = Int(-7);
  CHECK(parse_poly_json(render_poly_json(rec)) == rec);

  // huge coefficients survive too
  rec.poly = Poly::constant(factorial(40));
  CHECK(parse_poly_json(render_poly_json(rec)) == rec);
}

TEST_CASE("json parsing failures") {
  CHECK_THROWS_AS(parse_poly_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_json(R"({"pattern":["123"],"family":"ides","n":1,
      "s":1.5,"coeffs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_json(R"({"pattern":["123"],"family":"ides","n":1,
      "s":0,"coeffs":[[[0,0],"1"]]})"),
                  std::invalid_argument);
}

TEST_CASE("pattern hash is stable") {
  auto g = PatternSet::parse("132,231");
  CHECK(pattern_hash(g) == pattern_hash(PatternSet::parse("231,132")));
  CHECK(pattern_hash(g) != pattern_hash(PatternSet::parse("132")));
  // FNV-1a of the canonical text, frozen so cache names never move
  CHECK(pattern_hash(PatternSet::parse("123")) == 0x456fc2181822c4dbULL);
}

TEST_CASE("cache stores and reloads") {
  TempDir tmp;
  PolyCache cache(tmp.path);
  auto g = PatternSet::parse("123");
  Poly p = Poly::parse("4*t^2 + t^3");

  CHECK(!cache.load(g, 3, "ides", Int(0), "brute"));
  cache.store(g, 3, "ides", Int(0), "brute", p);
  auto back = cache.load(g, 3, "ides", Int(0), "brute");
  REQUIRE(back.has_value());
  CHECK(*back == p);
  CHECK(fs::exists(cache.path_for(g, 3, "ides")));

  // any context mismatch is a miss, not an error
  CHECK(!cache.load(g, 3, "ides", Int(1), "brute"));
  CHECK(!cache.load(g, 3, "ides", std::nullopt, "brute"));
  CHECK(!cache.load(g, 3, "ides", Int(0), "spec"));
  CHECK(!cache.load(PatternSet::parse("321"), 3, "ides", Int(0), "brute"));
  CHECK(!cache.load(g, 4, "ides", Int(0), "brute"));

  // symbolic entries are distinct from specialized ones
  cache.store(g, 3, "ipk", std::nullopt, "spec", p);
  CHECK(cache.load(g, 3, "ipk", std::nullopt, "spec").has_value());

  // corrupt and version-stale files count as misses
  {
    std::ofstream out(cache.path_for(g, 3, "ides"));
    out << "{ truncated";
  }
  CHECK(!cache.load(g, 3, "ides", Int(0), "brute"));
  cache.store(g, 3, "ides", Int(0), "brute", p);
  {
    std::ifstream in(cache.path_for(g, 3, "ides"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("\"version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "\"version\": 0");
    std::ofstream out(cache.path_for(g, 3, "ides"));
    out << text;
  }
  CHECK(!cache.load(g, 3, "ides", Int(0), "brute"));
  // a fresh store heals the stale entry
  cache.store(g, 3, "ides", Int(0), "brute", p);
  CHECK(cache.load(g, 3, "ides", Int(0), "brute").has_value());
}

TEST_CASE("cache directory from the environment") {
  ::unsetenv("CLUSKIT_CACHE_DIR");
  CHECK(!PolyCache::from_environment().has_value());
  ::setenv("CLUSKIT_CACHE_DIR", "", 1);
  CHECK(!PolyCache::from_environment().has_value());
  ::setenv("CLUSKIT_CACHE_DIR", "/tmp/cluskit-cache", 1);
  auto cache = PolyCache::from_environment();
  REQUIRE(cache.has_value());
  CHECK(cache->dir() == fs::path("/tmp/cluskit-cache"));
  ::unsetenv("CLUSKIT_CACHE_DIR");
}
