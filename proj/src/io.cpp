#include "cluskit/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace cluskit {

namespace {

using nlohmann::json;

constexpr int kCacheVersion = 1;

// Same term order as Poly::str(): total degree, then higher powers first.
std::vector<uint64_t> canonical_keys(const Poly& p) {
  std::vector<uint64_t> keys;
  keys.reserve(p.term_count());
  for (const auto& [k, c] : p.terms()) keys.push_back(k);
  auto total = [](uint64_t k) {
    int es, et, eq;
    Poly::unpack(k, es, et, eq);
    return es + et + eq;
  };
  std::sort(keys.begin(), keys.end(), [&](uint64_t a, uint64_t b) {
    if (total(a) != total(b)) return total(a) < total(b);
    return a > b;
  });
  return keys;
}

json record_to_json(const PolyRecord& rec) {
  json j;
  j["pattern"] = rec.pattern;
  j["family"] = rec.family;
  j["n"] = rec.n;
  if (!rec.s_value) {
    j["s"] = "symbolic";
  } else if (*rec.s_value >= std::numeric_limits<int64_t>::min() &&
             *rec.s_value <= std::numeric_limits<int64_t>::max()) {
    j["s"] = rec.s_value->convert_to<int64_t>();
  } else {
    j["s"] = rec.s_value->str();  // too large for a JSON number
  }
  json coeffs = json::array();
  for (uint64_t key : canonical_keys(rec.poly)) {
    int es, et, eq;
    Poly::unpack(key, es, et, eq);
    coeffs.push_back(json::array(
        {json::array({es, et, eq}), rec.poly.coeff(es, et, eq).str()}));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

PolyRecord record_from_json(const json& j) {
  PolyRecord rec;
  rec.pattern = j.at("pattern").get<std::vector<std::string>>();
  rec.family = j.at("family").get<std::string>();
  rec.n = j.at("n").get<int>();
  const json& s = j.at("s");
  if (s.is_string()) {
    if (std::string text = s.get<std::string>(); text != "symbolic")
      rec.s_value = Int(text);
  } else if (s.is_number_integer() || s.is_number_unsigned()) {
    rec.s_value = Int(s.dump());  // dump() of an integer is its decimal text
  } else {
    throw std::invalid_argument("bad s field");
  }
  for (const json& term : j.at("coeffs")) {
    const json& e = term.at(0);
    rec.poly.add_term(Int(term.at(1).get<std::string>()), e.at(0).get<int>(),
                      e.at(1).get<int>(), e.at(2).get<int>());
  }
  return rec;
}

}  // namespace

std::string render_poly_json(const PolyRecord& rec) {
  return record_to_json(rec).dump(2);
}

PolyRecord parse_poly_json(std::string_view text) {
  try {
    return record_from_json(json::parse(text));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") +
                                e.what());
  }
}

uint64_t pattern_hash(const PatternSet& gamma) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : gamma.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<PolyCache> PolyCache::from_environment() {
  const char* dir = std::getenv("CLUSKIT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return PolyCache(std::filesystem::path(dir));
}

std::filesystem::path PolyCache::path_for(const PatternSet& gamma, int n,
                                          const std::string& family) const {
  std::ostringstream name;
  name << family << "-n" << n << "-" << std::hex << pattern_hash(gamma)
       << ".json";
  return dir_ / name.str();
}

std::optional<Poly> PolyCache::load(const PatternSet& gamma, int n,
                                    const std::string& family,
                                    const std::optional<Int>& s_value,
                                    const std::string& method) const {
  std::ifstream in(path_for(gamma, n, family));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    json j = json::parse(buf.str());
    if (j.value("version", -1) != kCacheVersion) return std::nullopt;
    if (j.value("method", std::string()) != method) return std::nullopt;
    PolyRecord rec = record_from_json(j);
    std::vector<std::string> want;
    for (const auto& p : gamma.patterns()) want.push_back(p.str());
    if (rec.pattern != want || rec.family != family || rec.n != n ||
        rec.s_value != s_value)
      return std::nullopt;
    return rec.poly;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void PolyCache::store(const PatternSet& gamma, int n,
                      const std::string& family,
                      const std::optional<Int>& s_value,
                      const std::string& method, const Poly& poly) const {
  PolyRecord rec;
  for (const auto& p : gamma.patterns()) rec.pattern.push_back(p.str());
  rec.family = family;
  rec.n = n;
  rec.s_value = s_value;
  rec.poly = poly;
  json j = record_to_json(rec);
  j["version"] = kCacheVersion;
  j["method"] = method;
  std::filesystem::create_directories(dir_);
  std::ofstream out(path_for(gamma, n, family));
  if (!out)
    throw std::runtime_error("cannot write cache file " +
                             path_for(gamma, n, family).string());
  out << j.dump(2) << "\n";
}

}  // namespace cluskit
