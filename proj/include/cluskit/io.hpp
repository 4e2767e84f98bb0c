#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluskit/pattern.hpp"
#include "cluskit/poly.hpp"

namespace cluskit {

/* One computed polynomial with the context needed to reproduce it.  The JSON
   form is
     {"pattern": ["132", "231"], "family": "...", "n": 5,
      "s": 0 | "symbolic", "coeffs": [[[e_s, e_t, e_q], "coefficient"], ...]}
   with coefficients as decimal strings (safe at any size) and the coeffs
   array in the canonical term order (total degree, then higher powers
   first), so rendering is deterministic and parse(render(x)) = x. */
struct PolyRecord {
  std::vector<std::string> pattern;  // one-line notations, sorted
  std::string family;
  int n = 0;
  std::optional<Int> s_value;  // empty = symbolic
  Poly poly;

  bool operator==(const PolyRecord&) const = default;
};

std::string render_poly_json(const PolyRecord&);
// Throws std::invalid_argument on malformed input.
PolyRecord parse_poly_json(std::string_view text);

// FNV-1a over the canonical pattern-set text; stable across runs.
uint64_t pattern_hash(const PatternSet&);

/* Disk cache of computed polynomials: one JSON file per (pattern set, n,
   family), named <family>-n<k>-<hex hash>.json.  Stored entries carry a
   format version, the s specialization and the computing method; any
   mismatch on load counts as a miss, so stale entries are recomputed and
   overwritten rather than trusted. */
class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  // Reads CLUSKIT_CACHE_DIR; empty when the variable is unset.
  static std::optional<PolyCache> from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const PatternSet&, int n,
                                 const std::string& family) const;

  std::optional<Poly> load(const PatternSet&, int n,
                           const std::string& family,
                           const std::optional<Int>& s_value,
                           const std::string& method) const;
  void store(const PatternSet&, int n, const std::string& family,
             const std::optional<Int>& s_value, const std::string& method,
             const Poly&) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cluskit
