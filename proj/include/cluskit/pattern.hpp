#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "cluskit/perm.hpp"
#include "cluskit/poly.hpp"

namespace cluskit {

/* A finite set of consecutive patterns.  Every pattern must have length >= 2
   (a length-1 pattern would occur everywhere and make avoidance trivial);
   the empty set is legal and everything avoids it. */
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);
  static PatternSet parse(std::string_view csv);  // "123" or "132,231"

  const std::vector<Permutation>& patterns() const { return pats_; }
  const std::vector<int>& lengths() const { return lengths_; }  // distinct, sorted
  bool empty() const { return pats_.empty(); }
  int min_len() const;
  int max_len() const;
  bool matches_window(std::span<const int> w) const;  // std(w) in the set
  std::string str() const;                            // sorted, comma-joined

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Permutation> pats_;  // sorted, distinct
  std::vector<int> lengths_;
};

/* One marked occurrence: the window of length |pattern| starting at the
   1-based position `start` standardizes to `pattern`. */
struct MarkedOccurrence {
  int start = 1;
  Permutation pattern;

  int length() const { return pattern.size(); }
  int end() const { return start + pattern.size() - 1; }
  auto operator<=>(const MarkedOccurrence&) const = default;
};

std::vector<MarkedOccurrence> occurrences(const Permutation&, const PatternSet&);
long long count_occurrences(const Permutation&, const PatternSet&);

/* A cluster: a nonempty set of marked occurrences whose first mark starts at
   position 1, whose last mark ends at position n, and where, scanning marks
   sorted by (start, length), each mark starts no later than the maximum end
   of the earlier marks.  Equivalently, the marks cover [1, n] and straddle
   every split point, so the marked permutation does not factor. */
struct Cluster {
  std::vector<MarkedOccurrence> marks;  // sorted by (start, length)
  int mk() const { return static_cast<int>(marks.size()); }
};

std::vector<Cluster> clusters(const Permutation&, const PatternSet&);
bool is_cluster(const Permutation&, const std::vector<MarkedOccurrence>&,
                const PatternSet&);

// Self-overlap set of a single pattern: those i in [m-1] for which the last
// m-i letters and the first m-i letters share a standardization.
std::set<int> overlap_set(const Permutation& sigma);

long long count_avoiders(int n, const PatternSet&);

// Drives `visit` over every Gamma-avoider of length n, generated in
// lexicographic order with subtree pruning on prefixes that already end in an
// occurrence.
template <typename F>
void for_each_avoider(int n, const PatternSet& gamma, F&& visit);

// Drives `visit(perm, clusters)` over permutations that admit at least one
// cluster.  Generation is lexicographic with two sound prunings derived from
// the cluster definition: a prefix dies once no occurrence starts at position
// 1, and once some interior split point can no longer be straddled.
template <typename F>
void for_each_cluster_bearing(int n, const PatternSet& gamma, F&& visit);

/* Statistic refinement attached to a cluster or distribution polynomial:
   which extra variables multiply s^mk (resp. s^occ).
     none        1
     inv         q^inv
     ides        t^{ides+1}
     ides_icomaj t^{ides+1} q^{icomaj}
     ipk         t^{ipk+1}
     ilpk        t^{ilpk}        (no +1 by convention)          */
enum class StatTag { none, inv, ides, ides_icomaj, ipk, ilpk };

Poly stat_weight(const StatRecord&, StatTag);

// Sum over clusters of length n: weight(pi) * s^mk, by direct enumeration.
Poly cluster_polynomial(const PatternSet&, int n, StatTag);

// --- template implementations ----------------------------------------------

namespace detail {

template <typename Check, typename Leaf>
void lex_generate(int n, Check&& check, Leaf&& leaf) {
  std::vector<int> perm;
  std::vector<char> used(n + 1, 0);
  perm.reserve(n);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(perm.size()) == n) {
      leaf(perm);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      perm.push_back(v);
      if (check(perm)) self(self);
      perm.pop_back();
      used[v] = 0;
    }
  };
  if (n == 0) {
    leaf(perm);
    return;
  }
  rec(rec);
}

bool window_match(const PatternSet&, const std::vector<int>& prefix, int start,
                  int len);  // 1-based start, window inside prefix

}  // namespace detail

template <typename F>
void for_each_avoider(int n, const PatternSet& gamma, F&& visit) {
  if (n < 0) throw std::invalid_argument("negative length");
  detail::lex_generate(
      n,
      [&](const std::vector<int>& prefix) {
        const int p = static_cast<int>(prefix.size());
        for (int len : gamma.lengths())
          if (p >= len && detail::window_match(gamma, prefix, p - len + 1, len))
            return false;
        return true;
      },
      [&](const std::vector<int>& full) { visit(Permutation(full)); });
}

template <typename F>
void for_each_cluster_bearing(int n, const PatternSet& gamma, F&& visit) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (gamma.empty() || n < gamma.min_len()) return;
  const int maxlen = gamma.max_len();
  auto straddled = [&](const std::vector<int>& prefix, int j) {
    // some occurrence, fully inside the prefix, covers positions j and j+1
    const int p = static_cast<int>(prefix.size());
    for (int len : gamma.lengths())
      for (int start = std::max(1, j - len + 2); start <= j; ++start)
        if (start + len - 1 <= p &&
            detail::window_match(gamma, prefix, start, len))
          return true;
    return false;
  };
  detail::lex_generate(
      n,
      [&](const std::vector<int>& prefix) {
        const int p = static_cast<int>(prefix.size());
        // a cluster needs an occurrence at position 1
        if (p == maxlen) {
          bool any = false;
          for (int len : gamma.lengths())
            if (len <= p && detail::window_match(gamma, prefix, 1, len)) {
              any = true;
              break;
            }
          if (!any) return false;
        }
        // split point j = p - maxlen: every window that could straddle it is
        // now fully visible, so it must already be straddled
        const int j = p - maxlen;
        if (j >= 1 && !straddled(prefix, j)) return false;
        return true;
      },
      [&](const std::vector<int>& full) {
        Permutation pi(full);
        auto cl = clusters(pi, gamma);
        if (!cl.empty()) visit(pi, cl);
      });
}

}  // namespace cluskit
