#include "cluskit/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluskit {

PatternSet::PatternSet(std::vector<Permutation> patterns) : pats_(std::move(patterns)) {
  for (const auto& p : pats_)
    if (p.size() < 2) throw std::invalid_argument("pattern length must be >= 2");
  std::sort(pats_.begin(), pats_.end());
  pats_.erase(std::unique(pats_.begin(), pats_.end()), pats_.end());
  for (const auto& p : pats_)
    if (lengths_.empty() || lengths_.back() != p.size()) lengths_.push_back(p.size());
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
}

PatternSet PatternSet::parse(std::string_view csv) {
  std::vector<Permutation> pats;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t next = csv.find(',', pos);
    if (next == std::string_view::npos) next = csv.size();
    if (next > pos) pats.push_back(Permutation::parse(csv.substr(pos, next - pos)));
    if (next == csv.size()) break;
    pos = next + 1;
  }
  return PatternSet(std::move(pats));
}

int PatternSet::min_len() const {
  if (pats_.empty()) throw std::logic_error("empty pattern set");
  return lengths_.front();
}

int PatternSet::max_len() const {
  if (pats_.empty()) throw std::logic_error("empty pattern set");
  return lengths_.back();
}

namespace {

// Ranks of a window with distinct letters, written into `out` (1-based
// ranks); avoids the allocation in standardize() for hot sweeps.
inline void window_ranks(std::span<const int> w, int* out) {
  const int m = static_cast<int>(w.size());
  for (int i = 0; i < m; ++i) {
    int r = 1;
    for (int j = 0; j < m; ++j)
      if (w[j] < w[i]) ++r;
    out[i] = r;
  }
}

constexpr int kMaxPatternLen = 16;

}  // namespace

bool PatternSet::matches_window(std::span<const int> w) const {
  const int m = static_cast<int>(w.size());
  if (m > kMaxPatternLen) {
    Permutation st = standardize(w);
    return std::binary_search(pats_.begin(), pats_.end(), st);
  }
  int ranks[kMaxPatternLen];
  window_ranks(w, ranks);
  for (const auto& p : pats_) {
    if (p.size() != m) continue;
    bool eq = true;
    for (int i = 0; i < m && eq; ++i) eq = p.letters()[i] == ranks[i];
    if (eq) return true;
  }
  return false;
}

std::string PatternSet::str() const {
  std::string out;
  for (size_t i = 0; i < pats_.size(); ++i) {
    if (i) out += ',';
    out += pats_[i].str();
  }
  return out;
}

namespace detail {

bool window_match(const PatternSet& g, const std::vector<int>& prefix, int start,
                  int len) {
  return g.matches_window(std::span<const int>(prefix).subspan(start - 1, len));
}

}  // namespace detail

std::vector<MarkedOccurrence> occurrences(const Permutation& pi,
                                          const PatternSet& g) {
  std::vector<MarkedOccurrence> out;
  const int n = pi.size();
  for (int len : g.lengths()) {
    for (int start = 1; start + len - 1 <= n; ++start) {
      std::span<const int> w(pi.letters().data() + start - 1, size_t(len));
      if (g.matches_window(w)) out.push_back({start, standardize(w)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long count_occurrences(const Permutation& pi, const PatternSet& g) {
  long long c = 0;
  const int n = pi.size();
  for (int len : g.lengths())
    for (int start = 1; start + len - 1 <= n; ++start)
      if (g.matches_window(
              std::span<const int>(pi.letters().data() + start - 1, size_t(len))))
        ++c;
  return c;
}

bool is_cluster(const Permutation& pi, const std::vector<MarkedOccurrence>& marks,
                const PatternSet& g) {
  if (marks.empty()) return false;
  auto sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  const int n = pi.size();
  int max_end = 0;
  for (const auto& mk : sorted) {
    if (mk.start < 1 || mk.end() > n) return false;
    std::span<const int> w(pi.letters().data() + mk.start - 1, size_t(mk.length()));
    if (standardize(w) != mk.pattern ||
        !std::binary_search(g.patterns().begin(), g.patterns().end(), mk.pattern))
      return false;
    if (max_end == 0) {
      if (mk.start != 1) return false;  // first mark anchors the left end
    } else if (mk.start > max_end) {
      return false;  // split point at max_end is not straddled
    }
    max_end = std::max(max_end, mk.end());
  }
  return max_end == n;  // some mark reaches the right end
}

std::vector<Cluster> clusters(const Permutation& pi, const PatternSet& g) {
  std::vector<Cluster> out;
  if (g.empty() || pi.empty()) return out;
  const auto occ = occurrences(pi, g);
  const int n = pi.size();
  // DFS over the occurrence list (sorted by (start, length)); each chosen mark
  // must start no later than the running maximum end, so subsets are exactly
  // the covering chains.  Occurrences are index-ordered, so each subset is
  // produced once.
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int idx, int max_end) -> void {
    if (max_end == n) {
      Cluster c;
      c.marks.reserve(chosen.size());
      for (int i : chosen) c.marks.push_back(occ[i]);
      out.push_back(std::move(c));
    }
    for (int next = idx + 1; next < static_cast<int>(occ.size()); ++next) {
      if (occ[next].start > max_end) break;  // sorted by start: no later fit
      chosen.push_back(next);
      self(self, next, std::max(max_end, occ[next].end()));
      chosen.pop_back();
    }
  };
  for (int first = 0; first < static_cast<int>(occ.size()); ++first) {
    if (occ[first].start != 1) break;
    chosen.push_back(first);
    rec(rec, first, occ[first].end());
    chosen.pop_back();
  }
  return out;
}

std::set<int> overlap_set(const Permutation& sigma) {
  std::set<int> out;
  const int m = sigma.size();
  const auto& w = sigma.letters();
  for (int i = 1; i <= m - 1; ++i) {
    const int k = m - i;
    Permutation suf = standardize(std::span<const int>(w.data() + i, size_t(k)));
    Permutation pre = standardize(std::span<const int>(w.data(), size_t(k)));
    if (suf == pre) out.insert(i);
  }
  return out;
}

long long count_avoiders(int n, const PatternSet& g) {
  if (n < 0) throw std::invalid_argument("negative length");
  long long count = 0;
  detail::lex_generate(
      n,
      [&](const std::vector<int>& prefix) {
        const int p = static_cast<int>(prefix.size());
        for (int len : g.lengths())
          if (p >= len && detail::window_match(g, prefix, p - len + 1, len))
            return false;
        return true;
      },
      [&](const std::vector<int>&) { ++count; });
  return count;
}

Poly stat_weight(const StatRecord& r, StatTag tag) {
  switch (tag) {
    case StatTag::none:
      return Poly::constant(1);
    case StatTag::inv:
      return Poly::monomial(1, 0, 0, r.inv);
    case StatTag::ides:
      return Poly::monomial(1, 0, r.ides + 1, 0);
    case StatTag::ides_icomaj:
      return Poly::monomial(1, 0, r.ides + 1, r.icomaj);
    case StatTag::ipk:
      return Poly::monomial(1, 0, r.ipk + 1, 0);
    case StatTag::ilpk:
      return Poly::monomial(1, 0, r.ilpk, 0);
  }
  throw std::logic_error("bad stat tag");
}

Poly cluster_polynomial(const PatternSet& g, int n, StatTag tag) {
  if (n < 0) throw std::invalid_argument("negative length");
  Poly total;
  for_each_cluster_bearing(n, g, [&](const Permutation& pi,
                                     const std::vector<Cluster>& cl) {
    Poly sc;  // sum over clusters of s^mk
    for (const auto& c : cl) sc.add_term(1, c.mk(), 0, 0);
    total += sc * stat_weight(stats(pi), tag);
  });
  return total;
}

}  // namespace cluskit
