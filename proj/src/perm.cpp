#include "cluskit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cluskit {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : letters_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string tok(text.substr(pos, next - pos));
      if (tok.empty()) throw std::invalid_argument("bad permutation text");
      v.push_back(std::stoi(tok));
      pos = next + 1;
      if (next == text.size()) break;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(letters_.size());
  for (int i = 0; i < size(); ++i) inv[letters_[i] - 1] = i + 1;
  Permutation p;
  p.letters_ = std::move(inv);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  const bool commas = size() >= 10;
  for (int i = 0; i < size(); ++i) {
    if (commas && i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

Permutation standardize(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Stable sort by letter: equal letters keep left-to-right order, so ties
  // standardize increasing.
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(n);
  for (int rank = 0; rank < n; ++rank) out[idx[rank]] = rank + 1;
  return Permutation(std::move(out));
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> v(p.letters());
  if (s == Symmetry::reverse || s == Symmetry::reverse_complement)
    std::reverse(v.begin(), v.end());
  if (s == Symmetry::complement || s == Symmetry::reverse_complement)
    for (int& a : v) a = n + 1 - a;
  return Permutation(std::move(v));
}

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> d;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    acc += parts[i];
    d.push_back(acc);
  }
  return d;
}

std::string Composition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::strong_ordering Composition::operator<=>(const Composition& o) const {
  if (auto c = total() <=> o.total(); c != 0) return c;
  return parts <=> o.parts;
}

Composition descent_composition(const Permutation& p) {
  Composition c;
  const int n = p.size();
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    ++run;
    if (i == n || p.at(i) > p.at(i + 1)) {
      c.parts.push_back(run);
      run = 0;
    }
  }
  return c;
}

namespace {

void direct_stats(const Permutation& p, std::vector<int>& des_set, int& des,
                  int& maj, int& comaj, int& pk, int& lpk, int& inv) {
  const int n = p.size();
  des_set.clear();
  des = maj = comaj = pk = lpk = inv = 0;
  for (int i = 1; i < n; ++i) {
    if (p.at(i) > p.at(i + 1)) {
      des_set.push_back(i);
      ++des;
      maj += i;
    }
  }
  comaj = n * des - maj;
  for (int i = 2; i < n; ++i)
    if (p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)) ++pk;
  lpk = pk + (n >= 2 && p.at(1) > p.at(2) ? 1 : 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p.at(i) > p.at(j)) ++inv;
}

}  // namespace

StatRecord stats(const Permutation& p) {
  StatRecord r;
  direct_stats(p, r.des_set, r.des, r.maj, r.comaj, r.pk, r.lpk, r.inv);
  r.comp = descent_composition(p);
  Permutation q = p.inverse();
  std::vector<int> ides_set;
  int icomaj_dummy = 0, ipk2 = 0, ilpk2 = 0, iinv = 0, imaj2 = 0, ides2 = 0;
  direct_stats(q, ides_set, ides2, imaj2, icomaj_dummy, ipk2, ilpk2, iinv);
  r.ides = ides2;
  r.imaj = imaj2;
  r.icomaj = icomaj_dummy;
  r.ipk = ipk2;
  r.ilpk = ilpk2;
  return r;
}

namespace {

void shuffle_rec(std::span<const int> a, size_t ia, std::span<const int> b,
                 size_t ib, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(cur);
    return;
  }
  if (ia < a.size()) {
    cur.push_back(a[ia]);
    shuffle_rec(a, ia + 1, b, ib, cur, out);
    cur.pop_back();
  }
  if (ib < b.size()) {
    cur.push_back(b[ib]);
    shuffle_rec(a, ia, b, ib + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> shuffles(std::span<const int> a,
                                       std::span<const int> b) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw std::invalid_argument("not disjoint");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  shuffle_rec(a, 0, b, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> shifted_concats(const Permutation& pi,
                                         const Permutation& sigma) {
  const int m = pi.size(), n = sigma.size(), N = m + n;
  std::vector<Permutation> out;
  // Choose which m of the N values sit in the first block; each block then
  // carries the pattern of its factor.
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    std::vector<int> rest;
    rest.reserve(n);
    {
      size_t k = 0;
      for (int v = 1; v <= N; ++v) {
        if (k < pick.size() && pick[k] == v) {
          ++k;
          continue;
        }
        rest.push_back(v);
      }
    }
    std::vector<int> tau(N);
    for (int i = 0; i < m; ++i) tau[i] = pick[pi.at(i + 1) - 1];
    for (int j = 0; j < n; ++j) tau[m + j] = rest[sigma.at(j + 1) - 1];
    out.emplace_back(std::move(tau));
    // next m-combination of {1..N}
    int i = m - 1;
    while (i >= 0 && pick[i] == N - (m - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cluskit
