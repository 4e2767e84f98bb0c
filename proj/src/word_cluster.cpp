#include "cluskit/word_cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluskit {

std::vector<int> word_occurrences(const std::string& w, const std::string& b) {
  std::vector<int> out;
  if (b.empty() || b.size() > w.size()) return out;
  for (size_t pos = 0; pos + b.size() <= w.size(); ++pos)
    if (w.compare(pos, b.size(), b) == 0) out.push_back(static_cast<int>(pos) + 1);
  return out;
}

namespace {

void check_bad_words(const std::vector<std::string>& bad) {
  for (const auto& b : bad)
    if (b.size() < 2) throw std::invalid_argument("bad word length must be >= 2");
}

std::vector<WordMark> all_marks(const std::string& w,
                                const std::vector<std::string>& bad) {
  std::vector<WordMark> out;
  for (const auto& b : bad)
    for (int start : word_occurrences(w, b)) out.push_back({start, b});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_word_cluster(const std::string& w, const std::vector<WordMark>& marks,
                     const std::vector<std::string>& bad) {
  check_bad_words(bad);
  if (marks.empty()) return false;
  auto sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(w.size());
  int max_end = 0;
  for (const auto& mk : sorted) {
    if (mk.start < 1 || mk.end() > n) return false;
    if (std::find(bad.begin(), bad.end(), mk.word) == bad.end() ||
        w.compare(mk.start - 1, mk.word.size(), mk.word) != 0)
      return false;
    if (max_end == 0) {
      if (mk.start != 1) return false;
    } else if (mk.start > max_end) {
      return false;
    }
    max_end = std::max(max_end, mk.end());
  }
  return max_end == n;
}

std::vector<WordCluster> word_clusters(const std::string& w,
                                       const std::vector<std::string>& bad) {
  check_bad_words(bad);
  std::vector<WordCluster> out;
  if (w.empty()) return out;
  const auto occ = all_marks(w, bad);
  const int n = static_cast<int>(w.size());
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int idx, int max_end) -> void {
    if (max_end == n) {
      WordCluster c;
      c.marks.reserve(chosen.size());
      for (int i : chosen) c.marks.push_back(occ[i]);
      out.push_back(std::move(c));
    }
    for (int next = idx + 1; next < static_cast<int>(occ.size()); ++next) {
      if (occ[next].start > max_end) break;
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

WordSeries::WordSeries(int maxlen) : maxlen_(maxlen) {
  if (maxlen < 0) throw std::invalid_argument("negative length bound");
}

WordSeries WordSeries::one(int maxlen) {
  WordSeries r(maxlen);
  r.c_.emplace("", Poly::constant(1));
  return r;
}

const Poly* WordSeries::find(const std::string& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? nullptr : &it->second;
}

void WordSeries::add(const std::string& w, const Poly& coeff) {
  if (static_cast<int>(w.size()) > maxlen_ || coeff.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

WordSeries& WordSeries::operator+=(const WordSeries& o) {
  maxlen_ = std::min(maxlen_, o.maxlen_);
  std::erase_if(c_, [&](const auto& kv) {
    return static_cast<int>(kv.first.size()) > maxlen_;
  });
  for (const auto& [w, p] : o.c_) add(w, p);
  return *this;
}

WordSeries& WordSeries::operator-=(const WordSeries& o) {
  maxlen_ = std::min(maxlen_, o.maxlen_);
  std::erase_if(c_, [&](const auto& kv) {
    return static_cast<int>(kv.first.size()) > maxlen_;
  });
  for (const auto& [w, p] : o.c_) add(w, -p);
  return *this;
}

WordSeries operator*(const WordSeries& a, const WordSeries& b) {
  WordSeries r(std::min(a.maxlen_, b.maxlen_));
  for (const auto& [wa, pa] : a.c_) {
    if (static_cast<int>(wa.size()) > r.maxlen_) continue;
    for (const auto& [wb, pb] : b.c_) {
      // lexicographic map order is not length order, so skip, don't stop
      if (static_cast<int>(wa.size() + wb.size()) > r.maxlen_) continue;
      r.add(wa + wb, pa * pb);
    }
  }
  return r;
}

WordSeries WordSeries::inverse_geometric() const {
  const Poly* unit = find("");
  if (unit == nullptr || *unit != Poly::constant(1))
    throw std::domain_error("inverse needs constant term 1");
  WordSeries h(maxlen_);  // h = 1 - this, so no empty-word term
  for (const auto& [w, p] : c_) {
    if (w.empty()) continue;
    h.add(w, -p);
  }
  WordSeries acc = one(maxlen_);
  WordSeries power = one(maxlen_);
  for (int k = 1; k <= maxlen_; ++k) {
    power = power * h;
    if (power.terms().empty()) break;
    acc += power;
  }
  return acc;
}

namespace {

template <typename F>
void for_each_word(const std::string& alphabet, int maxlen, F&& visit) {
  std::string w;
  auto rec = [&](auto&& self) -> void {
    visit(w);
    if (static_cast<int>(w.size()) == maxlen) return;
    for (char a : alphabet) {
      w.push_back(a);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

WordMethodReport verify_word_cluster_method(const std::string& alphabet,
                                            const std::vector<std::string>& bad,
                                            int maxlen) {
  check_bad_words(bad);
  for (const auto& b : bad)
    for (char ch : b)
      if (alphabet.find(ch) == std::string::npos)
        throw std::invalid_argument("bad word uses a letter outside the alphabet");

  // 1 - sum_a a - R(s-1), then invert.
  WordSeries lhs = WordSeries::one(maxlen);
  for (char a : alphabet) lhs.add(std::string(1, a), -Poly::constant(1));
  for_each_word(alphabet, maxlen, [&](const std::string& w) {
    if (w.empty()) return;
    Poly sum_mk;  // sum over clusters of s^mk
    for (const auto& c : word_clusters(w, bad)) sum_mk.add_term(1, c.mk(), 0, 0);
    if (!sum_mk.is_zero()) lhs.add(w, -sum_mk.shift_s_down());
  });
  const WordSeries inv = lhs.inverse_geometric();

  WordMethodReport rep;
  for_each_word(alphabet, maxlen, [&](const std::string& w) {
    if (!rep.ok) return;
    ++rep.words_checked;
    Poly expect;
    long long occ = 0;
    for (const auto& b : bad) occ += static_cast<long long>(word_occurrences(w, b).size());
    expect.add_term(1, static_cast<int>(occ), 0, 0);
    const Poly* got = inv.find(w);
    if (got == nullptr || *got != expect) {
      rep.ok = false;
      rep.detail = "word " + (w.empty() ? std::string("(empty)") : w) +
                   ": expected " + expect.str() + ", got " +
                   (got ? got->str() : std::string("0"));
    }
  });
  return rep;
}

}  // namespace cluskit
