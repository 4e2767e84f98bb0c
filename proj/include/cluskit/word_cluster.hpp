#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cluskit/poly.hpp"

namespace cluskit {

/* Clusters for words over a finite alphabet mirror the permutation case,
   with literal substring matches in place of standardized windows.  The
   module exists to check the cluster method in its original noncommutative
   home, where the identity can be verified word by word. */

struct WordMark {
  int start = 1;  // 1-based
  std::string word;

  int length() const { return static_cast<int>(word.size()); }
  int end() const { return start + length() - 1; }

  friend bool operator<(const WordMark& a, const WordMark& b) {
    return std::tuple(a.start, a.length(), a.word) <
           std::tuple(b.start, b.length(), b.word);
  }
  bool operator==(const WordMark&) const = default;
};

struct WordCluster {
  std::vector<WordMark> marks;  // sorted by (start, length)
  int mk() const { return static_cast<int>(marks.size()); }
};

// 1-based start positions of b as a contiguous substring of w.
std::vector<int> word_occurrences(const std::string& w, const std::string& b);

// Same chain condition as for permutations: first mark starts at 1, each
// mark starts no later than the running maximum end, and that maximum
// reaches |w|.
bool is_word_cluster(const std::string& w, const std::vector<WordMark>& marks,
                     const std::vector<std::string>& bad);

std::vector<WordCluster> word_clusters(const std::string& w,
                                       const std::vector<std::string>& bad);

/* A finite sum of words with polynomial coefficients, truncated beyond a
   maximum word length.  Multiplication concatenates; there is nothing to
   commute, so the representation is just a map from words. */
class WordSeries {
 public:
  explicit WordSeries(int maxlen);

  static WordSeries one(int maxlen);

  int maxlen() const { return maxlen_; }
  const std::map<std::string, Poly>& terms() const { return c_; }
  const Poly* find(const std::string& w) const;  // nullptr when absent

  void add(const std::string& w, const Poly& coeff);

  WordSeries& operator+=(const WordSeries&);
  WordSeries& operator-=(const WordSeries&);
  friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
  friend WordSeries operator-(WordSeries a, const WordSeries& b) { return a -= b; }
  friend WordSeries operator*(const WordSeries&, const WordSeries&);

  // (1 - h)^{-1} where this = 1 - h and h has no empty-word term; the
  // geometric series terminates at the length bound.
  WordSeries inverse_geometric() const;

 private:
  std::map<std::string, Poly> c_;
  int maxlen_;
};

struct WordMethodReport {
  bool ok = true;
  long long words_checked = 0;
  std::string detail;  // first mismatch, when any
};

// Checks, for every word w over the alphabet with |w| <= maxlen, that the
// coefficient of w in (1 - sum_a a - R(s-1))^{-1} equals s^{occ(w)}, where
// R is the cluster series of the bad-word set.
WordMethodReport verify_word_cluster_method(const std::string& alphabet,
                                            const std::vector<std::string>& bad,
                                            int maxlen);

}  // namespace cluskit
