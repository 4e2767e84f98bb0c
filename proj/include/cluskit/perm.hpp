#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cluskit {

/* A permutation of {1..n} in one-line notation.  Positions and letters are
   both 1-based to match the usual combinatorial conventions; the empty
   permutation (n = 0) is a valid value and acts as the identity for
   concatenation-style products. */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);
  // One-line notation: contiguous digits for n <= 9 ("42153"), comma-separated
  // for n >= 10 ("10,2,3,...").  Accepts both forms at any size.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int pos) const { return letters_[pos - 1]; }  // 1-based
  const std::vector<int>& letters() const { return letters_; }

  Permutation inverse() const;
  std::string str() const;

  // Graded order: shorter permutations first, lexicographic within a degree.
  std::strong_ordering operator<=>(const Permutation& o) const;
  bool operator==(const Permutation& o) const { return letters_ == o.letters_; }

 private:
  std::vector<int> letters_;
};

// std(w): the permutation with the same pairwise order as w; ties broken
// left-to-right increasing, so std(145411) = 146523.
Permutation standardize(std::span<const int> word);

enum class Symmetry { reverse, complement, reverse_complement };
Permutation apply_symmetry(const Permutation&, Symmetry);

struct Composition {
  std::vector<int> parts;  // positive, summing to total()

  int total() const;
  std::vector<int> descent_set() const;  // partial sums, excluding the total
  std::string str() const;               // "(1,2,3,1,1)"

  std::strong_ordering operator<=>(const Composition&) const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
};

// Comp(pi): lengths of the maximal increasing runs.
Composition descent_composition(const Permutation&);

/* Every statistic of pi and of its inverse, computed in one pass.
   Des = { i : pi_i > pi_{i+1} },  maj = sum Des,  comaj = n*des - maj,
   pk  = #interior peaks,  lpk = pk plus a left peak at position 1 iff
   pi_1 > pi_2,  inv = #inversions; ides/imaj/icomaj/ipk/ilpk are the same
   statistics evaluated on pi^{-1}. */
struct StatRecord {
  std::vector<int> des_set;
  int des = 0, maj = 0, comaj = 0, pk = 0, lpk = 0, inv = 0;
  Composition comp;
  int ides = 0, imaj = 0, icomaj = 0, ipk = 0, ilpk = 0;
};
StatRecord stats(const Permutation&);

// All interleavings of two words with disjoint letter sets (throws
// std::invalid_argument("not disjoint") otherwise), sorted.
std::vector<std::vector<int>> shuffles(std::span<const int> a,
                                       std::span<const int> b);

// C(pi, sigma): permutations tau of length m+n whose first m letters
// standardize to pi and last n letters to sigma.  |C| = binom(m+n, m).
std::vector<Permutation> shifted_concats(const Permutation& pi,
                                         const Permutation& sigma);

}  // namespace cluskit
