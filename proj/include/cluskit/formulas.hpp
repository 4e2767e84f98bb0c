#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluskit/pattern.hpp"
#include "cluskit/series.hpp"

namespace cluskit {

/* The joint distributions the engine computes.  For a pattern set Gamma and
   each n, the polynomial in (s, t, q) collects, over pi in S_n,
     f_plain      s^occ
     f_q          s^occ q^inv
     ides         s^occ t^{ides+1}
     ides_imaj    s^occ t^{ides+1} q^{imaj}
     ides_icomaj  s^occ t^{ides+1} q^{icomaj}
     ipk          s^occ t^{ipk+1}
     ilpk         s^occ t^{ilpk}
   and every family is the constant 1 at n = 0. */
enum class Family { f_plain, f_q, ides, ides_imaj, ides_icomaj, ipk, ilpk };

Family family_from_name(std::string_view name);  // throws on unknown names
std::string family_name(Family);
StatTag family_tag(Family);  // the matching cluster-side refinement
bool family_uses_q(Family);

// Ground truth: direct summation over all of S_n (n = 0..nmax).
std::vector<Poly> brute_distribution(const PatternSet&, int nmax, Family);
// The s = 0 column only, summing over Gamma-avoiders with pruned generation.
std::vector<Poly> brute_avoider_distribution(const PatternSet&, int nmax,
                                             Family);

/* Closed cluster generating functions exist for two shapes of single
   pattern: the monotone ones 12...m / m...21, and the patterns obtained from
   12...m by swapping the adjacent letters a, a+1 (m >= 5, 2 <= a <= m-2). */
enum class PatternShape { increasing, decreasing, transpositional, other };
struct ShapeInfo {
  PatternShape shape = PatternShape::other;
  int m = 0;
  int a = 0;  // transposed letter, transpositional shape only
};
ShapeInfo classify_pattern(const PatternSet&);

/* Sum over clusters of s^mk x^len, refined by the tag's statistic on the
   underlying permutation.  Monotone clusters sit on monotone permutations,
   so the refinement collapses to a fixed t-exponent: 1 for ides/icomaj/ipk
   (and for ilpk of m...21), 0 for ilpk of 12...m.  The decreasing cluster of
   length k carries q^{k(k-1)/2} when refined by inv.  Tags ides and
   ides_icomaj are not supported for the decreasing shape. */
TruncatedSeries monotone_cluster_gf(int m, bool decreasing, StatTag, Trunc);
/* st^2 x^m / (1 - st sum_{l=1}^{i} x^{m-l}) with i = min(a, m-a) for ides
   and ipk; one t less for ilpk; t-free for none; s paired with q for inv
   (every mark contributes exactly one inversion). */
TruncatedSeries trans_cluster_gf(int m, int a, StatTag, Trunc);

enum class ClusterSource { brute, closed };

// Refined cluster polynomials R_k for k = 0..kmax, by enumeration or from
// the closed generating functions above (closed requires a matching shape).
std::vector<Poly> cluster_polys(const PatternSet&, StatTag, int kmax,
                                ClusterSource);

// sum_{n=0}^{order} J^{*<n>} where *<n> is the n-th Hadamard power in t and
// the 0-th power is 1/(1-t).  Requires positive x-order in every monomial of
// J, which caps the powers contributing to each x-slice.
TruncatedSeries hadamard_geometric_sum(const TruncatedSeries& j, int order);

/* Polynomial extraction from a summed series H.  The descent families read
   the x^n slice and clear the denominator: times (1-t)^{n+1} for ides, times
   prod_{i=0}^{n}(1-tq^i) for (ides, icomaj); anything left above t^n (or
   q^{n(n-1)/2}) means H was not of the promised shape and raises an error.
   The peak families substitute x -> (1-t)x/(1+t) and t -> v with
   v = 2(1 - sqrt(1-t))/t - 1, peel the prefactor, and require each x^n
   coefficient to be a polynomial of t-degree <= floor((n+1)/2) for ipk,
   <= floor(n/2) for ilpk. */
Poly extract_t_refined(const TruncatedSeries& h, int n, bool with_q);
std::vector<Poly> extract_ipk(const TruncatedSeries& h, int nmax);
std::vector<Poly> extract_ilpk(const TruncatedSeries& h, int nmax);

struct EngineOptions {
  int nmax = 9;
  ClusterSource source = ClusterSource::brute;
  std::optional<Int> s_value;  // fixed s; empty keeps s symbolic
};

/* The generalized cluster engine for the four refined families: builds the
   inner series J from the cluster polynomials at s -> s-1, Hadamard-sums it,
   and extracts one polynomial per n.  The unrefined families forward to
   gj_distribution. */
std::vector<Poly> specialized_distribution(Family, const PatternSet&,
                                           const EngineOptions&);

// F = (1 - x - R(s-1))^{-1} as a convolution recurrence on coefficients of
// x^n/n! (binomials) or x^n/[n]_q! (q-binomials when with_q).
std::vector<Poly> gj_distribution(const PatternSet&, int nmax, bool with_q,
                                  const std::optional<Int>& s_value,
                                  ClusterSource);

// Closed-form route: the engine fed closed cluster input, plus the symmetry
// transports for families the decreasing shape lacks directly.  Throws for
// pattern sets with no closed form.
std::vector<Poly> closed_distribution(Family, const PatternSet&,
                                      const EngineOptions&);

// Independent route through the permutation algebra: invert
// 1 - G_1 - cluster_sum(s-1) and read the statistics off the G-basis.
std::vector<Poly> fqsym_distribution(Family, const PatternSet&, int nmax,
                                     const std::optional<Int>& s_value);

/* Named formulas.  The spec-* ids run the engine on an arbitrary pattern
   set; mono-* and dec-* take the monotone pattern length m, trans-* take
   (m, a).  Variant (a) is the engine with closed cluster input, (b) the
   simplified s = 0 inner series, (c) the Hadamard-free form with binomial
   (or q-binomial) coefficient sums. */
struct FormulaRequest {
  std::string id;
  PatternSet gamma;  // spec-* and gj-* ids
  int m = 0;         // mono-*, dec-*, trans-*
  int a = 0;         // trans-*
  int nmax = 9;
  std::optional<Int> s_value;
  ClusterSource source = ClusterSource::brute;  // spec-* ids only
};

struct FormulaOutput {
  std::vector<Poly> polys;               // n = 0..nmax
  std::optional<TruncatedSeries> inner;  // J, when the id is Hadamard-based
  std::optional<TruncatedSeries> hsum;   // the summed series
};

std::vector<std::string> formula_ids();
bool formula_exists(std::string_view id);
FormulaOutput run_formula(const FormulaRequest&);

// ---- numeric checks -------------------------------------------------------

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;  // one line of evidence per sub-check

  void pass(std::string line) { lines.push_back("  " + std::move(line)); }
  void fail(std::string line) {
    ok = false;
    lines.push_back("  MISMATCH " + std::move(line));
  }
};

// A_n(t,q) / prod_{i=0}^{n} (1 - t q^i)  =  sum_{k>=0} [k]_q^n t^k, with
// A_n the (des+1, maj) distribution over S_n, checked for n <= nmax and
// t-degree <= kmax.
CheckReport carlitz_check(int nmax, int kmax);

// f_n = f_{n-1} + ... + f_{n-order}, f_0 = 1, f_{<0} = 0.
Int fibonacci_order(int order, int n);

// #{pi in S_n(12...m) : ipk = 0} = f_n^{(m-1)} for n <= nmax.
CheckReport claim_ipk_check(int m, int nmax);
// #{pi in S_n(321) : ilpk = 1} = f_{n-1} f_n - floor((n+1)/2) for n <= nmax.
CheckReport claim_ilpk_check(int nmax);

// #{pi in S_n(123) : ides = 1} is 4 for odd n, 5 for even n (n >= 3); the
// counted permutations' inverses are rebuilt from the explicit two-run
// witness shapes and the sets compared exactly.
CheckReport prop_123_check(int nmin, int nmax);

// Positive coefficients on a contiguous t-support with c_k^2 >= c_{k-1}c_{k+1}
// throughout (which forces unimodality).  Expects a polynomial in t alone.
bool log_concave_no_gaps(const Poly&, std::string* why = nullptr);

// The five statistic identities under reverse/complement, checked over all
// of S_n:  imaj(r pi) = C(n,2) - imaj(pi),  imaj(rc pi) = icomaj(pi),
// ides(r pi) = ides(c pi) = n-1-ides(pi),  ides(rc pi) = ides(pi),
// ipk(c pi) = ipk(pi).
CheckReport symmetry_statistic_check(int nmax);

// The five distribution transports between Gamma and its reverse/complement/
// reverse-complement images, against brute force for n <= nmax.
CheckReport symmetry_polynomial_check(const PatternSet&, int nmax);

// The binomial coefficient sums in the Hadamard-free formulas match their
// generating functions, e.g. sum_k c_{J,k} t^k = 2t(1+t)^{J-1}/(1-t)^{J+1},
// for block lengths J <= 12 and k <= 8.
CheckReport binomial_formula_check();

// brute = engine(brute clusters) = closed route (where one exists), with
// symbolic s, for n <= nmax.
CheckReport three_way_check(const PatternSet&, Family, int nmax);

}  // namespace cluskit
