#pragma once

#include <functional>
#include <map>
#include <string>

#include "cluskit/pattern.hpp"
#include "cluskit/series.hpp"

namespace cluskit {

/* An element of the free quasisymmetric algebra, truncated at a degree cap:
   a finite sum  sum_pi  c_pi(s) G_pi  with polynomial coefficients in s.
   The fundamental product is  G_pi G_sigma = sum G_tau  over the shifted
   concatenations tau in C(pi, sigma); the empty permutation is the unit. */
class FQSymElement {
 public:
  explicit FQSymElement(int cap) : cap_(cap) {}

  static FQSymElement unit(int cap);
  static FQSymElement g_basis(const Permutation&, int cap);

  // sum over all |pi| <= cap of s^{occ_Gamma(pi)} G_pi
  static FQSymElement occurrence_sum(const PatternSet&, int cap);
  // sum over pi of (sum over clusters s^mk) G_pi, optionally with s -> s-1
  static FQSymElement cluster_sum(const PatternSet&, int cap, bool shift_s);

  int cap() const { return cap_; }
  const std::map<Permutation, Poly>& terms() const { return terms_; }
  Poly coeff(const Permutation&) const;
  void add(const Permutation&, const Poly&);
  bool is_zero() const { return terms_.empty(); }

  FQSymElement operator-() const;
  FQSymElement& operator+=(const FQSymElement&);
  FQSymElement& operator-=(const FQSymElement&);
  friend FQSymElement operator+(FQSymElement a, const FQSymElement& b) { return a += b; }
  friend FQSymElement operator-(FQSymElement a, const FQSymElement& b) { return a -= b; }
  friend FQSymElement operator*(const FQSymElement&, const FQSymElement&);

  // (this)^{-1} for elements of the form unit - (positive-degree part);
  // computed as the geometric series, which terminates at the cap.
  FQSymElement inverse_geometric() const;

  // one line per term, graded order: "<coeff> * G[<one-line>]"
  std::string dump() const;

  bool operator==(const FQSymElement&) const = default;

 private:
  std::map<Permutation, Poly> terms_;  // graded map: shorter degrees first
  int cap_;
};

// Ribbon basis element of the descent subalgebra: sum of G_pi over all pi
// with descent composition L.
FQSymElement ribbon(const Composition& L, int cap);

/* Quasisymmetric side: finite sums  c_L(s) F_L  over compositions, with the
   fundamental product computed through shuffles of canonical representatives
   on {1..m} and {m+1..m+n}. */
class QSymElement {
 public:
  explicit QSymElement(int cap) : cap_(cap) {}
  static QSymElement unit(int cap);
  static QSymElement f_basis(const Composition&, int cap);

  int cap() const { return cap_; }
  const std::map<Composition, Poly>& terms() const { return terms_; }
  Poly coeff(const Composition&) const;
  void add(const Composition&, const Poly&);

  QSymElement& operator+=(const QSymElement&);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator*(const QSymElement&, const QSymElement&);
  bool operator==(const QSymElement&) const = default;

 private:
  std::map<Composition, Poly> terms_;
  int cap_;
};

// The surjection G_pi -> F_{Comp(pi^{-1})}, extended linearly.
QSymElement rho(const FQSymElement&);

// A permutation with the given descent composition, on letters {1..m}:
// value blocks descend across runs, so descents land exactly on the
// composition's boundaries.
Permutation composition_rep(const Composition&);

/* The five algebra maps into truncated (t, q, x)-series.  For |pi| = n >= 1:
     plain         x^n / n!
     q_inv         q^inv x^n / [n]_q!
     ides_icomaj   t^{ides+1} q^{icomaj} x^n / prod_{i=0}^{n} (1 - t q^i)
     ipk           2^{2ipk+1} t^{ipk+1} (1+t)^{n-2ipk-1} x^n / (1-t)^{n+1}
     ilpk          2^{2ilpk} t^{ilpk} (1+t)^{n-2ilpk} x^n / (1-t)^{n+1}
   The empty permutation maps to 1 for the first two and 1/(1-t) for the
   rest, matching each formula's degenerate case.  The first two are
   multiplicative for the ordinary product, the last three for the Hadamard
   product in t. */
enum class Hom { plain, q_inv, ides_icomaj, ipk, ilpk };

bool hom_is_hadamard(Hom h);

class HomEvaluator {
 public:
  HomEvaluator(Hom h, Trunc tr) : hom_(h), tr_(tr) {}
  TruncatedSeries image(const Permutation&);
  TruncatedSeries image(const FQSymElement&);
  Trunc trunc() const { return tr_; }

 private:
  TruncatedSeries prefactor(int n);
  Hom hom_;
  Trunc tr_;
  std::map<int, TruncatedSeries> cache_;
};

TruncatedSeries apply_hom(const FQSymElement&, Hom, Trunc);

// Checks hom(G_pi G_sigma) = hom(G_pi) . hom(G_sigma) (ordinary or Hadamard
// product as appropriate) over every basis pair with |pi| + |sigma| <= N.
bool hom_is_multiplicative_check(Hom, int N, Trunc, std::string* detail = nullptr);

struct IdentityReport {
  bool ok = false;
  std::string detail;  // per-degree term counts or first mismatch
};

// The cluster identity in FQSym:
//   (1 - G_1 - cluster_sum(Gamma, s->s-1)) * occurrence_sum(Gamma) = 1,
// checked term by term through the degree cap (and from the left too).
IdentityReport verify_cluster_identity(const PatternSet&, int cap);

}  // namespace cluskit
