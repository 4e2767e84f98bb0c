#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cluskit/poly.hpp"

namespace cluskit {

enum class Var { s, t, q, x };

struct Expo {
  int s = 0, t = 0, q = 0, x = 0;
  int get(Var v) const;
  void set(Var v, int e);
  int total() const { return s + t + q + x; }
};

/* Per-variable truncation bounds, inclusive: a series knows its coefficients
   exactly for every monomial with all exponents within bounds, and stores
   nothing outside.  Binary operations work on the meet (pointwise min) of the
   operands' bounds. */
struct Trunc {
  int s = 0, t = 0, q = 0, x = 0;
  static Trunc meet(const Trunc& a, const Trunc& b);
  bool contains(const Expo& e) const;
  int get(Var v) const;
  void set(Var v, int bound);
  bool operator==(const Trunc&) const = default;
};

/* Power series in (s, t, q, x), truncated per variable, with exact rational
   coefficients.  Supports the ring operations, inversion of units, Hadamard
   product in t (slice-wise ordinary product), sound composition, and square
   roots of 1 + (positive-order terms).  Reading a coefficient beyond the
   truncation is an error, never a silent zero. */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Trunc tr) : tr_(tr) {}

  static TruncatedSeries constant(const Rat& c, Trunc tr);
  static TruncatedSeries monomial(const Rat& c, Expo e, Trunc tr);
  static TruncatedSeries variable(Var v, Trunc tr);
  static TruncatedSeries geometric(Var v, Trunc tr);  // 1/(1-v), truncated
  static TruncatedSeries hadamard_one(Trunc tr);      // Hadamard unit: 1/(1-t)
  static TruncatedSeries from_poly(const Poly& p, Trunc tr);

  const Trunc& trunc() const { return tr_; }
  bool is_zero() const { return c_.empty(); }
  size_t term_count() const { return c_.size(); }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries&);
  TruncatedSeries& operator-=(const TruncatedSeries&);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
  TruncatedSeries scaled(const Rat& k) const;
  TruncatedSeries pow(int k) const;

  // Multiplicative inverse; requires a nonzero constant term ("not invertible").
  TruncatedSeries inverse() const;

  // Hadamard product in t: the t^k slice of the result is the ordinary
  // product of the operands' t^k slices.
  TruncatedSeries hadamard(const TruncatedSeries&) const;
  TruncatedSeries hadamard_pow(long long n) const;  // n = 0 gives 1/(1-t)
  TruncatedSeries hadamard_inverse() const;

  /* this with var := g.  Sound when g = 0, or when some variable w has
     positive order in every monomial of g; then the result is exact within
     bounds min(T_f, T_g) further clamped at w by f's var-bound.  Otherwise
     low-order result coefficients would depend on unknown high-order terms
     of f, and the call fails with "unbounded substitution". */
  TruncatedSeries substitute(Var var, const TruncatedSeries& g) const;

  // sqrt of this = 1 + f with f of positive order; the branch with constant
  // term 1, via the binomial series (exact rational coefficients).
  TruncatedSeries sqrt_one_plus() const;

  // Exact division by var^k: every monomial must carry var^k; the var-bound
  // drops by k.
  TruncatedSeries divide_by(Var var, int k) const;

  // Coefficient of var^k, as a series in the remaining variables (var-bound
  // becomes 0).  k beyond the var-bound is an error.
  TruncatedSeries slice(Var var, int k) const;
  TruncatedSeries x_slice(int n) const { return slice(Var::x, n); }

  Rat coeff(const Expo& e) const;  // throws beyond truncation

  // Conversion for extracted polynomials: requires no x-powers and integer
  // coefficients within the truncation.
  Poly to_poly() const;

  // Canonical text: total degree, then lexicographic in (s, t, q, x);
  // rationals as "p/q".
  std::string str() const;

  const std::map<uint64_t, Rat>& terms() const { return c_; }
  void add_term(const Rat& c, Expo e);  // silently drops beyond-trunc terms

  static uint64_t pack(const Expo& e);
  static Expo unpack(uint64_t key);

 private:
  std::map<uint64_t, Rat> c_;
  Trunc tr_;
};

// True when a and b agree on every monomial within the meet of their bounds.
bool equal_within(const TruncatedSeries& a, const TruncatedSeries& b);

// Exact composition of a polynomial: p with var := g (the other variables
// stay themselves).  Polynomials are exact, so any g is permissible; the
// result carries meet(tr, g's bounds).
TruncatedSeries from_poly_substituted(const Poly& p, Var var,
                                      const TruncatedSeries& g, Trunc tr);

}  // namespace cluskit
