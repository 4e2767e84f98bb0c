#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "cluskit/numeric.hpp"

namespace cluskit {

/* Exact polynomials with integer coefficients in the statistic variables
   s (marked/actual occurrences), t (descent-type statistic) and q (maj-type
   statistic).  Sparse representation; exponents are packed into a 64-bit key
   so the natural map order is lexicographic in (s, t, q). */
class Poly {
 public:
  Poly() = default;  // zero

  static Poly constant(Int c);
  static Poly monomial(Int c, int es, int et, int eq);
  static Poly var_s() { return monomial(1, 1, 0, 0); }
  static Poly var_t() { return monomial(1, 0, 1, 0); }
  static Poly var_q() { return monomial(1, 0, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  size_t term_count() const { return c_.size(); }
  Int coeff(int es, int et, int eq) const;  // 0 when absent
  void add_term(const Int& c, int es, int et, int eq);

  Poly operator-() const;
  Poly& operator+=(const Poly&);
  Poly& operator-=(const Poly&);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly operator*(const Int& k, Poly p);
  bool operator==(const Poly&) const = default;

  int deg_s() const;
  int deg_t() const;
  int deg_q() const;

  Poly shift_s_down() const;       // s -> s - 1
  Poly eval_s(const Int&) const;   // substitute a constant for s
  Poly eval_t(const Int&) const;
  Poly eval_q(const Int&) const;

  // t^a q^b -> t^a q^{(a-1)n - b}: turns an (ides+1, icomaj) refinement into
  // the (ides+1, imaj) one, since imaj = n*ides - icomaj.  Throws if any
  // resulting exponent would be negative.
  Poly imaj_transform(int n) const;

  // t^a -> t^{top-a} (coefficient reversal); throws if some a > top.
  Poly reverse_t(int top) const;

  // Canonical text: terms sorted by total degree, then lexicographically in
  // (s, t, q) with higher s/t/q-power first within a degree; "0" when zero.
  std::string str() const;
  static Poly parse(std::string_view text);

  const std::map<uint64_t, Int>& terms() const { return c_; }
  static uint64_t pack(int es, int et, int eq);
  static void unpack(uint64_t key, int& es, int& et, int& eq);

 private:
  std::map<uint64_t, Int> c_;
};

// [n]_q! and the Gaussian binomial; both exact integer polynomials in q.
// q_binomial throws std::invalid_argument for k < 0 or k > n.
Poly q_factorial(int n);
Poly q_binomial(int n, int k);

}  // namespace cluskit
