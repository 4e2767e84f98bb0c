// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained so a red line names the broken
// area directly.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cluskit/formulas.hpp"
#include "cluskit/fqsym.hpp"
#include "cluskit/tables.hpp"
#include "cluskit/word_cluster.hpp"

using namespace cluskit;

namespace {

bool g_all_ok = true;

void verdict(int id, bool ok, const std::string& what,
             const std::string& detail = "") {
  if (!ok) g_all_ok = false;
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

// 1. Every reference table row, n = 0..9, from both computation routes.
void criterion_tables() {
  std::string detail;
  bool ok = true;
  int rows = 0;
  for (const auto& table : golden_tables()) {
    auto want = golden_rows(table);
    auto brute = computed_table(table, "brute");
    auto closed = computed_table(table, "closed");
    for (size_t n = 0; n < want.size(); ++n) {
      ++rows;
      if (brute[n] != want[n] || closed[n] != want[n]) {
        ok = false;
        if (detail.empty())
          detail = "first mismatch at table " + std::to_string(table.id) +
                   ", n=" + std::to_string(n);
      }
    }
  }
  verdict(1, ok,
          "11 reference tables (" + std::to_string(rows) +
              " rows) reproduced by brute force and by the closed forms",
          detail);
}

// 2. The cluster identity in FQSym through degree 7.
void criterion_fqsym_identity() {
  bool ok = true;
  std::string detail;
  for (const char* pat : {"21", "123", "321", "132,231", "1234", "13245"}) {
    auto rep = verify_cluster_identity(PatternSet::parse(pat), 7);
    if (!rep.ok) {
      ok = false;
      detail = std::string(pat) + ": " + rep.detail;
      break;
    }
  }
  verdict(2, ok, "cluster identity holds in the algebra to degree 7",
          detail);
}

// 3. All five algebra maps multiplicative on basis pairs of total degree <= 6.
void criterion_homs() {
  const int N = 6;
  Trunc tr{0, N + 2, N * (N - 1) / 2 + N + 2, N};
  bool ok = true;
  std::string detail;
  for (Hom h : {Hom::plain, Hom::q_inv, Hom::ides_icomaj, Hom::ipk, Hom::ilpk}) {
    std::string why;
    if (!hom_is_multiplicative_check(h, N, tr, &why)) {
      ok = false;
      detail = why;
      break;
    }
  }
  verdict(3, ok, "five algebra maps multiplicative on all pairs to degree 6",
          detail);
}

// 4. Carlitz identity for n <= 5, t-degree <= 6.
void criterion_carlitz() {
  auto rep = carlitz_check(5, 6);
  verdict(4, rep.ok, "Carlitz identity, n <= 5 and t-degree <= 6",
          rep.ok ? "" : rep.lines.back());
}

// 5. Fibonacci counts for peakless monotone avoiders and 321-avoiders with
// one inverse left peak, n <= 9.
void criterion_claims() {
  bool ok = true;
  std::string detail;
  for (int m : {3, 4, 5}) {
    auto rep = claim_ipk_check(m, 9);
    if (!rep.ok && ok) {
      ok = false;
      detail = "ipk m=" + std::to_string(m);
    }
  }
  auto rep = claim_ilpk_check(9);
  if (!rep.ok && ok) {
    ok = false;
    detail = "ilpk over 321-avoiders";
  }
  verdict(5, ok, "Fibonacci-number claims for m in {3,4,5} and n <= 9", detail);
}

// 6. The two-run count (4 odd / 5 even) with explicit witnesses, n <= 11.
void criterion_two_run() {
  auto rep = prop_123_check(3, 11);
  verdict(6, rep.ok, "two-run 123-avoiders with one inverse descent, n <= 11",
          rep.ok ? "" : rep.lines.back());
}

// 7. Statistic and polynomial symmetry identities, n <= 7.
void criterion_symmetries() {
  bool ok = symmetry_statistic_check(7).ok;
  std::string detail = ok ? "" : "statistic identities";
  for (const char* pat : {"123", "321", "132"}) {
    auto rep = symmetry_polynomial_check(PatternSet::parse(pat), 7);
    if (!rep.ok && ok) {
      ok = false;
      detail = std::string("polynomial transport for ") + pat;
    }
  }
  verdict(7, ok, "five statistic and five polynomial symmetry identities, n <= 7",
          detail);
}

// 8. The word-algebra cluster method on the running example.
void criterion_words() {
  auto rep = verify_word_cluster_method("abc", {"cab", "bc"}, 8);
  verdict(8, rep.ok,
          "word cluster method over {a,b,c} with bad words {cab, bc}, " +
              std::to_string(rep.words_checked) + " words",
          rep.detail);
}

// 9. Series algebra laws and the q-binomial expansion identity.
void criterion_series_laws() {
  bool ok = true;
  std::string detail;
  auto note = [&](bool cond, const char* what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  };

  std::mt19937_64 rng(735);
  Trunc tr{2, 5, 0, 5};
  auto rand_series = [&](bool unit) {
    std::uniform_int_distribution<int> es(0, tr.s), et(0, tr.t), ex(0, tr.x),
        c(-4, 4), nterms(1, 8);
    TruncatedSeries f(tr);
    for (int i = nterms(rng); i > 0; --i)
      f.add_term(c(rng), Expo{es(rng), et(rng), 0, ex(rng)});
    if (unit) f += TruncatedSeries::constant(1, tr);
    return f;
  };
  for (int rep = 0; rep < 20; ++rep) {
    auto a = rand_series(false), b = rand_series(false), c = rand_series(false);
    note(equal_within((a * b) * c, a * (b * c)), "product associativity");
    auto u = rand_series(true);
    if (u.coeff(Expo{}) != 0)
      note(equal_within(u * u.inverse(), TruncatedSeries::constant(1, tr)),
           "inverse");
  }

  auto hone = TruncatedSeries::hadamard_one(tr);
  auto f = TruncatedSeries::geometric(Var::t, tr) *
               (TruncatedSeries::constant(1, tr) +
                TruncatedSeries::variable(Var::x, tr)) +
           TruncatedSeries::variable(Var::t, tr) *
               TruncatedSeries::variable(Var::s, tr);
  note(equal_within(f.hadamard(hone), f), "Hadamard identity");
  note(equal_within(f.hadamard(f.hadamard_inverse()), hone),
       "Hadamard inverse");

  Trunc deep{0, 12, 0, 0};
  auto one = TruncatedSeries::constant(1, deep);
  auto t = TruncatedSeries::variable(Var::t, deep);
  note(equal_within(((one - t) * (one - t)).sqrt_one_plus(), one - t),
       "sqrt consistency");
  auto u = t.scaled(4) * (one + t).pow(2).inverse();
  Trunc high = deep;
  high.t += 1;
  auto oh = TruncatedSeries::constant(1, high);
  auto th = TruncatedSeries::variable(Var::t, high);
  auto v = ((oh - (oh - th).sqrt_one_plus()).scaled(2) - th).divide_by(Var::t, 1);
  note(equal_within(u.substitute(Var::t, v), t), "u(v(t)) = t to degree 12");
  note(equal_within(v.substitute(Var::t, u), t), "v(u(t)) = t to degree 12");

  for (int n = 0; n <= 8 && ok; ++n)
    for (int k = 0; k <= n; ++k)
      note(q_binomial(n, k) == q_binomial(n, n - k), "q-binomial symmetry");

  // t^k slice of prod_{i=0}^{n} (1 - t q^i)^{-1} is the q-binomial (n+k, k)
  for (int n = 0; n <= 8 && ok; ++n) {
    const int kmax = 8;
    Trunc qt{0, kmax, n * kmax, 0};
    auto prod = TruncatedSeries::constant(1, qt);
    for (int i = 0; i <= n; ++i) {
      Poly factor = Poly::constant(1) - Poly::monomial(1, 0, 1, i);
      prod = prod * TruncatedSeries::from_poly(factor, qt);
    }
    auto inv = prod.inverse();
    for (int k = 0; k <= kmax && ok; ++k) {
      auto got = inv.slice(Var::t, k).to_poly();
      note(got == q_binomial(n + k, k), "q-binomial expansion");
    }
  }

  verdict(9, ok, "series algebra laws and the q-binomial expansion", detail);
}

// 10. Every table polynomial is positive, gapless and log-concave in t.
void criterion_log_concavity() {
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (const auto& table : golden_tables()) {
    auto rows = golden_rows(table);
    for (size_t n = 0; n < rows.size(); ++n) {
      ++checked;
      std::string why;
      if (!log_concave_no_gaps(rows[n], &why)) {
        ok = false;
        if (detail.empty())
          detail = "table " + std::to_string(table.id) + " n=" +
                   std::to_string(n) + ": " + why;
      }
    }
  }
  verdict(10, ok,
          "log-concavity of all " + std::to_string(checked) +
              " table polynomials",
          detail);
}

}  // namespace

int main() {
  criterion_tables();
  criterion_fqsym_identity();
  criterion_homs();
  criterion_carlitz();
  criterion_claims();
  criterion_two_run();
  criterion_symmetries();
  criterion_words();
  criterion_series_laws();
  criterion_log_concavity();
  std::printf("%s\n", g_all_ok ? "acceptance: all criteria pass"
                               : "acceptance: FAILURES above");
  return g_all_ok ? 0 : 1;
}
