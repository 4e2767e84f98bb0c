#include "cluskit/formulas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cluskit/fqsym.hpp"

namespace cluskit {

namespace {

Poly poly_pow(const Poly& p, int e) {
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

Poly one_minus_t_pow(int e) {
  Poly base = Poly::constant(1) - Poly::var_t();
  return poly_pow(base, e);
}

// prod_{i=0}^{n} (1 - t q^i)
Poly t_q_product(int n) {
  Poly r = Poly::constant(1);
  for (int i = 0; i <= n; ++i)
    r = r * (Poly::constant(1) - Poly::monomial(1, 0, 1, i));
  return r;
}

Poly q_int(int k) {  // [k]_q = 1 + q + ... + q^{k-1}
  Poly r;
  for (int i = 0; i < k; ++i) r.add_term(1, 0, 0, i);
  return r;
}

// t^a q^b -> t^{t_top - a} q^{q_top - b}
Poly reverse_tq(const Poly& p, int t_top, int q_top) {
  Poly r;
  for (const auto& [key, c] : p.terms()) {
    int es, et, eq;
    Poly::unpack(key, es, et, eq);
    if (et > t_top || eq > q_top)
      throw std::invalid_argument("degree above reversal top");
    r.add_term(c, es, t_top - et, q_top - eq);
  }
  return r;
}

PatternSet increasing_set(int m) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return PatternSet({Permutation(w)});
}

PatternSet decreasing_set(int m) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = m - i;
  return PatternSet({Permutation(w)});
}

PatternSet trans_set(int m, int a) {
  if (m < 5 || a < 2 || a > m - 2)
    throw std::invalid_argument(
        "transpositional shape needs m >= 5, 2 <= a <= m-2");
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  std::swap(w[a - 1], w[a]);
  return PatternSet({Permutation(w)});
}

}  // namespace

// ---- families ---------------------------------------------------------------

Family family_from_name(std::string_view name) {
  if (name == "plain") return Family::f_plain;
  if (name == "q" || name == "q-inv") return Family::f_q;
  if (name == "ides") return Family::ides;
  if (name == "ides-imaj") return Family::ides_imaj;
  if (name == "ides-icomaj") return Family::ides_icomaj;
  if (name == "ipk") return Family::ipk;
  if (name == "ilpk") return Family::ilpk;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::f_plain: return "plain";
    case Family::f_q: return "q";
    case Family::ides: return "ides";
    case Family::ides_imaj: return "ides-imaj";
    case Family::ides_icomaj: return "ides-icomaj";
    case Family::ipk: return "ipk";
    case Family::ilpk: return "ilpk";
  }
  throw std::logic_error("bad family");
}

StatTag family_tag(Family f) {
  switch (f) {
    case Family::f_plain: return StatTag::none;
    case Family::f_q: return StatTag::inv;
    case Family::ides: return StatTag::ides;
    case Family::ides_imaj: return StatTag::ides_icomaj;
    case Family::ides_icomaj: return StatTag::ides_icomaj;
    case Family::ipk: return StatTag::ipk;
    case Family::ilpk: return StatTag::ilpk;
  }
  throw std::logic_error("bad family");
}

bool family_uses_q(Family f) {
  return f == Family::f_q || f == Family::ides_imaj ||
         f == Family::ides_icomaj;
}

// ---- brute force ------------------------------------------------------------

namespace {

// Accumulates s^{occ} * weight(pi) into acc; weight is a single monomial.
void add_weighted(Poly& acc, const Poly& weight, long long occ) {
  for (const auto& [key, c] : weight.terms()) {
    int es, et, eq;
    Poly::unpack(key, es, et, eq);
    acc.add_term(c, es + static_cast<int>(occ), et, eq);
  }
}

}  // namespace

std::vector<Poly> brute_distribution(const PatternSet& gamma, int nmax,
                                     Family fam) {
  if (nmax < 0) throw std::invalid_argument("negative bound");
  const StatTag tag = family_tag(fam);
  std::vector<Poly> out(nmax + 1);
  out[0] = Poly::constant(1);
  for (int n = 1; n <= nmax; ++n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    Poly acc;
    do {
      Permutation pi(w);
      add_weighted(acc, stat_weight(stats(pi), tag),
                   gamma.empty() ? 0 : count_occurrences(pi, gamma));
    } while (std::next_permutation(w.begin(), w.end()));
    out[n] = fam == Family::ides_imaj ? acc.imaj_transform(n) : acc;
  }
  return out;
}

std::vector<Poly> brute_avoider_distribution(const PatternSet& gamma, int nmax,
                                             Family fam) {
  if (nmax < 0) throw std::invalid_argument("negative bound");
  const StatTag tag = family_tag(fam);
  std::vector<Poly> out(nmax + 1);
  out[0] = Poly::constant(1);
  for (int n = 1; n <= nmax; ++n) {
    Poly acc;
    for_each_avoider(n, gamma, [&](const Permutation& pi) {
      acc += stat_weight(stats(pi), tag);
    });
    out[n] = fam == Family::ides_imaj ? acc.imaj_transform(n) : acc;
  }
  return out;
}

// ---- pattern shapes and closed cluster series --------------------------------

ShapeInfo classify_pattern(const PatternSet& gamma) {
  ShapeInfo info;
  if (gamma.patterns().size() != 1) return info;
  const Permutation& sigma = gamma.patterns()[0];
  const int m = sigma.size();
  bool inc = true, dec = true;
  for (int i = 1; i <= m; ++i) {
    inc = inc && sigma.at(i) == i;
    dec = dec && sigma.at(i) == m + 1 - i;
  }
  if (inc) return {PatternShape::increasing, m, 0};
  if (dec) return {PatternShape::decreasing, m, 0};
  // identity with one adjacent value pair swapped
  int a = 0;
  for (int i = 1; i < m; ++i)
    if (sigma.at(i) == i + 1 && sigma.at(i + 1) == i) {
      a = i;
      break;
    }
  if (a != 0) {
    bool rest = true;
    for (int i = 1; i <= m; ++i)
      if (i != a && i != a + 1 && sigma.at(i) != i) rest = false;
    if (rest && m >= 5 && 2 <= a && a <= m - 2)
      return {PatternShape::transpositional, m, a};
  }
  return info;
}

namespace {

// s t^{base_t} q^{base_q} x^{m} / (1 - s sum_l t^{step_t} q^{step_q} x^{l})
TruncatedSeries chain_gf(int m, int base_t, int base_q, int step_t, int step_q,
                         const std::vector<int>& step_lengths, Trunc tr) {
  Expo base;
  base.s = 1;
  base.t = base_t;
  base.q = base_q;
  base.x = m;
  auto numer = TruncatedSeries::monomial(1, base, tr);
  auto denom = TruncatedSeries::constant(1, tr);
  for (int l : step_lengths) {
    Expo e;
    e.s = 1;
    e.t = step_t;
    e.q = step_q;
    e.x = l;
    denom -= TruncatedSeries::monomial(1, e, tr);
  }
  return numer * denom.inverse();
}

}  // namespace

TruncatedSeries monotone_cluster_gf(int m, bool decreasing, StatTag tag,
                                    Trunc tr) {
  if (m < 2) throw std::invalid_argument("monotone pattern needs m >= 2");
  std::vector<int> steps;
  for (int l = 1; l <= m - 1; ++l) steps.push_back(l);
  int texp = 0;
  switch (tag) {
    case StatTag::none:
    case StatTag::inv:
      texp = 0;
      break;
    case StatTag::ides:
    case StatTag::ides_icomaj:
      // ides(k...21) grows with the cluster length, so no uniform t-power
      if (decreasing)
        throw std::invalid_argument(
            "no uniform closed form for this tag on m...21");
      texp = 1;
      break;
    case StatTag::ipk:
      texp = 1;
      break;
    case StatTag::ilpk:
      texp = decreasing ? 1 : 0;
      break;
  }
  auto gf = chain_gf(m, texp, 0, 0, 0, steps, tr);
  if (tag == StatTag::inv && decreasing) {
    // the decreasing cluster of length k is k...21, with k(k-1)/2 inversions
    TruncatedSeries shifted(tr);
    for (const auto& [key, c] : gf.terms()) {
      Expo e = TruncatedSeries::unpack(key);
      e.q += e.x * (e.x - 1) / 2;
      shifted.add_term(c, e);
    }
    return shifted;
  }
  return gf;
}

TruncatedSeries trans_cluster_gf(int m, int a, StatTag tag, Trunc tr) {
  if (m < 5 || a < 2 || a > m - 2)
    throw std::invalid_argument("transpositional shape needs m >= 5, 2 <= a <= m-2");
  const int i = std::min(a, m - a);
  std::vector<int> steps;
  for (int l = 1; l <= i; ++l) steps.push_back(m - l);
  switch (tag) {
    case StatTag::none:
      return chain_gf(m, 0, 0, 0, 0, steps, tr);
    case StatTag::inv:
      // every mark contributes exactly the one inversion of the swapped pair
      return chain_gf(m, 0, 1, 0, 1, steps, tr);
    case StatTag::ides:
    case StatTag::ipk:
      return chain_gf(m, 2, 0, 1, 0, steps, tr);
    case StatTag::ilpk:
      return chain_gf(m, 1, 0, 1, 0, steps, tr);
    case StatTag::ides_icomaj:
      break;
  }
  throw std::invalid_argument("no closed cluster form for this tag");
}

std::vector<Poly> cluster_polys(const PatternSet& gamma, StatTag tag, int kmax,
                                ClusterSource src) {
  std::vector<Poly> out(std::max(kmax, 0) + 1);
  if (gamma.empty()) return out;
  if (src == ClusterSource::brute) {
    for (int k = gamma.min_len(); k <= kmax; ++k)
      out[k] = cluster_polynomial(gamma, k, tag);
    return out;
  }
  const ShapeInfo info = classify_pattern(gamma);
  if (info.shape == PatternShape::other)
    throw std::invalid_argument("no closed cluster form for this pattern set");
  Trunc tr;
  tr.s = kmax;
  tr.t = kmax + 1;
  tr.q = tag == StatTag::inv ? kmax * (kmax - 1) / 2 : 0;
  tr.x = kmax;
  TruncatedSeries gf =
      info.shape == PatternShape::transpositional
          ? trans_cluster_gf(info.m, info.a, tag, tr)
          : monotone_cluster_gf(info.m, info.shape == PatternShape::decreasing,
                                tag, tr);
  for (int k = info.m; k <= kmax; ++k) out[k] = gf.x_slice(k).to_poly();
  return out;
}

// ---- Hadamard machinery and extraction ----------------------------------------

TruncatedSeries hadamard_geometric_sum(const TruncatedSeries& j, int order) {
  for (const auto& [key, c] : j.terms())
    if (TruncatedSeries::unpack(key).x == 0)
      throw std::invalid_argument("inner series must vanish at x = 0");
  TruncatedSeries acc = TruncatedSeries::hadamard_one(j.trunc());
  if (order < 1) return acc;
  TruncatedSeries pw = j;
  acc += pw;
  for (int n = 2; n <= order; ++n) {
    pw = pw.hadamard(j);
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc;
}

namespace {

Trunc engine_trunc(Family fam, int nmax, bool symbolic_s) {
  Trunc tr;
  tr.x = nmax;
  tr.t = nmax + 2;
  tr.s = symbolic_s ? nmax : 0;
  tr.q = family_uses_q(fam) ? nmax * (nmax - 1) / 2 + nmax + 2 : 0;
  return tr;
}

TruncatedSeries build_u(Trunc tr) {  // u = 4t/(1+t)^2
  auto one = TruncatedSeries::constant(1, tr);
  auto tt = TruncatedSeries::variable(Var::t, tr);
  return tt.scaled(4) * (one + tt).pow(2).inverse();
}

TruncatedSeries build_v(Trunc tr) {  // v = 2(1 - sqrt(1-t))/t - 1, so u(v) = t
  Trunc up = tr;
  up.t += 1;
  auto one = TruncatedSeries::constant(1, up);
  auto tt = TruncatedSeries::variable(Var::t, up);
  auto num = (one - (one - tt).sqrt_one_plus()).scaled(2);
  return num.divide_by(Var::t, 1) - TruncatedSeries::constant(1, tr);
}

// R_k(s-1) (or R_k(value-1) when s is fixed) for k = 0..kmax.
std::vector<Poly> shifted_cluster_polys(const PatternSet& gamma, StatTag tag,
                                        int kmax, ClusterSource src,
                                        const std::optional<Int>& s_value) {
  auto rk = cluster_polys(gamma, tag, kmax, src);
  for (auto& p : rk) p = s_value ? p.eval_s(*s_value - 1) : p.shift_s_down();
  return rk;
}

/* The inner series J of the refined cluster theorems, from the shifted
   cluster polynomials:
     ides    tx/(1-t)^2            + 1/(1-t) sum_k R_k(t) z^k,   z = x/(1-t)
     icomaj  tx/((1-t)(1-tq))      + sum_k R_k(t,q) x^k / prod_{i=0}^{k}(1-tq^i)
     ipk     2tx/(1-t)^2 + (1+t)/(2(1-t)) sum_k R_k(u) z^k,      z = (1+t)x/(1-t)
     ilpk    z/(1-t)               + 1/(1-t) sum_k R_k(u) z^k,   same z, u = 4t/(1+t)^2 */
TruncatedSeries inner_series(Family fam, const std::vector<Poly>& rk,
                             Trunc tr) {
  auto one = TruncatedSeries::constant(1, tr);
  auto tt = TruncatedSeries::variable(Var::t, tr);
  auto xx = TruncatedSeries::variable(Var::x, tr);
  auto g = TruncatedSeries::geometric(Var::t, tr);  // 1/(1-t)
  const int kmax = static_cast<int>(rk.size()) - 1;
  switch (fam) {
    case Family::ides: {
      auto zs = xx * g;
      auto j = tt * xx * g * g;
      auto zpow = one;
      for (int k = 1; k <= kmax; ++k) {
        zpow = zpow * zs;
        if (k >= 2 && !rk[k].is_zero())
          j += TruncatedSeries::from_poly(rk[k], tr) * zpow * g;
      }
      return j;
    }
    case Family::ides_imaj:
    case Family::ides_icomaj: {
      Poly prod = Poly::constant(1) - Poly::var_t();  // prod_{i=0}^{0}
      prod = prod * (Poly::constant(1) - Poly::monomial(1, 0, 1, 1));
      auto j = tt * xx * TruncatedSeries::from_poly(prod, tr).inverse();
      for (int k = 2; k <= kmax; ++k) {
        prod = prod * (Poly::constant(1) - Poly::monomial(1, 0, 1, k));
        if (rk[k].is_zero()) continue;
        Expo e;
        e.x = k;
        j += TruncatedSeries::from_poly(rk[k], tr) *
             TruncatedSeries::monomial(1, e, tr) *
             TruncatedSeries::from_poly(prod, tr).inverse();
      }
      return j;
    }
    case Family::ipk: {
      auto u = build_u(tr);
      auto zs = xx * (one + tt) * g;
      auto j = tt.scaled(2) * xx * g * g;
      auto pref = (one + tt) * g.scaled(Rat(1, 2));
      auto zpow = one;
      for (int k = 1; k <= kmax; ++k) {
        zpow = zpow * zs;
        if (k >= 2 && !rk[k].is_zero())
          j += pref * from_poly_substituted(rk[k], Var::t, u, tr) * zpow;
      }
      return j;
    }
    case Family::ilpk: {
      auto u = build_u(tr);
      auto zs = xx * (one + tt) * g;
      auto j = zs * g;
      auto zpow = one;
      for (int k = 1; k <= kmax; ++k) {
        zpow = zpow * zs;
        if (k >= 2 && !rk[k].is_zero())
          j += g * from_poly_substituted(rk[k], Var::t, u, tr) * zpow;
      }
      return j;
    }
    default:
      throw std::invalid_argument("no refined inner series for this family");
  }
}

}  // namespace

// x^n slice times (1-t)^{n+1}, or times prod_{i=0}^{n}(1-tq^i) when with_q;
// everything above t^n (and q^{n(n-1)/2}) must cancel up to the truncation.
Poly extract_t_refined(const TruncatedSeries& h, int n, bool with_q) {
  auto slice = h.x_slice(n);
  Poly mult = with_q ? t_q_product(n) : one_minus_t_pow(n + 1);
  auto prod = slice * TruncatedSeries::from_poly(mult, slice.trunc());
  for (const auto& [key, c] : prod.terms()) {
    Expo e = TruncatedSeries::unpack(key);
    if (e.t > n || (with_q && e.q > n * (n - 1) / 2))
      throw std::runtime_error("tail not cleared at x^" + std::to_string(n));
  }
  return prod.to_poly();
}

namespace {

// Undoes the peak normalizations: substitute x -> (1-t)x/(1+t) and t -> v,
// then peel the prefactor.  What remains is sum_n P_n(s,t) x^n.
TruncatedSeries peak_series(const TruncatedSeries& h, bool left) {
  Trunc tr = h.trunc();
  auto one = TruncatedSeries::constant(1, tr);
  auto tt = TruncatedSeries::variable(Var::t, tr);
  auto xfac = TruncatedSeries::variable(Var::x, tr) * (one - tt) *
              (one + tt).inverse();
  auto w = h.substitute(Var::x, xfac).substitute(Var::t, build_v(tr));
  auto v = build_v(w.trunc());
  auto onev = TruncatedSeries::constant(1, w.trunc());
  if (left) return (onev - v) * w;
  auto inv1v = (onev + v).inverse();
  return (onev - v).scaled(2) * inv1v * w - inv1v.scaled(2);
}

Poly finish_peak_slice(const TruncatedSeries& s, int tmax, int n) {
  for (const auto& [key, c] : s.terms())
    if (TruncatedSeries::unpack(key).t > tmax)
      throw std::runtime_error("non-polynomial residue after substitution at x^" +
                               std::to_string(n));
  return s.to_poly();
}

}  // namespace

std::vector<Poly> extract_ipk(const TruncatedSeries& h, int nmax) {
  auto p = peak_series(h, false);
  if (!p.x_slice(0).is_zero())
    throw std::runtime_error("non-polynomial residue after substitution at x^0");
  std::vector<Poly> out(nmax + 1);
  out[0] = Poly::constant(1);
  for (int n = 1; n <= nmax; ++n)
    out[n] = finish_peak_slice(p.x_slice(n), (n + 1) / 2, n);
  return out;
}

std::vector<Poly> extract_ilpk(const TruncatedSeries& h, int nmax) {
  auto p = peak_series(h, true);
  std::vector<Poly> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n)
    out[n] = finish_peak_slice(p.x_slice(n), n / 2, n);
  if (out[0] != Poly::constant(1))
    throw std::runtime_error("constant term of the left-peak series is not 1");
  return out;
}

namespace {

std::vector<Poly> extract_family(Family fam, const TruncatedSeries& h,
                                 int nmax) {
  std::vector<Poly> out(nmax + 1);
  switch (fam) {
    case Family::ides:
      for (int n = 0; n <= nmax; ++n) out[n] = extract_t_refined(h, n, false);
      return out;
    case Family::ides_icomaj:
      for (int n = 0; n <= nmax; ++n) out[n] = extract_t_refined(h, n, true);
      return out;
    case Family::ides_imaj:
      for (int n = 0; n <= nmax; ++n)
        out[n] = extract_t_refined(h, n, true).imaj_transform(n);
      return out;
    case Family::ipk:
      return extract_ipk(h, nmax);
    case Family::ilpk:
      return extract_ilpk(h, nmax);
    default:
      throw std::invalid_argument("no refined extraction for this family");
  }
}

struct EngineRun {
  TruncatedSeries inner, hsum;
  std::vector<Poly> polys;
};

EngineRun engine_run(Family fam, const PatternSet& gamma,
                     const EngineOptions& opt) {
  Trunc tr = engine_trunc(fam, opt.nmax, !opt.s_value);
  auto rk = shifted_cluster_polys(gamma, family_tag(fam), opt.nmax, opt.source,
                                  opt.s_value);
  auto j = inner_series(fam, rk, tr);
  auto h = hadamard_geometric_sum(j, opt.nmax);
  auto polys = extract_family(fam, h, opt.nmax);
  return {std::move(j), std::move(h), std::move(polys)};
}

}  // namespace

std::vector<Poly> specialized_distribution(Family fam, const PatternSet& gamma,
                                           const EngineOptions& opt) {
  if (fam == Family::f_plain)
    return gj_distribution(gamma, opt.nmax, false, opt.s_value, opt.source);
  if (fam == Family::f_q)
    return gj_distribution(gamma, opt.nmax, true, opt.s_value, opt.source);
  return engine_run(fam, gamma, opt).polys;
}

std::vector<Poly> gj_distribution(const PatternSet& gamma, int nmax,
                                  bool with_q,
                                  const std::optional<Int>& s_value,
                                  ClusterSource src) {
  if (nmax < 0) throw std::invalid_argument("negative bound");
  auto rk = shifted_cluster_polys(
      gamma, with_q ? StatTag::inv : StatTag::none, nmax, src, s_value);
  std::vector<Poly> f(nmax + 1);
  f[0] = Poly::constant(1);
  for (int n = 1; n <= nmax; ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k) {
      const Poly& a = k == 1 ? Poly::constant(1) : rk[k];
      if (a.is_zero()) continue;
      Poly b = with_q ? q_binomial(n, k) : Poly::constant(binomial(n, k));
      acc += b * a * f[n - k];
    }
    f[n] = acc;
  }
  return f;
}

std::vector<Poly> closed_distribution(Family fam, const PatternSet& gamma,
                                      const EngineOptions& opt) {
  const ShapeInfo info = classify_pattern(gamma);
  if (info.shape == PatternShape::other)
    throw std::invalid_argument("no closed form for this pattern set");
  EngineOptions closed = opt;
  closed.source = ClusterSource::closed;
  if (fam == Family::f_plain || fam == Family::f_q)
    return specialized_distribution(fam, gamma, closed);
  switch (info.shape) {
    case PatternShape::increasing:
    case PatternShape::transpositional:
      if (info.shape == PatternShape::transpositional &&
          (fam == Family::ides_imaj || fam == Family::ides_icomaj))
        throw std::invalid_argument(
            "no closed form for this family on a transpositional pattern");
      return engine_run(fam, gamma, closed).polys;
    case PatternShape::decreasing: {
      if (fam == Family::ilpk) return engine_run(fam, gamma, closed).polys;
      // transport from 12...m: complement fixes ipk; reverse sends ides to
      // n-1-ides, and (ides+1, imaj) to (n+1, C(n,2)) minus itself
      const PatternSet inc = increasing_set(info.m);
      if (fam == Family::ipk) return engine_run(fam, inc, closed).polys;
      if (fam == Family::ides) {
        auto polys = engine_run(fam, inc, closed).polys;
        for (int n = 1; n < static_cast<int>(polys.size()); ++n)
          polys[n] = polys[n].reverse_t(n + 1);
        return polys;
      }
      auto imaj = engine_run(Family::ides_imaj, inc, closed).polys;
      for (int n = 1; n < static_cast<int>(imaj.size()); ++n) {
        imaj[n] = reverse_tq(imaj[n], n + 1, n * (n - 1) / 2);
        if (fam == Family::ides_icomaj) imaj[n] = imaj[n].imaj_transform(n);
      }
      return imaj;
    }
    default:
      throw std::logic_error("unreachable");
  }
}

std::vector<Poly> fqsym_distribution(Family fam, const PatternSet& gamma,
                                     int nmax,
                                     const std::optional<Int>& s_value) {
  if (nmax < 0) throw std::invalid_argument("negative bound");
  const StatTag tag = family_tag(fam);
  FQSymElement lhs = FQSymElement::unit(nmax);
  lhs -= FQSymElement::g_basis(Permutation({1}), nmax);
  if (!gamma.empty())
    lhs -= FQSymElement::cluster_sum(gamma, nmax, /*shift_s=*/true);
  FQSymElement f = lhs.inverse_geometric();
  std::vector<Poly> out(nmax + 1);
  out[0] = Poly::constant(1);
  for (const auto& [pi, coeff] : f.terms()) {
    if (pi.empty()) continue;
    out[pi.size()] += coeff * stat_weight(stats(pi), tag);
  }
  for (int n = 1; n <= nmax; ++n) {
    if (fam == Family::ides_imaj) out[n] = out[n].imaj_transform(n);
    if (s_value) out[n] = out[n].eval_s(*s_value);
  }
  return out;
}

// ---- named formula registry ---------------------------------------------------

namespace {

void require_s_zero(const FormulaRequest& req) {
  if (!req.s_value || *req.s_value != 0)
    throw std::invalid_argument(req.id + " is the s = 0 specialization");
}

Trunc verbatim_trunc(bool with_q, int nmax) {
  Trunc tr;
  tr.x = nmax;
  tr.t = nmax + 2;
  tr.q = with_q ? nmax * (nmax - 1) / 2 + nmax + 2 : 0;
  return tr;
}

// Simplified s = 0 inner series of the four table theorems; z = x/(1-t) for
// the descent form, z = (1+t)x/(1-t) for the peak forms.
TruncatedSeries verbatim_inner(const std::string& id, int m, int a, Trunc tr) {
  auto one = TruncatedSeries::constant(1, tr);
  auto tt = TruncatedSeries::variable(Var::t, tr);
  auto xx = TruncatedSeries::variable(Var::x, tr);
  auto g = TruncatedSeries::geometric(Var::t, tr);
  if (id == "mono-ides-b") {
    auto zs = xx * g;
    return tt * zs * (one - zs.pow(m - 1)) * g * (one - zs.pow(m)).inverse();
  }
  if (id == "mono-ipk-b") {
    auto zs = xx * (one + tt) * g;
    return tt.scaled(2) * zs * (one - zs.pow(m - 1)) * g *
           (one + tt).inverse() * (one - zs.pow(m)).inverse();
  }
  if (id == "mono-ilpk-b") {
    auto zs = xx * (one + tt) * g;
    return zs * (one - zs.pow(m - 1)) * g * (one - zs.pow(m)).inverse();
  }
  if (id == "dec-ilpk-b") {
    auto zs = xx * (one + tt) * g;
    auto num = (one + tt).pow(2) * zs - tt.scaled(4) * zs.pow(m) -
               (one - tt).pow(2) * zs.pow(m + 1);
    return num * g * (one + tt).pow(2).inverse() *
           (one - zs.pow(m)).inverse();
  }
  const int i = std::min(a, m - a);
  if (id == "trans-ides-b") {
    auto zs = xx * g;
    auto chain = TruncatedSeries::constant(0, tr);
    for (int l = 1; l <= i; ++l) chain += zs.pow(m - l);
    return tt * xx * g * g -
           tt.pow(2) * zs.pow(m) * g * (one + tt * chain).inverse();
  }
  if (id == "trans-ipk-b") {
    auto u = build_u(tr);
    auto zs = xx * (one + tt) * g;
    auto chain = TruncatedSeries::constant(0, tr);
    for (int l = 1; l <= i; ++l) chain += zs.pow(m - l);
    return tt.scaled(2) * xx * g * g -
           (one + tt) * u.pow(2) * zs.pow(m) * g.scaled(Rat(1, 2)) *
               (one + u * chain).inverse();
  }
  if (id == "trans-ilpk-b") {
    auto u = build_u(tr);
    auto zs = xx * (one + tt) * g;
    auto chain = TruncatedSeries::constant(0, tr);
    for (int l = 1; l <= i; ++l) chain += zs.pow(m - l);
    return zs * g - u * zs.pow(m) * g * (one + u * chain).inverse();
  }
  throw std::logic_error("unknown inner series id");
}

// Binomial coefficient blocks of the Hadamard-free forms, indexed by the
// block length J = jm.
Int coef_c(int J, int k) {
  Int r = 0;
  for (int l = 1; l <= k; ++l) r += binomial(l + J - 1, l - 1) * binomial(J - 1, k - l);
  return 2 * r;
}
Int coef_cp(int J, int k) {
  Int r = 0;
  for (int l = 1; l <= k; ++l) r += binomial(l + J, l - 1) * binomial(J, k - l);
  return 2 * r;
}
Int coef_d(int J, int k) {
  Int r = 0;
  for (int l = 0; l <= k; ++l) r += binomial(l + J, l) * binomial(J, k - l);
  return r;
}
Int coef_dp(int J, int k) {
  Int r = 0;
  for (int l = 0; l <= k; ++l) r += binomial(l + J + 1, l) * binomial(J + 1, k - l);
  return r;
}
Int coef_e(int J, int k) {
  Int r = 0;
  for (int l = 1; l <= k; ++l) r += binomial(l + J - 1, l - 1) * binomial(J - 2, k - l);
  return 4 * r;
}
Int coef_ep(int J, int k) {
  Int r = 0;
  for (int l = 1; l <= k; ++l) r += binomial(l + J, l - 1) * binomial(J - 1, k - l);
  return 4 * r;
}

void add_x_term(TruncatedSeries& s, const Rat& c, int ex) {
  Expo e;
  e.x = ex;
  s.add_term(c, e);
}

// The Hadamard-free (c) forms: one inverted x-series per t-power.
TruncatedSeries verbatim_hsum(const std::string& id, int m, Trunc tr) {
  if (id == "mono-idesimaj-b") {
    auto h = TruncatedSeries::constant(1, tr);
    for (int k = 1; k <= tr.t; ++k) {
      TruncatedSeries gk(tr);
      for (int j = 0; j * m <= tr.x; ++j) {
        Expo e;
        e.x = j * m;
        gk += TruncatedSeries::from_poly(q_binomial(k + j * m - 1, k - 1), tr) *
              TruncatedSeries::monomial(1, e, tr);
        if (j * m + 1 <= tr.x) {
          e.x = j * m + 1;
          gk -= TruncatedSeries::from_poly(q_binomial(k + j * m, k - 1), tr) *
                TruncatedSeries::monomial(1, e, tr);
        }
      }
      Expo et;
      et.t = k;
      h += TruncatedSeries::monomial(1, et, tr) * gk.inverse();
    }
    return h;
  }
  if (id == "mono-ides-c") {
    auto h = TruncatedSeries::constant(1, tr);
    for (int k = 1; k <= tr.t; ++k) {
      TruncatedSeries gk(tr);
      for (int j = 0; j * m <= tr.x; ++j) {
        add_x_term(gk, Rat(binomial(k + j * m - 1, k - 1)), j * m);
        if (j * m + 1 <= tr.x)
          add_x_term(gk, -Rat(binomial(k + j * m, k - 1)), j * m + 1);
      }
      Expo et;
      et.t = k;
      h += TruncatedSeries::monomial(1, et, tr) * gk.inverse();
    }
    return h;
  }
  if (id == "mono-ipk-c") {
    auto h = TruncatedSeries::constant(1, tr);
    for (int k = 1; k <= tr.t; ++k) {
      TruncatedSeries gk(tr);
      add_x_term(gk, 1, 0);
      if (tr.x >= 1) add_x_term(gk, Rat(-2 * k), 1);
      for (int j = 1; j * m <= tr.x; ++j) {
        add_x_term(gk, Rat(coef_c(j * m, k)), j * m);
        if (j * m + 1 <= tr.x) add_x_term(gk, -Rat(coef_cp(j * m, k)), j * m + 1);
      }
      Expo et;
      et.t = k;
      h += TruncatedSeries::monomial(1, et, tr) * gk.inverse();
    }
    return h;
  }
  if (id == "mono-ilpk-c") {
    TruncatedSeries h(tr);
    for (int k = 0; k <= tr.t; ++k) {
      TruncatedSeries gk(tr);
      for (int j = 0; j * m <= tr.x; ++j) {
        add_x_term(gk, Rat(coef_d(j * m, k)), j * m);
        if (j * m + 1 <= tr.x) add_x_term(gk, -Rat(coef_dp(j * m, k)), j * m + 1);
      }
      Expo et;
      et.t = k;
      h += TruncatedSeries::monomial(1, et, tr) * gk.inverse();
    }
    return h;
  }
  if (id == "dec-ilpk-c") {
    auto h = TruncatedSeries::geometric(Var::x, tr);
    for (int k = 1; k <= tr.t; ++k) {
      TruncatedSeries gk(tr);
      add_x_term(gk, 1, 0);
      if (tr.x >= 1) add_x_term(gk, Rat(-(2 * k + 1)), 1);
      for (int j = 1; j * m <= tr.x; ++j) {
        add_x_term(gk, Rat(coef_e(j * m, k)), j * m);
        if (j * m + 1 <= tr.x) add_x_term(gk, -Rat(coef_ep(j * m, k)), j * m + 1);
      }
      Expo et;
      et.t = k;
      h += TruncatedSeries::monomial(1, et, tr) * gk.inverse();
    }
    return h;
  }
  throw std::logic_error("unknown series id");
}

struct FormulaSpec {
  std::string id;
  enum class Kind { gj, engine, variant_a, variant_b, variant_c } kind;
  Family family = Family::f_plain;
  bool decreasing = false;  // mono/dec ids
  bool trans = false;
};

const std::vector<FormulaSpec>& formula_table() {
  using K = FormulaSpec::Kind;
  static const std::vector<FormulaSpec> table = {
      {"gj-perm", K::gj, Family::f_plain},
      {"gj-q", K::gj, Family::f_q},
      {"spec-ides", K::engine, Family::ides},
      {"spec-ides-icomaj", K::engine, Family::ides_icomaj},
      {"spec-ipk", K::engine, Family::ipk},
      {"spec-ilpk", K::engine, Family::ilpk},
      {"mono-ides-a", K::variant_a, Family::ides},
      {"mono-ides-b", K::variant_b, Family::ides},
      {"mono-ides-c", K::variant_c, Family::ides},
      {"mono-idesimaj-a", K::variant_a, Family::ides_imaj},
      {"mono-idesimaj-b", K::variant_c, Family::ides_imaj},
      {"mono-ipk-a", K::variant_a, Family::ipk},
      {"mono-ipk-b", K::variant_b, Family::ipk},
      {"mono-ipk-c", K::variant_c, Family::ipk},
      {"mono-ilpk-a", K::variant_a, Family::ilpk},
      {"mono-ilpk-b", K::variant_b, Family::ilpk},
      {"mono-ilpk-c", K::variant_c, Family::ilpk},
      {"dec-ilpk-a", K::variant_a, Family::ilpk, true},
      {"dec-ilpk-b", K::variant_b, Family::ilpk, true},
      {"dec-ilpk-c", K::variant_c, Family::ilpk, true},
      {"trans-ides-a", K::variant_a, Family::ides, false, true},
      {"trans-ides-b", K::variant_b, Family::ides, false, true},
      {"trans-ipk-a", K::variant_a, Family::ipk, false, true},
      {"trans-ipk-b", K::variant_b, Family::ipk, false, true},
      {"trans-ilpk-a", K::variant_a, Family::ilpk, false, true},
      {"trans-ilpk-b", K::variant_b, Family::ilpk, false, true},
  };
  return table;
}

}  // namespace

std::vector<std::string> formula_ids() {
  std::vector<std::string> out;
  for (const auto& f : formula_table()) out.push_back(f.id);
  return out;
}

bool formula_exists(std::string_view id) {
  for (const auto& f : formula_table())
    if (f.id == id) return true;
  return false;
}

FormulaOutput run_formula(const FormulaRequest& req) {
  const FormulaSpec* spec = nullptr;
  for (const auto& f : formula_table())
    if (f.id == req.id) spec = &f;
  if (spec == nullptr)
    throw std::invalid_argument("unknown formula id: " + req.id);

  using K = FormulaSpec::Kind;
  FormulaOutput out;
  if (spec->kind == K::gj) {
    out.polys = gj_distribution(req.gamma, req.nmax,
                                spec->family == Family::f_q, req.s_value,
                                req.source);
    return out;
  }
  if (spec->kind == K::engine) {
    auto run = engine_run(spec->family, req.gamma,
                          {req.nmax, req.source, req.s_value});
    out.polys = std::move(run.polys);
    out.inner = std::move(run.inner);
    out.hsum = std::move(run.hsum);
    return out;
  }

  // parameterized theorem variants
  PatternSet gamma = spec->trans ? trans_set(req.m, req.a)
                     : spec->decreasing ? decreasing_set(req.m)
                                        : increasing_set(req.m);
  if (spec->kind == K::variant_a) {
    std::optional<Int> s = req.s_value;
    if (spec->family == Family::ides_imaj) {
      require_s_zero(req);
      s = Int(0);
    }
    auto run =
        engine_run(spec->family, gamma, {req.nmax, ClusterSource::closed, s});
    out.polys = std::move(run.polys);
    out.inner = std::move(run.inner);
    out.hsum = std::move(run.hsum);
    return out;
  }

  require_s_zero(req);
  const bool with_q = family_uses_q(spec->family);
  Trunc tr = verbatim_trunc(with_q, req.nmax);
  TruncatedSeries h(tr);
  if (spec->kind == K::variant_b) {
    auto j = verbatim_inner(req.id, req.m, req.a, tr);
    h = hadamard_geometric_sum(j, req.nmax);
    out.inner = std::move(j);
  } else {
    h = verbatim_hsum(req.id, req.m, tr);
  }
  switch (spec->family) {
    case Family::ides:
      out.polys.resize(req.nmax + 1);
      for (int n = 0; n <= req.nmax; ++n)
        out.polys[n] = extract_t_refined(h, n, false);
      break;
    case Family::ides_imaj:
      // 12...m is its own reverse-complement, so the (ides, icomaj)
      // extraction already is the imaj refinement
      out.polys.resize(req.nmax + 1);
      for (int n = 0; n <= req.nmax; ++n)
        out.polys[n] = extract_t_refined(h, n, true);
      break;
    case Family::ipk:
      out.polys = extract_ipk(h, req.nmax);
      break;
    case Family::ilpk:
      out.polys = extract_ilpk(h, req.nmax);
      break;
    default:
      throw std::logic_error("unreachable");
  }
  out.hsum = std::move(h);
  return out;
}

// ---- checks --------------------------------------------------------------------

CheckReport carlitz_check(int nmax, int kmax) {
  CheckReport rep;
  Trunc tr;
  tr.t = kmax;
  tr.q = nmax * kmax + nmax * (nmax - 1) / 2;
  for (int n = 0; n <= nmax; ++n) {
    Poly a;  // sum over S_n of t^{des+1} q^{maj}
    if (n == 0) {
      a = Poly::constant(1);
    } else {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = i + 1;
      do {
        StatRecord st = stats(Permutation(w));
        a.add_term(1, 0, st.des + 1, st.maj);
      } while (std::next_permutation(w.begin(), w.end()));
    }
    auto lhs = TruncatedSeries::from_poly(a, tr) *
               TruncatedSeries::from_poly(t_q_product(n), tr).inverse();
    TruncatedSeries rhs(tr);
    for (int k = 0; k <= kmax; ++k) {
      Expo e;
      e.t = k;
      rhs += TruncatedSeries::from_poly(poly_pow(q_int(k), n), tr) *
             TruncatedSeries::monomial(1, e, tr);
    }
    if (equal_within(lhs, rhs))
      rep.pass("n=" + std::to_string(n) +
               ": A_n(t,q)/prod(1-tq^i) = sum_k [k]_q^" + std::to_string(n) +
               " t^k through t^" + std::to_string(kmax));
    else
      rep.fail("n=" + std::to_string(n));
  }
  return rep;
}

Int fibonacci_order(int order, int n) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (n < 0) return 0;
  std::vector<Int> f(n + 1);
  f[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= order && j <= i; ++j) f[i] += f[i - j];
  return f[n];
}

CheckReport claim_ipk_check(int m, int nmax) {
  CheckReport rep;
  const PatternSet gamma = increasing_set(m);
  for (int n = 0; n <= nmax; ++n) {
    Int count = 0;
    for_each_avoider(n, gamma, [&](const Permutation& pi) {
      if (stats(pi).ipk == 0) ++count;
    });
    Int expect = fibonacci_order(m - 1, n);
    if (count == expect)
      rep.pass("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
               count.str() + " permutations with ipk=0 = f_n");
    else
      rep.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": got " +
               count.str() + ", expected " + expect.str());
  }
  return rep;
}

CheckReport claim_ilpk_check(int nmax) {
  CheckReport rep;
  const PatternSet gamma = decreasing_set(3);
  for (int n = 1; n <= nmax; ++n) {
    Int count = 0;
    for_each_avoider(n, gamma, [&](const Permutation& pi) {
      if (stats(pi).ilpk == 1) ++count;
    });
    Int expect =
        fibonacci_order(2, n - 1) * fibonacci_order(2, n) - (n + 1) / 2;
    if (count == expect)
      rep.pass("n=" + std::to_string(n) + ": " + count.str() +
               " permutations with ilpk=1 = f_{n-1} f_n - floor((n+1)/2)");
    else
      rep.fail("n=" + std::to_string(n) + ": got " + count.str() +
               ", expected " + expect.str());
  }
  return rep;
}

namespace {

bool avoids_incr3(const Permutation& pi) {
  for (int i = 1; i + 2 <= pi.size(); ++i)
    if (pi.at(i) < pi.at(i + 1) && pi.at(i + 1) < pi.at(i + 2)) return false;
  return true;
}

std::vector<int> asc_range(int from, int to, int step = 2) {
  std::vector<int> out;
  for (int v = from; v <= to; v += step) out.push_back(v);
  return out;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// The explicit two-run families: inverses of the permutations being counted.
std::vector<Permutation> prop_123_witnesses(int n) {
  std::vector<std::vector<int>> ws;
  if (n % 2 == 1) {
    ws.push_back(cat({asc_range(1, n), asc_range(2, n - 1)}));
    ws.push_back(cat({asc_range(2, n - 1), asc_range(1, n)}));
    ws.push_back(cat({asc_range(2, n - 1), {n}, asc_range(1, n - 2)}));
    ws.push_back(cat({asc_range(3, n), {1}, asc_range(2, n - 1)}));
  } else {
    ws.push_back(cat({asc_range(1, n - 1), asc_range(2, n)}));
    ws.push_back(cat({asc_range(1, n - 1), {n}, asc_range(2, n - 2)}));
    ws.push_back(cat({asc_range(2, n), asc_range(1, n - 1)}));
    ws.push_back(cat({asc_range(3, n - 1), {1}, asc_range(2, n)}));
    ws.push_back(cat({asc_range(3, n - 1), {n, 1}, asc_range(2, n - 2)}));
  }
  std::vector<Permutation> out;
  for (auto& w : ws) out.emplace_back(std::move(w));
  return out;
}

}  // namespace

CheckReport prop_123_check(int nmin, int nmax) {
  CheckReport rep;
  if (nmin < 3) {
    rep.fail("the two-run shapes need n >= 3");
    return rep;
  }
  for (int n = nmin; n <= nmax; ++n) {
    // sigma with des(sigma) = 1 is an ascending pair of runs, determined by
    // the value set of its first run; sigma^{-1} is the permutation counted
    std::set<Permutation> found;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> first, second;
      for (int v = 1; v <= n; ++v)
        ((mask >> (v - 1)) & 1 ? first : second).push_back(v);
      std::vector<int> line = cat({first, second});
      Permutation sigma(line);
      if (sigma == Permutation::identity(n)) continue;  // descent-free
      if (avoids_incr3(sigma.inverse())) found.insert(sigma);
    }
    auto witnesses = prop_123_witnesses(n);
    std::set<Permutation> expected;
    bool shapes_ok = true;
    for (const auto& w : witnesses) {
      shapes_ok = shapes_ok && stats(w).des == 1 && avoids_incr3(w.inverse());
      expected.insert(w);
    }
    const size_t want = n % 2 == 1 ? 4 : 5;
    if (shapes_ok && found == expected && found.size() == want)
      rep.pass("n=" + std::to_string(n) + ": " + std::to_string(found.size()) +
               " permutations with ides=1, matching the listed families");
    else
      rep.fail("n=" + std::to_string(n) + ": found " +
               std::to_string(found.size()) + ", expected " +
               std::to_string(want) +
               (found == expected ? "" : " (set mismatch)"));
  }
  return rep;
}

bool log_concave_no_gaps(const Poly& p, std::string* why) {
  auto complain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.is_zero()) return complain("zero polynomial");
  if (p.deg_s() != 0 || p.deg_q() != 0)
    throw std::invalid_argument("expected a polynomial in t alone");
  int lo = -1, hi = p.deg_t();
  for (int k = 0; k <= hi; ++k)
    if (p.coeff(0, k, 0) != 0 && lo < 0) lo = k;
  std::vector<Int> c;
  for (int k = lo; k <= hi; ++k) c.push_back(p.coeff(0, k, 0));
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] <= 0)
      return complain("coefficient of t^" + std::to_string(lo + (int)k) +
                      " is " + c[k].str());
  for (size_t k = 1; k + 1 < c.size(); ++k)
    if (c[k] * c[k] < c[k - 1] * c[k + 1])
      return complain("log-concavity fails at t^" + std::to_string(lo + (int)k));
  // positive and log-concave implies unimodal; verify anyway
  size_t k = 1;
  while (k < c.size() && c[k] >= c[k - 1]) ++k;
  while (k < c.size() && c[k] <= c[k - 1]) ++k;
  if (k != c.size()) return complain("not unimodal");
  return true;
}

CheckReport symmetry_statistic_check(int nmax) {
  CheckReport rep;
  for (int n = 1; n <= nmax; ++n) {
    long long bad = 0;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    const int choose2 = n * (n - 1) / 2;
    do {
      Permutation pi(w);
      StatRecord st = stats(pi);
      StatRecord sr = stats(apply_symmetry(pi, Symmetry::reverse));
      StatRecord sc = stats(apply_symmetry(pi, Symmetry::complement));
      StatRecord src_ = stats(apply_symmetry(pi, Symmetry::reverse_complement));
      if (sr.imaj != choose2 - st.imaj) ++bad;
      if (src_.imaj != st.icomaj) ++bad;
      if (sr.ides != n - 1 - st.ides || sc.ides != n - 1 - st.ides) ++bad;
      if (src_.ides != st.ides) ++bad;
      if (sc.ipk != st.ipk) ++bad;
    } while (std::next_permutation(w.begin(), w.end()));
    if (bad == 0)
      rep.pass("n=" + std::to_string(n) +
               ": all five identities hold on every permutation");
    else
      rep.fail("n=" + std::to_string(n) + ": " + std::to_string(bad) +
               " violations");
  }
  return rep;
}

namespace {

PatternSet apply_symmetry(const PatternSet& gamma, Symmetry s) {
  std::vector<Permutation> out;
  for (const auto& p : gamma.patterns()) out.push_back(apply_symmetry(p, s));
  return PatternSet(out);
}

}  // namespace

CheckReport symmetry_polynomial_check(const PatternSet& gamma, int nmax) {
  CheckReport rep;
  const PatternSet gr = apply_symmetry(gamma, Symmetry::reverse);
  const PatternSet gc = apply_symmetry(gamma, Symmetry::complement);
  const PatternSet grc = apply_symmetry(gamma, Symmetry::reverse_complement);
  auto imaj_g = brute_distribution(gamma, nmax, Family::ides_imaj);
  auto imaj_gr = brute_distribution(gr, nmax, Family::ides_imaj);
  auto imaj_grc = brute_distribution(grc, nmax, Family::ides_imaj);
  auto icomaj_g = brute_distribution(gamma, nmax, Family::ides_icomaj);
  auto ides_g = brute_distribution(gamma, nmax, Family::ides);
  auto ides_gr = brute_distribution(gr, nmax, Family::ides);
  auto ides_gc = brute_distribution(gc, nmax, Family::ides);
  auto ides_grc = brute_distribution(grc, nmax, Family::ides);
  auto ipk_g = brute_distribution(gamma, nmax, Family::ipk);
  auto ipk_gc = brute_distribution(gc, nmax, Family::ipk);
  auto item = [&](bool ok, int n, const std::string& what) {
    if (ok)
      rep.pass("n=" + std::to_string(n) + ": " + what);
    else
      rep.fail("n=" + std::to_string(n) + ": " + what);
  };
  for (int n = 1; n <= nmax; ++n) {
    const int c2 = n * (n - 1) / 2;
    item(imaj_gr[n] == reverse_tq(imaj_g[n], n + 1, c2), n,
         "(ides,imaj) of the reversed set is the (t,q)-reversal");
    item(imaj_grc[n] == icomaj_g[n], n,
         "(ides,imaj) of the reverse-complement set equals (ides,icomaj)");
    item(ides_grc[n] == ides_g[n], n,
         "ides is invariant under reverse-complement");
    item(ides_gr[n] == ides_g[n].reverse_t(n + 1) &&
             ides_gc[n] == ides_g[n].reverse_t(n + 1),
         n, "ides of the reversed and complemented sets is the t-reversal");
    item(ipk_gc[n] == ipk_g[n], n, "ipk is invariant under complement");
  }
  return rep;
}

CheckReport binomial_formula_check() {
  CheckReport rep;
  const int kmax = 8;
  Trunc tr;
  tr.t = kmax;
  auto check = [&](const std::string& name, int jmin, int kmin,
                   Int (*coef)(int, int), auto gf_of) {
    for (int J = jmin; J <= 12; ++J) {
      Poly lhs;
      for (int k = kmin; k <= kmax; ++k) lhs.add_term(coef(J, k), 0, k, 0);
      if (equal_within(TruncatedSeries::from_poly(lhs, tr), gf_of(J)))
        rep.pass(name + " block length " + std::to_string(J) +
                 ": coefficient sums match the generating function");
      else
        rep.fail(name + " block length " + std::to_string(J));
    }
  };
  auto one_plus_t_pow = [](int e) {
    return poly_pow(Poly::constant(1) + Poly::var_t(), e);
  };
  auto gf = [&](const Poly& numer, int denom_pow) {
    return TruncatedSeries::from_poly(numer, tr) *
           TruncatedSeries::from_poly(one_minus_t_pow(denom_pow), tr).inverse();
  };
  check("c", 1, 1, coef_c, [&](int J) {
    return gf(Int(2) * (Poly::var_t() * one_plus_t_pow(J - 1)), J + 1);
  });
  check("c'", 1, 1, coef_cp, [&](int J) {
    return gf(Int(2) * (Poly::var_t() * one_plus_t_pow(J)), J + 2);
  });
  check("d", 1, 0, coef_d, [&](int J) { return gf(one_plus_t_pow(J), J + 1); });
  check("d'", 1, 0, coef_dp,
        [&](int J) { return gf(one_plus_t_pow(J + 1), J + 2); });
  check("e", 2, 1, coef_e, [&](int J) {
    return gf(Int(4) * (Poly::var_t() * one_plus_t_pow(J - 2)), J + 1);
  });
  check("e'", 2, 1, coef_ep, [&](int J) {
    return gf(Int(4) * (Poly::var_t() * one_plus_t_pow(J - 1)), J + 2);
  });
  return rep;
}

CheckReport three_way_check(const PatternSet& gamma, Family fam, int nmax) {
  CheckReport rep;
  auto brute = brute_distribution(gamma, nmax, fam);
  auto engine =
      specialized_distribution(fam, gamma, {nmax, ClusterSource::brute, {}});
  const ShapeInfo info = classify_pattern(gamma);
  const bool has_closed =
      info.shape != PatternShape::other &&
      !(info.shape == PatternShape::transpositional &&
        (fam == Family::ides_imaj || fam == Family::ides_icomaj));
  std::vector<Poly> closed;
  if (has_closed)
    closed = closed_distribution(fam, gamma, {nmax, ClusterSource::closed, {}});
  for (int n = 0; n <= nmax; ++n) {
    bool ok = brute[n] == engine[n] && (!has_closed || brute[n] == closed[n]);
    std::string what = family_name(fam) + " over " + gamma.str() + " at n=" +
                       std::to_string(n) + ": brute = engine" +
                       (has_closed ? " = closed" : " (no closed form)");
    if (ok)
      rep.pass(what);
    else
      rep.fail(what);
  }
  return rep;
}

}  // namespace cluskit
