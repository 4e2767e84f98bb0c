#include "cluskit/fqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluskit {

FQSymElement FQSymElement::unit(int cap) {
  FQSymElement e(cap);
  e.add(Permutation(), Poly::constant(1));
  return e;
}

FQSymElement FQSymElement::g_basis(const Permutation& p, int cap) {
  FQSymElement e(cap);
  if (p.size() <= cap) e.add(p, Poly::constant(1));
  return e;
}

namespace {

template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  if (n == 0) {
    fn(Permutation());
    return;
  }
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

FQSymElement FQSymElement::occurrence_sum(const PatternSet& g, int cap) {
  FQSymElement e(cap);
  for (int n = 0; n <= cap; ++n)
    for_each_perm(n, [&](const Permutation& pi) {
      e.add(pi, Poly::monomial(1, int(count_occurrences(pi, g)), 0, 0));
    });
  return e;
}

FQSymElement FQSymElement::cluster_sum(const PatternSet& g, int cap,
                                       bool shift_s) {
  FQSymElement e(cap);
  if (g.empty()) throw std::invalid_argument("empty pattern set");
  for (int n = g.min_len(); n <= cap; ++n)
    for_each_cluster_bearing(
        n, g, [&](const Permutation& pi, const std::vector<Cluster>& cl) {
          Poly mk;
          for (const auto& c : cl) mk.add_term(1, c.mk(), 0, 0);
          e.add(pi, shift_s ? mk.shift_s_down() : mk);
        });
  return e;
}

Poly FQSymElement::coeff(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Poly() : it->second;
}

void FQSymElement::add(const Permutation& p, const Poly& c) {
  if (c.is_zero() || p.size() > cap_) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FQSymElement FQSymElement::operator-() const {
  FQSymElement r(cap_);
  for (auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

FQSymElement& FQSymElement::operator+=(const FQSymElement& o) {
  cap_ = std::min(cap_, o.cap_);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.size() > cap_; });
  for (auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

FQSymElement& FQSymElement::operator-=(const FQSymElement& o) {
  return *this += -o;
}

FQSymElement operator*(const FQSymElement& a, const FQSymElement& b) {
  FQSymElement r(std::min(a.cap_, b.cap_));
  // terms_ is graded, so once |pa| + |pb| passes the cap the inner loop stops
  for (auto& [pa, ca] : a.terms_) {
    if (pa.size() > r.cap_) break;
    for (auto& [pb, cb] : b.terms_) {
      if (pa.size() + pb.size() > r.cap_) break;
      Poly c = ca * cb;
      for (const auto& tau : shifted_concats(pa, pb)) r.add(tau, c);
    }
  }
  return r;
}

FQSymElement FQSymElement::inverse_geometric() const {
  Poly c0 = coeff(Permutation());
  if (!(c0 == Poly::constant(1)))
    throw std::domain_error("inverse_geometric requires unit constant term");
  FQSymElement h = FQSymElement::unit(cap_) - *this;  // positive degrees only
  FQSymElement acc = FQSymElement::unit(cap_);
  FQSymElement p = FQSymElement::unit(cap_);
  for (int k = 1; k <= cap_; ++k) {
    p = p * h;
    if (p.is_zero()) break;
    acc += p;
  }
  return acc;
}

std::string FQSymElement::dump() const {
  std::string out;
  for (auto& [p, c] : terms_) {
    std::string cs = c.str();
    if (c.term_count() > 1) cs = "(" + cs + ")";
    out += cs + " * G[" + (p.empty() ? "" : p.str()) + "]\n";
  }
  return out;
}

FQSymElement ribbon(const Composition& L, int cap) {
  FQSymElement e(cap);
  const int n = L.total();
  if (n > cap) return e;
  for_each_perm(n, [&](const Permutation& pi) {
    if (descent_composition(pi) == L) e.add(pi, Poly::constant(1));
  });
  return e;
}

QSymElement QSymElement::unit(int cap) {
  QSymElement e(cap);
  e.add(Composition{}, Poly::constant(1));
  return e;
}

QSymElement QSymElement::f_basis(const Composition& L, int cap) {
  QSymElement e(cap);
  if (L.total() <= cap) e.add(L, Poly::constant(1));
  return e;
}

Poly QSymElement::coeff(const Composition& L) const {
  auto it = terms_.find(L);
  return it == terms_.end() ? Poly() : it->second;
}

void QSymElement::add(const Composition& L, const Poly& c) {
  if (c.is_zero() || L.total() > cap_) return;
  auto [it, fresh] = terms_.try_emplace(L, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
  cap_ = std::min(cap_, o.cap_);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.total() > cap_; });
  for (auto& [L, c] : o.terms_) add(L, c);
  return *this;
}

Permutation composition_rep(const Composition& L) {
  std::vector<int> v;
  int hi = L.total();
  for (int part : L.parts) {
    // this run takes the top `part` unused values, ascending
    for (int j = hi - part + 1; j <= hi; ++j) v.push_back(j);
    hi -= part;
  }
  return Permutation(std::move(v));
}

QSymElement operator*(const QSymElement& a, const QSymElement& b) {
  QSymElement r(std::min(a.cap_, b.cap_));
  for (auto& [La, ca] : a.terms_) {
    if (La.total() > r.cap_) break;
    Permutation pa = composition_rep(La);
    for (auto& [Lb, cb] : b.terms_) {
      const int m = La.total(), n = Lb.total();
      if (m + n > r.cap_) break;
      // representative of Lb on {m+1 .. m+n}
      Permutation pb = composition_rep(Lb);
      std::vector<int> shifted(pb.letters());
      for (int& x : shifted) x += m;
      Poly c = ca * cb;
      for (const auto& w : shuffles(pa.letters(), shifted))
        r.add(descent_composition(Permutation(w)), c);
    }
  }
  return r;
}

QSymElement rho(const FQSymElement& e) {
  QSymElement r(e.cap());
  for (auto& [p, c] : e.terms()) r.add(descent_composition(p.inverse()), c);
  return r;
}

bool hom_is_hadamard(Hom h) {
  return h == Hom::ides_icomaj || h == Hom::ipk || h == Hom::ilpk;
}

TruncatedSeries HomEvaluator::prefactor(int n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  TruncatedSeries one = TruncatedSeries::constant(1, tr_);
  TruncatedSeries t = TruncatedSeries::variable(Var::t, tr_);
  TruncatedSeries f = one;
  switch (hom_) {
    case Hom::plain:
      f = TruncatedSeries::constant(Rat(1) / Rat(factorial(n)), tr_);
      break;
    case Hom::q_inv:
      f = TruncatedSeries::from_poly(q_factorial(n), tr_).inverse();
      break;
    case Hom::ides_icomaj: {
      TruncatedSeries prod = one;
      for (int i = 0; i <= n; ++i) {
        TruncatedSeries qi =
            TruncatedSeries::monomial(1, {0, 1, i, 0}, tr_);  // t q^i
        prod = prod * (one - qi);
      }
      f = prod.inverse();
      break;
    }
    case Hom::ipk:
    case Hom::ilpk:
      f = (one - t).pow(n + 1).inverse();
      break;
  }
  cache_.emplace(n, f);
  return f;
}

TruncatedSeries HomEvaluator::image(const Permutation& pi) {
  const int n = pi.size();
  if (n == 0) {
    return hom_is_hadamard(hom_) ? TruncatedSeries::hadamard_one(tr_)
                                 : TruncatedSeries::constant(1, tr_);
  }
  StatRecord r = stats(pi);
  TruncatedSeries pre = prefactor(n);
  Expo mono;
  mono.x = n;
  Rat scale = 1;
  TruncatedSeries extra = TruncatedSeries::constant(1, tr_);
  TruncatedSeries onept =
      TruncatedSeries::constant(1, tr_) + TruncatedSeries::variable(Var::t, tr_);
  switch (hom_) {
    case Hom::plain:
      break;
    case Hom::q_inv:
      mono.q = r.inv;
      break;
    case Hom::ides_icomaj:
      mono.t = r.ides + 1;
      mono.q = r.icomaj;
      break;
    case Hom::ipk:
      mono.t = r.ipk + 1;
      scale = Rat(Int(1) << (2 * r.ipk + 1));
      extra = onept.pow(n - 2 * r.ipk - 1);
      break;
    case Hom::ilpk:
      mono.t = r.ilpk;
      scale = Rat(Int(1) << (2 * r.ilpk));
      extra = onept.pow(n - 2 * r.ilpk);
      break;
  }
  return TruncatedSeries::monomial(scale, mono, tr_) * extra * pre;
}

TruncatedSeries HomEvaluator::image(const FQSymElement& e) {
  TruncatedSeries acc(tr_);
  for (auto& [p, c] : e.terms())
    acc += TruncatedSeries::from_poly(c, tr_) * image(p);
  return acc;
}

TruncatedSeries apply_hom(const FQSymElement& e, Hom h, Trunc tr) {
  HomEvaluator ev(h, tr);
  return ev.image(e);
}

bool hom_is_multiplicative_check(Hom h, int N, Trunc tr, std::string* detail) {
  HomEvaluator ev(h, tr);
  const bool had = hom_is_hadamard(h);
  for (int m = 0; m <= N; ++m)
    for (int n = 0; m + n <= N; ++n) {
      bool ok = true;
      std::string bad;
      for_each_perm(m, [&](const Permutation& pa) {
        if (!ok) return;
        for_each_perm(n, [&](const Permutation& pb) {
          if (!ok) return;
          TruncatedSeries lhs(tr);
          for (const auto& tau : shifted_concats(pa, pb)) lhs += ev.image(tau);
          TruncatedSeries a = ev.image(pa), b = ev.image(pb);
          TruncatedSeries rhs = had ? a.hadamard(b) : a * b;
          if (!equal_within(lhs, rhs)) {
            ok = false;
            bad = pa.str() + " . " + pb.str();
          }
        });
      });
      if (!ok) {
        if (detail) *detail = "multiplicativity fails at " + bad;
        return false;
      }
    }
  return true;
}

IdentityReport verify_cluster_identity(const PatternSet& g, int cap) {
  IdentityReport rep;
  if (g.empty()) {
    rep.detail = "empty pattern set";
    return rep;
  }
  FQSymElement lhs = FQSymElement::unit(cap) -
                     FQSymElement::g_basis(Permutation::identity(1), cap) -
                     FQSymElement::cluster_sum(g, cap, /*shift_s=*/true);
  FQSymElement fbar = FQSymElement::occurrence_sum(g, cap);
  FQSymElement prod = lhs * fbar;
  FQSymElement prod2 = fbar * lhs;
  const FQSymElement one = FQSymElement::unit(cap);
  rep.ok = prod == one && prod2 == one;
  if (!rep.ok) {
    FQSymElement diff = prod - one;
    for (auto& [p, c] : diff.terms()) {
      rep.detail = "first mismatch at G[" + p.str() + "]: " + c.str();
      break;
    }
    if (rep.detail.empty()) rep.detail = "left product mismatch";
  } else {
    rep.detail = "identity holds to degree " + std::to_string(cap);
  }
  return rep;
}

}  // namespace cluskit
