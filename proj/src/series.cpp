#include "cluskit/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cluskit {

int Expo::get(Var v) const {
  switch (v) {
    case Var::s: return s;
    case Var::t: return t;
    case Var::q: return q;
    case Var::x: return x;
  }
  return 0;
}

void Expo::set(Var v, int e) {
  switch (v) {
    case Var::s: s = e; return;
    case Var::t: t = e; return;
    case Var::q: q = e; return;
    case Var::x: x = e; return;
  }
}

Trunc Trunc::meet(const Trunc& a, const Trunc& b) {
  return {std::min(a.s, b.s), std::min(a.t, b.t), std::min(a.q, b.q),
          std::min(a.x, b.x)};
}

bool Trunc::contains(const Expo& e) const {
  return e.s <= s && e.t <= t && e.q <= q && e.x <= x;
}

int Trunc::get(Var v) const {
  switch (v) {
    case Var::s: return s;
    case Var::t: return t;
    case Var::q: return q;
    case Var::x: return x;
  }
  return 0;
}

void Trunc::set(Var v, int bound) {
  switch (v) {
    case Var::s: s = bound; return;
    case Var::t: t = bound; return;
    case Var::q: q = bound; return;
    case Var::x: x = bound; return;
  }
}

uint64_t TruncatedSeries::pack(const Expo& e) {
  return (uint64_t(e.s) << 48) | (uint64_t(e.t) << 32) | (uint64_t(e.q) << 16) |
         uint64_t(e.x);
}

Expo TruncatedSeries::unpack(uint64_t key) {
  return {int(key >> 48), int((key >> 32) & 0xFFFF), int((key >> 16) & 0xFFFF),
          int(key & 0xFFFF)};
}

void TruncatedSeries::add_term(const Rat& c, Expo e) {
  if (c == 0) return;
  if (e.s < 0 || e.t < 0 || e.q < 0 || e.x < 0)
    throw std::invalid_argument("negative exponent");
  if (!tr_.contains(e)) return;
  uint64_t key = pack(e);
  auto [it, fresh] = c_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, Trunc tr) {
  TruncatedSeries f(tr);
  f.add_term(c, {});
  return f;
}

TruncatedSeries TruncatedSeries::monomial(const Rat& c, Expo e, Trunc tr) {
  TruncatedSeries f(tr);
  f.add_term(c, e);
  return f;
}

TruncatedSeries TruncatedSeries::variable(Var v, Trunc tr) {
  Expo e;
  e.set(v, 1);
  return monomial(1, e, tr);
}

TruncatedSeries TruncatedSeries::geometric(Var v, Trunc tr) {
  TruncatedSeries f(tr);
  for (int k = 0; k <= tr.get(v); ++k) {
    Expo e;
    e.set(v, k);
    f.add_term(1, e);
  }
  return f;
}

TruncatedSeries TruncatedSeries::hadamard_one(Trunc tr) {
  return geometric(Var::t, tr);
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, Trunc tr) {
  TruncatedSeries f(tr);
  for (auto& [key, c] : p.terms()) {
    int es, et, eq;
    Poly::unpack(key, es, et, eq);
    f.add_term(Rat(c), {es, et, eq, 0});
  }
  return f;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(tr_);
  for (auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  tr_ = Trunc::meet(tr_, o.tr_);
  // re-clamp our own terms to the tightened bounds
  for (auto it = c_.begin(); it != c_.end();) {
    if (!tr_.contains(unpack(it->first)))
      it = c_.erase(it);
    else
      ++it;
  }
  for (auto& [k, v] : o.c_) {
    if (!tr_.contains(unpack(k))) continue;
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  return *this += -o;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(Trunc::meet(a.tr_, b.tr_));
  for (auto& [ka, va] : a.c_) {
    Expo ea = TruncatedSeries::unpack(ka);
    if (!r.tr_.contains(ea)) continue;
    for (auto& [kb, vb] : b.c_) {
      Expo eb = TruncatedSeries::unpack(kb);
      Expo e{ea.s + eb.s, ea.t + eb.t, ea.q + eb.q, ea.x + eb.x};
      if (!r.tr_.contains(e)) continue;
      r.add_term(va * vb, e);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& k) const {
  TruncatedSeries r(tr_);
  if (k == 0) return r;
  for (auto& [key, v] : c_) r.c_.emplace(key, v * k);
  return r;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  TruncatedSeries r = constant(1, tr_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  auto it = c_.find(0);
  if (it == c_.end()) throw std::domain_error("not invertible");
  const Rat c0 = it->second;
  // Newton iteration g <- g + g(1 - f g); the residual squares each round, so
  // its minimum total degree doubles and the loop is logarithmic in the
  // truncation budget.
  TruncatedSeries g = constant(Rat(1) / c0, tr_);
  for (int round = 0; round < 64; ++round) {
    TruncatedSeries e = constant(1, tr_) - *this * g;
    if (e.is_zero()) return g;
    g += g * e;
  }
  throw std::logic_error("inverse did not converge");
}

TruncatedSeries TruncatedSeries::hadamard(const TruncatedSeries& o) const {
  Trunc tr = Trunc::meet(tr_, o.tr_);
  Trunc slice_tr = tr;
  slice_tr.t = 0;
  TruncatedSeries r(tr);
  for (int k = 0; k <= tr.t; ++k) {
    TruncatedSeries a(slice_tr), b(slice_tr);
    for (auto& [key, v] : c_) {
      Expo e = unpack(key);
      if (e.t != k) continue;
      e.t = 0;
      a.add_term(v, e);
    }
    if (a.is_zero()) continue;
    for (auto& [key, v] : o.c_) {
      Expo e = unpack(key);
      if (e.t != k) continue;
      e.t = 0;
      b.add_term(v, e);
    }
    if (b.is_zero()) continue;
    TruncatedSeries ab = a * b;
    for (auto& [key, v] : ab.c_) {
      Expo e = unpack(key);
      e.t = k;
      r.add_term(v, e);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::hadamard_pow(long long n) const {
  if (n < 0) throw std::invalid_argument("negative hadamard power");
  TruncatedSeries r = hadamard_one(tr_);
  for (long long i = 0; i < n; ++i) r = r.hadamard(*this);
  return r;
}

TruncatedSeries TruncatedSeries::hadamard_inverse() const {
  Trunc slice_tr = tr_;
  slice_tr.t = 0;
  TruncatedSeries r(tr_);
  for (int k = 0; k <= tr_.t; ++k) {
    TruncatedSeries a(slice_tr);
    for (auto& [key, v] : c_) {
      Expo e = unpack(key);
      if (e.t != k) continue;
      e.t = 0;
      a.add_term(v, e);
    }
    TruncatedSeries inv(slice_tr);
    try {
      inv = a.inverse();
    } catch (const std::domain_error&) {
      throw std::domain_error("hadamard inverse: slice at t^" +
                              std::to_string(k) + " not invertible");
    }
    for (auto& [key, v] : inv.c_) {
      Expo e = unpack(key);
      e.t = k;
      r.add_term(v, e);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::substitute(Var var,
                                            const TruncatedSeries& g) const {
  if (g.is_zero()) {
    TruncatedSeries r(tr_);
    for (auto& [key, v] : c_) {
      Expo e = unpack(key);
      if (e.get(var) == 0) r.add_term(v, e);
    }
    return r;
  }
  Trunc res = Trunc::meet(tr_, g.tr_);
  bool any_w = false;
  for (Var w : {Var::s, Var::t, Var::q, Var::x}) {
    int mindeg = INT32_MAX;
    for (auto& [key, v] : g.c_) mindeg = std::min(mindeg, unpack(key).get(w));
    if (mindeg >= 1) {
      any_w = true;
      res.set(w, std::min(res.get(w), tr_.get(var)));
    }
  }
  if (!any_w) throw std::domain_error("unbounded substitution");

  // group terms of f by the var-exponent, walk exponents in increasing order
  // so powers of g build incrementally
  std::map<int, TruncatedSeries> groups;
  for (auto& [key, v] : c_) {
    Expo e = unpack(key);
    int k = e.get(var);
    e.set(var, 0);
    auto [it, fresh] = groups.try_emplace(k, TruncatedSeries(res));
    it->second.add_term(v, e);
  }
  TruncatedSeries result(res);
  TruncatedSeries gpow = TruncatedSeries::constant(1, res);
  TruncatedSeries gg(res);
  for (auto& [key, v] : g.c_) {
    Expo e = unpack(key);
    if (res.contains(e)) gg.add_term(v, e);
  }
  int cur = 0;
  for (auto& [k, part] : groups) {
    while (cur < k) {
      gpow = gpow * gg;
      ++cur;
      if (gpow.is_zero()) break;
    }
    if (cur < k) break;  // g^k vanished below truncation; later terms too
    result += part * gpow;
  }
  return result;
}

TruncatedSeries TruncatedSeries::sqrt_one_plus() const {
  auto it = c_.find(0);
  if (it == c_.end() || it->second != 1)
    throw std::domain_error("sqrt requires constant term 1");
  TruncatedSeries h = *this - constant(1, tr_);
  // binomial series: sum_k C(1/2, k) h^k; h has positive order, so h^k dies
  // once k exceeds the truncation budget
  TruncatedSeries acc = constant(1, tr_);
  TruncatedSeries hp = constant(1, tr_);
  Rat c = 1;
  for (long long k = 1;; ++k) {
    hp = hp * h;
    if (hp.is_zero()) break;
    c *= Rat(3 - 2 * k, 2 * k);  // C(1/2,k) = C(1/2,k-1) * (1/2 - (k-1)) / k
    acc += hp.scaled(c);
  }
  return acc;
}

TruncatedSeries TruncatedSeries::divide_by(Var var, int k) const {
  Trunc tr = tr_;
  if (tr.get(var) < k) throw std::domain_error("divide_by: bound too small");
  tr.set(var, tr.get(var) - k);
  TruncatedSeries r(tr);
  for (auto& [key, v] : c_) {
    Expo e = unpack(key);
    if (e.get(var) < k) throw std::domain_error("divide_by: not divisible");
    e.set(var, e.get(var) - k);
    r.add_term(v, e);
  }
  return r;
}

TruncatedSeries TruncatedSeries::slice(Var var, int k) const {
  if (k < 0 || k > tr_.get(var))
    throw std::out_of_range("slice beyond truncation");
  Trunc tr = tr_;
  tr.set(var, 0);
  TruncatedSeries r(tr);
  for (auto& [key, v] : c_) {
    Expo e = unpack(key);
    if (e.get(var) != k) continue;
    e.set(var, 0);
    r.add_term(v, e);
  }
  return r;
}

Rat TruncatedSeries::coeff(const Expo& e) const {
  if (!tr_.contains(e)) throw std::out_of_range("coefficient beyond truncation");
  auto it = c_.find(pack(e));
  return it == c_.end() ? Rat(0) : it->second;
}

Poly TruncatedSeries::to_poly() const {
  Poly p;
  for (auto& [key, v] : c_) {
    Expo e = unpack(key);
    if (e.x != 0) throw std::domain_error("to_poly: x power present");
    if (denominator(v) != 1)
      throw std::domain_error("to_poly: non-integer coefficient");
    p.add_term(numerator(v), e.s, e.t, e.q);
  }
  return p;
}

std::string TruncatedSeries::str() const {
  if (c_.empty()) return "0";
  std::vector<uint64_t> keys;
  keys.reserve(c_.size());
  for (auto& [k, v] : c_) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](uint64_t a, uint64_t b) {
    int ta = TruncatedSeries::unpack(a).total(),
        tb = TruncatedSeries::unpack(b).total();
    if (ta != tb) return ta < tb;
    return a > b;
  });
  std::string out;
  bool first = true;
  for (uint64_t k : keys) {
    const Rat& c = c_.at(k);
    bool neg = c < 0;
    Rat ac = neg ? Rat(-c) : c;
    Expo e = unpack(k);
    std::string mono;
    auto var = [&](const char* name, int p) {
      if (p == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (p > 1) mono += "^" + std::to_string(p);
    };
    var("s", e.s);
    var("t", e.t);
    var("q", e.q);
    var("x", e.x);
    std::string num = ac.str();  // "p" or "p/q"
    std::string term;
    if (mono.empty()) {
      term = num;
    } else if (ac == 1) {
      term = mono;
    } else {
      term = num + "*" + mono;
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

bool equal_within(const TruncatedSeries& a, const TruncatedSeries& b) {
  Trunc tr = Trunc::meet(a.trunc(), b.trunc());
  for (auto& [key, v] : a.terms()) {
    Expo e = TruncatedSeries::unpack(key);
    if (!tr.contains(e)) continue;
    if (b.coeff(e) != v) return false;
  }
  for (auto& [key, v] : b.terms()) {
    Expo e = TruncatedSeries::unpack(key);
    if (!tr.contains(e)) continue;
    if (a.coeff(e) != v) return false;
  }
  return true;
}

TruncatedSeries from_poly_substituted(const Poly& p, Var var,
                                      const TruncatedSeries& g, Trunc tr) {
  if (var == Var::x) throw std::invalid_argument("polynomials have no x");
  Trunc res = Trunc::meet(tr, g.trunc());
  std::map<int, TruncatedSeries> groups;
  for (auto& [key, c] : p.terms()) {
    int es, et, eq;
    Poly::unpack(key, es, et, eq);
    Expo e{es, et, eq, 0};
    int k = e.get(var);
    e.set(var, 0);
    auto [it, fresh] = groups.try_emplace(k, TruncatedSeries(res));
    it->second.add_term(Rat(c), e);
  }
  TruncatedSeries result(res);
  TruncatedSeries gpow = TruncatedSeries::constant(1, res);
  int cur = 0;
  for (auto& [k, part] : groups) {
    while (cur < k) {
      gpow = gpow * g;
      ++cur;
    }
    result += part * gpow;
  }
  return result;
}

}  // namespace cluskit
