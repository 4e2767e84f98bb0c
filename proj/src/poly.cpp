#include "cluskit/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cluskit {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // always exact: r is binomial(n-k+i, i) after this step
  }
  return r;
}

uint64_t Poly::pack(int es, int et, int eq) {
  return (uint64_t(es) << 42) | (uint64_t(et) << 21) | uint64_t(eq);
}

void Poly::unpack(uint64_t key, int& es, int& et, int& eq) {
  es = int(key >> 42);
  et = int((key >> 21) & 0x1FFFFF);
  eq = int(key & 0x1FFFFF);
}

Poly Poly::constant(Int c) { return monomial(std::move(c), 0, 0, 0); }

Poly Poly::monomial(Int c, int es, int et, int eq) {
  Poly p;
  p.add_term(c, es, et, eq);
  return p;
}

Int Poly::coeff(int es, int et, int eq) const {
  auto it = c_.find(pack(es, et, eq));
  return it == c_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Int& c, int es, int et, int eq) {
  if (c == 0) return;
  if (es < 0 || et < 0 || eq < 0) throw std::invalid_argument("negative exponent");
  if (es >= (1 << 21) || et >= (1 << 21) || eq >= (1 << 21))
    throw std::invalid_argument("exponent too large");
  uint64_t key = pack(es, et, eq);
  auto [it, fresh] = c_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [k, v] : o.c_) {
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [k, v] : o.c_) {
    auto [it, fresh] = c_.try_emplace(k, Int(-v));
    if (!fresh) {
      it->second -= v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ka, va] : a.c_) {
    int as, at, aq;
    Poly::unpack(ka, as, at, aq);
    for (auto& [kb, vb] : b.c_) {
      int bs, bt, bq;
      Poly::unpack(kb, bs, bt, bq);
      r.add_term(va * vb, as + bs, at + bt, aq + bq);
    }
  }
  return r;
}

Poly operator*(const Int& k, Poly p) {
  if (k == 0) return Poly();
  for (auto it = p.c_.begin(); it != p.c_.end(); ++it) it->second *= k;
  return p;
}

int Poly::deg_s() const {
  int d = 0;
  for (auto& [k, v] : c_) d = std::max(d, int(k >> 42));
  return d;
}

int Poly::deg_t() const {
  int d = 0;
  for (auto& [k, v] : c_) d = std::max(d, int((k >> 21) & 0x1FFFFF));
  return d;
}

int Poly::deg_q() const {
  int d = 0;
  for (auto& [k, v] : c_) d = std::max(d, int(k & 0x1FFFFF));
  return d;
}

Poly Poly::shift_s_down() const {
  // s^k -> (s-1)^k, expanded by the binomial theorem.
  Poly r;
  for (auto& [key, c] : c_) {
    int es, et, eq;
    unpack(key, es, et, eq);
    for (int j = 0; j <= es; ++j) {
      Int b = binomial(es, j) * c;
      if ((es - j) % 2 != 0) b = -b;
      r.add_term(b, j, et, eq);
    }
  }
  return r;
}

namespace {

Poly eval_one(const Poly& p, int which, const Int& value) {
  Poly r;
  for (auto& [key, c] : p.terms()) {
    int e[3];
    Poly::unpack(key, e[0], e[1], e[2]);
    Int factor = 1;
    for (int i = 0; i < e[which]; ++i) factor *= value;
    e[which] = 0;
    r.add_term(c * factor, e[0], e[1], e[2]);
  }
  return r;
}

}  // namespace

Poly Poly::eval_s(const Int& v) const { return eval_one(*this, 0, v); }
Poly Poly::eval_t(const Int& v) const { return eval_one(*this, 1, v); }
Poly Poly::eval_q(const Int& v) const { return eval_one(*this, 2, v); }

Poly Poly::imaj_transform(int n) const {
  Poly r;
  for (auto& [key, c] : c_) {
    int es, et, eq;
    unpack(key, es, et, eq);
    int neq = (et - 1) * n - eq;
    if (neq < 0) throw std::domain_error("imaj transform: negative exponent");
    r.add_term(c, es, et, neq);
  }
  return r;
}

Poly Poly::reverse_t(int top) const {
  Poly r;
  for (auto& [key, c] : c_) {
    int es, et, eq;
    unpack(key, es, et, eq);
    if (et > top) throw std::domain_error("reverse_t: degree above top");
    r.add_term(c, es, top - et, eq);
  }
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::vector<uint64_t> keys;
  keys.reserve(c_.size());
  for (auto& [k, v] : c_) keys.push_back(k);
  auto total = [](uint64_t k) {
    int es, et, eq;
    unpack(k, es, et, eq);
    return es + et + eq;
  };
  std::sort(keys.begin(), keys.end(), [&](uint64_t a, uint64_t b) {
    if (total(a) != total(b)) return total(a) < total(b);
    return a > b;  // within a degree: higher s-power (then t, q) first
  });
  std::string out;
  bool first = true;
  for (uint64_t k : keys) {
    const Int& c = c_.at(k);
    bool neg = c < 0;
    Int ac = neg ? Int(-c) : c;
    int es, et, eq;
    unpack(k, es, et, eq);
    std::string mono;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("s", es);
    var("t", et);
    var("q", eq);
    std::string term;
    if (mono.empty()) {
      term = ac.str();
    } else if (ac == 1) {
      term = mono;
    } else {
      term = ac.str() + "*" + mono;
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

Poly Poly::parse(std::string_view text) {
  std::string src;
  for (char c : text)
    if (c != ' ' && c != '\t') src += c;
  if (src.empty()) throw std::invalid_argument("empty polynomial text");
  Poly r;
  size_t i = 0;
  while (i < src.size()) {
    bool neg = false;
    if (src[i] == '+' || src[i] == '-') {
      neg = src[i] == '-';
      ++i;
    }
    Int coeff = 1;
    int es = 0, et = 0, eq = 0;
    bool any = false, saw_coeff = false;
    while (i < src.size() && src[i] != '+' && src[i] != '-') {
      if (src[i] == '*') {
        ++i;
        continue;
      }
      if (src[i] >= '0' && src[i] <= '9') {
        if (saw_coeff) throw std::invalid_argument("bad polynomial text");
        size_t j = i;
        while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
        coeff = Int(src.substr(i, j - i));
        saw_coeff = any = true;
        i = j;
        continue;
      }
      int* slot = nullptr;
      if (src[i] == 's') slot = &es;
      else if (src[i] == 't') slot = &et;
      else if (src[i] == 'q') slot = &eq;
      else throw std::invalid_argument("bad polynomial text");
      ++i;
      int e = 1;
      if (i < src.size() && src[i] == '^') {
        ++i;
        size_t j = i;
        while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
        if (j == i) throw std::invalid_argument("bad polynomial text");
        e = std::stoi(std::string(src.substr(i, j - i)));
        i = j;
      }
      *slot += e;
      any = true;
    }
    if (!any) throw std::invalid_argument("bad polynomial text");
    r.add_term(neg ? Int(-coeff) : coeff, es, et, eq);
  }
  return r;
}

Poly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of negative");
  Poly r = Poly::constant(1);
  for (int k = 2; k <= n; ++k) {
    Poly qk;  // [k]_q = 1 + q + ... + q^{k-1}
    for (int j = 0; j < k; ++j) qk.add_term(1, 0, 0, j);
    r = r * qk;
  }
  return r;
}

Poly q_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial out of range");
  // q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k); row-by-row, exact.
  std::vector<Poly> row{Poly::constant(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<Poly> next(std::min(r, k) + 1);
    next[0] = Poly::constant(1);
    for (int j = 1; j <= std::min(r, k); ++j) {
      Poly shifted;  // q^j * C(r-1, j)
      if (j < int(row.size()))
        for (auto& [key, c] : row[j].terms()) {
          int es, et, eq;
          Poly::unpack(key, es, et, eq);
          shifted.add_term(c, es, et, eq + j);
        }
      next[j] = (j - 1 < int(row.size()) ? row[j - 1] : Poly()) + shifted;
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace cluskit
