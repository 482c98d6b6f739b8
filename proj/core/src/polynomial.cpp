#include "stablegenus/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace stablegenus {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    const Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  if (leading() < 0) scale = -scale;
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= scale;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial::constant(c) * p; }

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += stablegenus::to_string(mag);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lb;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).second.is_zero(); }

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and limits coefficient growth.
    const Polynomial prim = r.primitive();
    const bool flip = r.leading() > 0;  // next term is -rem
    seq.push_back(flip ? -prim : prim);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& sturm, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : sturm) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b) {
  return sign_changes(sturm, a) - sign_changes(sturm, b);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    const Rational r = -p.coeff(0) / p.coeff(1);
    if (lo < r && r < hi) out.push_back({r, r});
    return out;
  }
  const auto sturm = sturm_sequence(p);
  struct Pending {
    Rational a, b;
    int n;
  };
  std::vector<Pending> stack{{lo, hi, count_roots(sturm, lo, hi)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.n == 0) continue;
    if (cur.n == 1) {
      out.push_back({cur.a, cur.b});
      continue;
    }
    Rational m = (cur.a + cur.b) / 2;
    if (p.sign_at(m) == 0) {
      out.push_back({m, m});
      Rational h = (cur.b - cur.a) / 4;
      while (p.sign_at(m - h) == 0 || p.sign_at(m + h) == 0 || count_roots(sturm, m - h, m + h) != 1) h /= 2;
      stack.push_back({cur.a, m - h, count_roots(sturm, cur.a, m - h)});
      stack.push_back({m + h, cur.b, count_roots(sturm, m + h, cur.b)});
      continue;
    }
    stack.push_back({cur.a, m, count_roots(sturm, cur.a, m)});
    stack.push_back({m, cur.b, count_roots(sturm, m, cur.b)});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  // A lone root in (a,b) may still sit exactly on a rational midpoint; normalize now
  // so that non-degenerate intervals always show a sign change.
  for (auto& r : out) {
    if (!r.exact() && p.sign_at(r.lo) * p.sign_at(r.hi) > 0) {
      throw std::logic_error("isolate_roots: polynomial is not squarefree");
    }
  }
  return out;
}

RootInterval bisect(const Polynomial& p, const RootInterval& r) {
  if (r.exact()) return r;
  const Rational m = (r.lo + r.hi) / 2;
  const int sm = p.sign_at(m);
  if (sm == 0) return {m, m};
  if (sm == p.sign_at(r.lo)) return {m, r.hi};
  return {r.lo, m};
}

RootInterval refine_to(const Polynomial& p, RootInterval r, const Rational& max_width) {
  while (!r.exact() && r.width() > max_width) r = bisect(p, r);
  return r;
}

int totient(int n) {
  int result = n;
  int m = n;
  for (int f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const Polynomial& cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<int, Polynomial> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::monomial(1, n) - Polynomial::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod(p, cyclotomic(d)).first;
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(p)).first->second;
}

Polynomial palindromic_to_z(const std::vector<Rational>& symmetric_coeffs) {
  if (symmetric_coeffs.size() % 2 == 0) throw std::invalid_argument("palindromic_to_z: odd length required");
  const std::size_t m = symmetric_coeffs.size() / 2;
  for (std::size_t k = 0; k < m; ++k) {
    if (symmetric_coeffs[k] != symmetric_coeffs[symmetric_coeffs.size() - 1 - k]) {
      throw std::invalid_argument("palindromic_to_z: coefficients are not symmetric");
    }
  }
  // D_k(z) = t^k + t^-k: D_0 = 2, D_1 = z, D_{k+1} = z D_k - D_{k-1}.
  const Polynomial z = Polynomial::monomial(1, 1);
  Polynomial prev = Polynomial::constant(2);
  Polynomial cur = z;
  Polynomial out = Polynomial::constant(symmetric_coeffs[m]);
  for (std::size_t k = 1; k <= m; ++k) {
    out = out + symmetric_coeffs[m + k] * cur;
    Polynomial next = z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

const Polynomial& real_cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("real_cyclotomic: n must be positive");
  static std::map<int, Polynomial> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Polynomial r;
  if (n == 1) {
    r = Polynomial::from_integers({-2, 1});
  } else if (n == 2) {
    r = Polynomial::from_integers({2, 1});
  } else {
    r = palindromic_to_z(cyclotomic(n).coeffs());
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(r)).first->second;
}

}  // namespace stablegenus
