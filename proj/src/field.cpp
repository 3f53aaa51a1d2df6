#include "pgroups/field.hpp"

#include <stdexcept>
#include <string>

namespace pgroups {

namespace {

using Poly = std::vector<int>;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_p(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod_p(int a, int p) {
  // p is prime, so a^(p-2)
  long long r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = inv_mod_p(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int c = static_cast<int>(1LL * a.back() * lead_inv % p);
    for (int i = 0; i <= df; ++i)
      a[shift + i] = mod_p(a[shift + i] - 1LL * c * f[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& f, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool Field::is_irreducible(int p, const std::vector<int>& f_in) {
  Poly f = f_in;
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  Poly xpk{0, 1};
  for (int k = 1; k <= m / 2; ++k) {
    xpk = poly_powmod(xpk, p, f, p);
    Poly d = xpk;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = mod_p(d[1] - 1, p);
    Poly g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<int> Field::default_modulus(int p, int m) {
  if (p == 2 && m == 6) return {1, 1, 0, 1, 1, 0, 1};
  if (!is_prime(p) || m < 1) throw std::invalid_argument("bad field parameters");
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  if (p == 2 ? m > 16 : count > 10000) throw std::invalid_argument("field too large");
  for (long long code = 1; code < count; ++code) {
    Poly f(m + 1, 0);
    long long c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (!is_irreducible(p, f)) continue;
    try {
      Field trial(p, m, f);
      return f;
    } catch (const std::invalid_argument&) {
      // irreducible but X is not primitive
    }
  }
  throw std::invalid_argument("no primitive polynomial found");
}

Field::Field(int p, int m) : Field(p, m, default_modulus(p, m)) {}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)), omega_(0) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m < 1) throw std::invalid_argument("m must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (p == 2 ? m > 16 : q > 10000)
    throw std::invalid_argument("field too large: " + std::to_string(p) + "^" +
                                std::to_string(m));
  q_ = static_cast<Elem>(q);
  if (static_cast<int>(modulus_.size()) != m + 1 || modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree m");
  for (int c : modulus_)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!is_irreducible(p, modulus_))
    throw std::invalid_argument("modulus is reducible");
  build();
}

void Field::build() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  // residue class of X; for m = 1 this is the root of the linear modulus
  Poly x_res = poly_mod(Poly{0, 1}, modulus_, p_);
  x_res.resize(m_, 0);
  omega_ = from_coefficients(x_res);
  std::vector<int> cur(m_, 0);
  cur[0] = 1;
  for (Elem i = 0; i < q_ - 1; ++i) {
    const Elem code = from_coefficients(cur);
    if (log_[code] != -1)
      throw std::invalid_argument("X is not a generator of the unit group");
    exp_[i] = code;
    log_[code] = static_cast<std::int32_t>(i);
    // cur *= omega (reduce the polynomial product)
    Poly prod(2 * m_, 0);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        prod[a + b] = static_cast<int>((prod[a + b] + 1LL * cur[a] * x_res[b]) % p_);
    Poly red = poly_mod(prod, modulus_, p_);
    red.resize(m_, 0);
    cur = red;
  }
  if (from_coefficients(cur) != 1)
    throw std::invalid_argument("omega order mismatch");
}

std::vector<int> Field::coefficients(Elem a) const {
  std::vector<int> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elem Field::from_coefficients(const std::vector<int>& c) const {
  Elem r = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    r = r * p_ + static_cast<Elem>(mod_p(c[i], p_));
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<Elem>((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<Elem>((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const Elem n = q_ - 1;
  return exp_[(static_cast<Elem>(log_[a]) + static_cast<Elem>(log_[b])) % n];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const Elem n = q_ - 1;
  return exp_[(n - static_cast<Elem>(log_[a])) % n];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_[r];
}

std::int64_t Field::log(Elem a) const {
  if (a == 0 || a >= q_) throw std::domain_error("log of zero or out of range");
  return log_[a];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t kr = k % n;
  if (kr < 0) kr += n;
  return exp_[static_cast<std::uint64_t>(log_[a]) * kr % n];
}

Elem Field::frobenius(Elem a, std::int64_t i) const {
  if (a == 0) return 0;
  std::int64_t r = i % m_;
  if (r < 0) r += m_;
  const std::uint64_t n = q_ - 1;
  std::uint64_t e = static_cast<std::uint64_t>(log_[a]);
  for (std::int64_t j = 0; j < r; ++j) e = e * p_ % n;
  return exp_[e];
}

bool Field::in_subfield(Elem a, int n) const {
  if (n < 1 || m_ % n != 0) throw std::invalid_argument("subfield degree must divide m");
  return frobenius(a, n) == a;
}

Elem Field::interpolation_coefficient(const std::vector<Elem>& values,
                                      std::uint64_t i) const {
  if (values.size() != q_) throw std::invalid_argument("value table size");
  if (i >= q_) throw std::invalid_argument("coefficient index");
  if (i == 0) return values[0];
  const std::uint64_t n = q_ - 1;
  Elem acc = 0;
  if (i == n) {
    for (Elem x = 0; x < q_; ++x) acc = add(acc, values[x]);
    return neg(acc);
  }
  // c_i = -sum_{t} f(omega^t) omega^{-t i}
  const std::uint64_t step = (n - i % n) % n;
  std::uint64_t e = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    const Elem v = values[exp_[t]];
    if (v != 0) acc = add(acc, exp_[(static_cast<std::uint64_t>(log_[v]) + e) % n]);
    e = (e + step) % n;
  }
  return neg(acc);
}

std::vector<Elem> Field::interpolate(const std::vector<Elem>& values) const {
  if (values.size() != q_) throw std::invalid_argument("value table size");
  std::vector<Elem> c(q_, 0);
  for (std::uint64_t i = 0; i < q_; ++i) c[i] = interpolation_coefficient(values, i);
  for (Elem x = 0; x < q_; ++x)
    if (evaluate(c, x) != values[x])
      throw std::logic_error("interpolation failed re-evaluation");
  return c;
}

Elem Field::evaluate(const std::vector<Elem>& coeffs, Elem x) const {
  Elem r = 0;
  for (size_t k = coeffs.size(); k-- > 0;) r = add(mul(r, x), coeffs[k]);
  return r;
}

}  // namespace pgroups
