#include "growthlab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Inverse of a mod p by the extended Euclidean algorithm; a != 0.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::int64_t t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_same_field(FieldElem a, FieldElem b) {
  if (a.p != b.p) throw UsageError("field elements from different fields");
}

}  // namespace

// ---------------------------------------------------------------------------

FieldElem FieldElem::operator+(FieldElem rhs) const {
  check_same_field(*this, rhs);
  std::uint32_t s = value + rhs.value;
  return {s >= p ? s - p : s, p};
}

FieldElem FieldElem::operator-(FieldElem rhs) const {
  check_same_field(*this, rhs);
  return {value >= rhs.value ? value - rhs.value : value + p - rhs.value, p};
}

FieldElem FieldElem::operator*(FieldElem rhs) const {
  check_same_field(*this, rhs);
  return {static_cast<std::uint32_t>(std::uint64_t{value} * rhs.value % p), p};
}

FieldElem FieldElem::operator/(FieldElem rhs) const { return *this * rhs.inv(); }

FieldElem FieldElem::operator-() const { return {value == 0 ? 0 : p - value, p}; }

FieldElem FieldElem::inv() const {
  if (value == 0) throw DivisionByZero();
  return {inv_mod(value, p), p};
}

std::optional<FieldElem> FieldElem::try_inv() const {
  if (value == 0) return std::nullopt;
  return FieldElem{inv_mod(value, p), p};
}

FieldElem FieldElem::pow(std::uint64_t e) const { return {pow_mod(value, e, p), p}; }

std::ostream& operator<<(std::ostream& os, FieldElem a) { return os << a.value; }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxFieldOrder) throw UsageError("prime modulus must be below 2^16");
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

FieldElem PrimeField::elem(std::int64_t v) const { return {reduce(v, p_), p_}; }

std::uint64_t PrimeField::order_of(FieldElem a) const {
  if (a.p != p_) throw UsageError("element not in this field");
  if (a.value == 0) throw DivisionByZero();
  std::uint64_t order = p_ - 1;
  for (std::uint64_t f : prime_factors(p_ - 1)) {
    while (order % f == 0 && pow_mod(a.value, order / f, p_) == 1) order /= f;
  }
  return order;
}

bool is_square(FieldElem t) {
  if (t.p == 2) return true;
  if (t.value == 0) return true;
  return pow_mod(t.value, (t.p - 1) / 2, t.p) == 1;
}

FieldElem primitive_root(const PrimeField& field) {
  const std::uint32_t p = field.p();
  if (p == 2) return field.one();
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
      return pow_mod(g, (p - 1) / f, p) != 1;
    });
    if (generates) return field.elem(g);
  }
  return field.one();  // unreachable for prime p
}

// ---------------------------------------------------------------------------

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < f.size() ? f[i] : 0;
    std::uint32_t b = i < g.size() ? g[i] : 0;
    r[i] = (a + b) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < f.size() ? f[i] : 0;
    std::uint32_t b = i < g.size() ? g[i] : 0;
    r[i] = (a + p - b) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

Poly mod(const Poly& f, const Poly& g, std::uint32_t p) {
  if (g.empty()) throw DivisionByZero();
  Poly r = f;
  trim(r);
  const int dg = degree(g);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (degree(r) >= dg) {
    const int shift = degree(r) - dg;
    const std::uint64_t c = std::uint64_t{r.back()} * lead_inv % p;
    for (int i = 0; i <= dg; ++i) {
      r[i + shift] = static_cast<std::uint32_t>((r[i + shift] + p - c * g[i] % p) % p);
    }
    trim(r);
  }
  return r;
}

Poly gcd(Poly f, Poly g, std::uint32_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
  }
  return f;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n <= 3) {
    // No roots <=> irreducible in degree 2 and 3.
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (int i = n; i >= 0; --i) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  const Poly x{0, 1};
  Poly xp = x;
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, p, f, p);
    if (degree(gcd(f, sub(xp, x, p), p)) != 0) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------

ExtField::ExtField(std::uint32_t p, int k) {
  if (!is_prime(p)) throw UsageError("characteristic must be prime");
  if (k < 1 || k > kMaxExtensionDegree) throw UsageError("extension degree must be in [1, 4]");
  std::vector<std::uint32_t> m;
  if (p == 3 && k == 2) {
    m = {1, 0, 1};
  } else if (p == 5 && k == 2) {
    m = {2, 1, 1};
  } else {
    // Least monic irreducible: enumerate the lower coefficients as a base-p counter.
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint32_t> cand(k + 1, 0);
      cand[k] = 1;
      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        cand[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly::is_irreducible(cand, p)) {
        m = std::move(cand);
        break;
      }
    }
  }
  init(p, std::move(m));
}

ExtField::ExtField(std::uint32_t p, std::vector<std::uint32_t> modulus) { init(p, std::move(modulus)); }

void ExtField::init(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw UsageError("characteristic must be prime");
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || k > kMaxExtensionDegree) throw UsageError("extension degree must be in [1, 4]");
  if (modulus.back() != 1) throw UsageError("modulus must be monic");
  for (auto c : modulus) {
    if (c >= p) throw UsageError("modulus coefficient out of range");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q >= kMaxFieldOrder) throw UsageError("field order must be below 2^16");
  if (!poly::is_irreducible(modulus, p)) throw UsageError("modulus is not irreducible over F_" + std::to_string(p));
  data_ = std::make_shared<const Data>(Data{p, k, static_cast<std::uint32_t>(q), std::move(modulus)});
}

ExtElem ExtField::zero() const { return ExtElem(data_, {}); }

ExtElem ExtField::one() const {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  c[0] = 1;
  return ExtElem(data_, c);
}

ExtElem ExtField::gen() const {
  if (data_->k == 1) return elem({(data_->p - data_->modulus[0]) % data_->p});
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  c[1] = 1;
  return ExtElem(data_, c);
}

ExtElem ExtField::elem(const std::vector<std::uint32_t>& coeffs) const {
  poly::Poly f;
  for (auto c : coeffs) f.push_back(c % data_->p);
  poly::trim(f);
  return zero().from_poly(poly::mod(f, data_->modulus, data_->p));
}

ExtElem ExtField::from_code(std::uint32_t code) const {
  if (code >= data_->q) throw UsageError("element code out of range");
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  for (int i = 0; i < data_->k; ++i) {
    c[i] = code % data_->p;
    code /= data_->p;
  }
  return ExtElem(data_, c);
}

std::string ExtField::describe() const {
  std::ostringstream os;
  os << "F_" << data_->q << " = F_" << data_->p << "[x]/(";
  bool first = true;
  for (int i = data_->k; i >= 0; --i) {
    const auto c = data_->modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

bool ExtField::operator==(const ExtField& other) const {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->modulus == other.data_->modulus);
}

std::uint32_t ExtElem::code() const {
  std::uint32_t code = 0;
  if (!field_) return 0;
  for (int i = field_->k - 1; i >= 0; --i) code = code * field_->p + c_[i];
  return code;
}

void ExtElem::check_same(const ExtElem& rhs) const {
  if (!field_ || !rhs.field_) throw UsageError("uninitialised extension-field element");
  if (field_ != rhs.field_ && !(field_->p == rhs.field_->p && field_->modulus == rhs.field_->modulus)) {
    throw UsageError("extension-field elements from different fields");
  }
}

poly::Poly ExtElem::as_poly() const {
  poly::Poly f(c_.begin(), c_.begin() + field_->k);
  poly::trim(f);
  return f;
}

ExtElem ExtElem::from_poly(const poly::Poly& f) const {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i];
  return ExtElem(field_, c);
}

ExtElem ExtElem::operator+(const ExtElem& rhs) const {
  check_same(rhs);
  auto c = c_;
  for (int i = 0; i < field_->k; ++i) c[i] = (c[i] + rhs.c_[i]) % field_->p;
  return ExtElem(field_, c);
}

ExtElem ExtElem::operator-(const ExtElem& rhs) const {
  check_same(rhs);
  auto c = c_;
  for (int i = 0; i < field_->k; ++i) c[i] = (c[i] + field_->p - rhs.c_[i]) % field_->p;
  return ExtElem(field_, c);
}

ExtElem ExtElem::operator-() const {
  auto c = c_;
  for (int i = 0; i < field_->k; ++i) c[i] = (field_->p - c[i]) % field_->p;
  return ExtElem(field_, c);
}

ExtElem ExtElem::operator*(const ExtElem& rhs) const {
  check_same(rhs);
  return from_poly(poly::mod(poly::mul(as_poly(), rhs.as_poly(), field_->p), field_->modulus, field_->p));
}

ExtElem ExtElem::operator/(const ExtElem& rhs) const { return *this * rhs.inv(); }

std::optional<ExtElem> ExtElem::try_inv() const {
  if (is_zero()) return std::nullopt;
  const std::uint32_t p = field_->p;
  // Extended Euclid on (modulus, a): track s with s*a == r (mod modulus).
  poly::Poly r0 = field_->modulus, r1 = as_poly();
  poly::Poly s0, s1{1};
  while (!r1.empty()) {
    poly::Poly quotient;
    poly::Poly rem = r0;
    const int d1 = poly::degree(r1);
    const std::uint32_t lead_inv = inv_mod(r1.back(), p);
    quotient.assign(std::max(0, poly::degree(rem) - d1 + 1), 0);
    while (poly::degree(rem) >= d1) {
      const int shift = poly::degree(rem) - d1;
      const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{rem.back()} * lead_inv % p);
      quotient[shift] = c;
      for (int i = 0; i <= d1; ++i) {
        rem[i + shift] = static_cast<std::uint32_t>((rem[i + shift] + p - std::uint64_t{c} * r1[i] % p) % p);
      }
      poly::trim(rem);
    }
    poly::trim(quotient);
    poly::Poly s2 = poly::sub(s0, poly::mul(quotient, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t scale = inv_mod(r0[0], p);
  for (auto& c : s0) c = static_cast<std::uint32_t>(std::uint64_t{c} * scale % p);
  return from_poly(poly::mod(s0, field_->modulus, p));
}

ExtElem ExtElem::inv() const {
  auto r = try_inv();
  if (!r) throw DivisionByZero();
  return *r;
}

ExtElem ExtElem::pow(std::uint64_t e) const {
  ExtElem result = from_poly({1});
  ExtElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool ExtElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool ExtElem::operator==(const ExtElem& rhs) const {
  check_same(rhs);
  return c_ == rhs.c_;
}

// ---------------------------------------------------------------------------

GaloisField::GaloisField(const PrimeField& f) {
  auto d = std::make_shared<Data>();
  d->p = f.p();
  d->k = 1;
  d->q = f.p();
  d_ = std::move(d);
}

GaloisField::GaloisField(const ExtField& f) {
  auto d = std::make_shared<Data>();
  d->p = f.p();
  d->k = f.k();
  d->q = f.q();
  d->ext = f;
  if (f.k() > 1) {
    // Find a generator of F_q^* by order testing, then tabulate exp/log.
    const auto factors = prime_factors(f.q() - 1);
    std::optional<ExtElem> gen;
    for (std::uint32_t code = 2; code < f.q() && !gen; ++code) {
      ExtElem g = f.from_code(code);
      bool ok = std::all_of(factors.begin(), factors.end(),
                            [&](std::uint64_t r) { return !(g.pow((f.q() - 1) / r) == f.one()); });
      if (ok) gen = g;
    }
    d->exp.assign(f.q() - 1, 0);
    d->log.assign(f.q(), 0);
    ExtElem cur = f.one();
    for (std::uint32_t i = 0; i + 1 < f.q(); ++i) {
      d->exp[i] = cur.code();
      d->log[cur.code()] = i;
      cur = cur * *gen;
    }
  }
  d_ = std::move(d);
}

GaloisField GaloisField::of_order(std::uint32_t q) {
  if (q < 2 || q >= kMaxFieldOrder) throw UsageError("field order must be in [2, 2^16)");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  std::uint32_t t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) throw UsageError(std::to_string(q) + " is not a prime power");
  if (k == 1) return GaloisField(PrimeField(p));
  return GaloisField(ExtField(p, k));
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < d_->k; ++i) {
    std::uint32_t s = a % d_->p + b % d_->p;
    if (s >= d_->p) s -= d_->p;
    out += s * scale;
    scale *= d_->p;
    a /= d_->p;
    b /= d_->p;
  }
  return out;
}

std::uint32_t GaloisField::neg_digits(std::uint32_t a) const {
  std::uint32_t out = 0, scale = 1;
  for (int i = 0; i < d_->k; ++i) {
    std::uint32_t c = a % d_->p;
    out += (c == 0 ? 0 : d_->p - c) * scale;
    scale *= d_->p;
    a /= d_->p;
  }
  return out;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  if (d_->k == 1) return inv_mod(a, d_->p);
  std::uint32_t l = d_->log[a];
  return d_->exp[l == 0 ? 0 : d_->q - 1 - l];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t GaloisField::from_int(std::int64_t v) const { return reduce(v, d_->p); }

bool GaloisField::is_square(std::uint32_t a) const {
  if (a == 0 || d_->p == 2) return true;
  return pow(a, (d_->q - 1) / 2) == 1;
}

bool GaloisField::in_lower_half(std::uint32_t a) const {
  for (int i = 0; i < d_->k; ++i) {
    const std::uint32_t c = a % d_->p;
    if (c != 0) return c <= (d_->p - 1) / 2;
    a /= d_->p;
  }
  return false;
}

std::uint64_t GaloisField::order_of(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  std::uint64_t order = d_->q - 1;
  for (std::uint64_t f : prime_factors(d_->q - 1)) {
    while (order % f == 0 && pow(a, order / f) == 1) order /= f;
  }
  return order;
}

std::string GaloisField::describe() const {
  if (d_->k == 1) return "F_" + std::to_string(d_->p);
  return d_->ext->describe();
}

std::string GaloisField::name() const { return "F_" + std::to_string(d_->q); }

bool GaloisField::operator==(const GaloisField& other) const {
  if (d_ == other.d_) return true;
  if (d_->q != other.d_->q) return false;
  if (d_->k == 1) return true;
  return *d_->ext == *other.d_->ext;
}

}  // namespace growthlab
