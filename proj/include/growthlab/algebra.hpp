#pragma once

// Exact arithmetic in F_p (p < 2^16) and F_{p^k} (k <= 4).

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace growthlab {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
inline constexpr int kMaxExtensionDegree = 4;

bool is_prime(std::uint64_t n);

/// Residue in [0, p). Carries its modulus so that mixing fields is caught.
struct FieldElem {
  std::uint32_t value = 0;
  std::uint32_t p = 0;

  FieldElem operator+(FieldElem rhs) const;
  FieldElem operator-(FieldElem rhs) const;
  FieldElem operator*(FieldElem rhs) const;
  FieldElem operator/(FieldElem rhs) const;
  FieldElem operator-() const;

  /// Throws DivisionByZero for 0.
  FieldElem inv() const;
  /// Explicit-error-value variant of inv().
  std::optional<FieldElem> try_inv() const;
  FieldElem pow(std::uint64_t e) const;

  bool operator==(const FieldElem&) const = default;
  bool is_zero() const { return value == 0; }
};

std::ostream& operator<<(std::ostream& os, FieldElem a);

class PrimeField {
 public:
  /// Throws UsageError unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  /// Image of an arbitrary integer in F_p.
  FieldElem elem(std::int64_t v) const;
  FieldElem zero() const { return {0, p_}; }
  FieldElem one() const { return {1 % p_, p_}; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(FieldElem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Zero or a nonzero quadratic residue; Euler's criterion. Requires p odd.
bool is_square(FieldElem t);

/// Least lambda >= 2 generating F_p^* (1 for p = 2).
FieldElem primitive_root(const PrimeField& field);

// ---------------------------------------------------------------------------
// Polynomials over F_p, coefficient vectors low degree first, no trailing zeros.

namespace poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial
Poly add(const Poly& f, const Poly& g, std::uint32_t p);
Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
/// Remainder of f modulo a nonzero g.
Poly mod(const Poly& f, const Poly& g, std::uint32_t p);
Poly gcd(Poly f, Poly g, std::uint32_t p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);

/// Ben-Or test: f irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= deg/2.
/// For degree <= 3 this reduces to having no roots, which is what runs.
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace poly

// ---------------------------------------------------------------------------

class ExtElem;

/// F_p[x]/(m) with m monic irreducible of degree k.
class ExtField {
 public:
  /// Built-in modulus: x^2+1 over F_3, x^2+x+2 over F_5, otherwise the
  /// least monic irreducible polynomial of degree k in lexicographic order.
  ExtField(std::uint32_t p, int k);
  /// `modulus` lists k+1 coefficients, constant term first, leading 1 last.
  ExtField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return data_->p; }
  int k() const { return data_->k; }
  std::uint32_t q() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }

  ExtElem zero() const;
  ExtElem one() const;
  /// The class of x.
  ExtElem gen() const;
  ExtElem elem(const std::vector<std::uint32_t>& coeffs) const;
  /// Base-p digit encoding: code = sum c_i p^i.
  ExtElem from_code(std::uint32_t code) const;

  std::string describe() const;

  bool operator==(const ExtField& other) const;

 private:
  friend class ExtElem;
  struct Data {
    std::uint32_t p;
    int k;
    std::uint32_t q;
    std::vector<std::uint32_t> modulus;
  };
  void init(std::uint32_t p, std::vector<std::uint32_t> modulus);
  std::shared_ptr<const Data> data_;
};

class ExtElem {
 public:
  ExtElem() = default;

  const std::array<std::uint32_t, kMaxExtensionDegree>& coeffs() const { return c_; }
  std::uint32_t code() const;

  ExtElem operator+(const ExtElem& rhs) const;
  ExtElem operator-(const ExtElem& rhs) const;
  ExtElem operator*(const ExtElem& rhs) const;
  ExtElem operator/(const ExtElem& rhs) const;
  ExtElem operator-() const;
  /// Extended Euclid against the modulus. Throws DivisionByZero for 0.
  ExtElem inv() const;
  std::optional<ExtElem> try_inv() const;
  ExtElem pow(std::uint64_t e) const;

  bool is_zero() const;
  bool operator==(const ExtElem& rhs) const;

 private:
  friend class ExtField;
  ExtElem(std::shared_ptr<const ExtField::Data> f, std::array<std::uint32_t, kMaxExtensionDegree> c)
      : field_(std::move(f)), c_(c) {}
  void check_same(const ExtElem& rhs) const;
  poly::Poly as_poly() const;
  ExtElem from_poly(const poly::Poly& f) const;

  std::shared_ptr<const ExtField::Data> field_;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

// ---------------------------------------------------------------------------

/// Uniform handle on F_q with elements encoded as integers in [0, q): residues
/// for q = p, base-p coefficient digits for q = p^k. This is the substrate the
/// group implementations pack into 64-bit keys. Cheap to copy.
class GaloisField {
 public:
  explicit GaloisField(const PrimeField& f);
  explicit GaloisField(const ExtField& f);
  /// q = p^k with k <= 4, using the built-in modulus when k > 1.
  static GaloisField of_order(std::uint32_t q);

  std::uint32_t p() const { return d_->p; }
  int k() const { return d_->k; }
  std::uint32_t q() const { return d_->q; }
  bool is_prime_field() const { return d_->k == 1; }
  const std::optional<ExtField>& ext() const { return d_->ext; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (d_->k == 1) {
      std::uint32_t s = a + b;
      return s >= d_->p ? s - d_->p : s;
    }
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (d_->k == 1) return a == 0 ? 0 : d_->p - a;
    return neg_digits(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (d_->k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % d_->p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = d_->log[a] + d_->log[b];
    if (s >= d_->q - 1) s -= d_->q - 1;
    return d_->exp[s];
  }
  /// Throws DivisionByZero for 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  std::uint32_t from_int(std::int64_t v) const;
  /// Nonzero square or zero. q odd.
  bool is_square(std::uint32_t a) const;
  /// Leading-sign rule: the first nonzero base-p digit (constant term first)
  /// lies in [1, (p-1)/2]. Exactly one of a, -a satisfies it for a != 0, p odd.
  bool in_lower_half(std::uint32_t a) const;
  std::uint64_t order_of(std::uint32_t a) const;

  std::string describe() const;
  std::string name() const;  // "F_9"

  bool operator==(const GaloisField& other) const;

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_digits(std::uint32_t a) const;

  struct Data {
    std::uint32_t p = 0;
    int k = 1;
    std::uint32_t q = 0;
    std::optional<ExtField> ext;
    std::vector<std::uint32_t> exp;  // exp[i] = code of g^i, for k > 1
    std::vector<std::uint32_t> log;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace growthlab
