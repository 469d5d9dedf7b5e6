#pragma once

// SL2(F_q), PSL2(F_q), Affine(F_q) and Sym(n) behind one interface. Every
// element is identified by a packed canonical 64-bit key; all hot paths work
// on keys directly.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "growthlab/algebra.hpp"

namespace growthlab {

using Key = std::uint64_t;

enum class GroupKind { SL2, PSL2, Affine, Sym };

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& s);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr int kMaxSymDegree = 12;

/// Row-major 2x2 matrix over F_q, entries as field codes.
struct Mat2 {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2&) const = default;
};

/// (r x; 0 1): the map y -> r*y + x.
struct AffineElem {
  std::uint32_t r = 1, x = 0;
  bool operator==(const AffineElem&) const = default;
};

/// Bijection of {0, ..., n-1}; images[i] is the image of i.
struct Perm {
  std::vector<std::uint8_t> images;
  bool operator==(const Perm&) const = default;
};

class Group {
 public:
  static std::shared_ptr<const Group> sl2(const GaloisField& field);
  static std::shared_ptr<const Group> psl2(const GaloisField& field);
  static std::shared_ptr<const Group> affine(const GaloisField& field);
  static std::shared_ptr<const Group> sym(int n);

  GroupKind kind() const { return kind_; }
  bool is_matrix_group() const { return kind_ == GroupKind::SL2 || kind_ == GroupKind::PSL2; }
  /// Throws UsageError for Sym.
  const GaloisField& field() const;
  std::uint32_t q() const { return q_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  /// Keys lie in [0, key_space()).
  std::uint64_t key_space() const { return key_space_; }
  std::string name() const;

  Key identity() const { return identity_; }

  Key mul(Key g, Key h) const {
    switch (kind_) {
      case GroupKind::SL2: return mul_sl2(g, h);
      case GroupKind::PSL2: return canonical_key(mul_sl2(g, h));
      case GroupKind::Affine: return mul_affine(g, h);
      case GroupKind::Sym: return mul_sym(g, h);
    }
    return 0;
  }
  Key inv(Key g) const;
  bool is_element(Key g) const;

  /// Stable bijection G -> [0, |G|), computed arithmetically.
  std::uint64_t index(Key g) const;
  Key at(std::uint64_t i) const;
  /// Throws CapacityError when |G| exceeds the cap.
  void check_enumerable(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Typed views. pack() validates (det = 1, r != 0, bijectivity) and, for
  // PSL2, canonicalizes the sign.
  Key pack(const Mat2& m) const;
  Mat2 mat(Key g) const;
  Key pack(const AffineElem& e) const;
  AffineElem affine_elem(Key g) const;
  Key pack(const Perm& perm) const;
  Perm perm(Key g) const;

  /// Flat entry list: (a,b,c,d), (r,x) or the images.
  std::vector<std::int64_t> entries(Key g) const;
  /// Inverse of entries(); integers are mapped into F_q (codes for F_{p^k}).
  Key from_entries(std::span<const std::int64_t> entries) const;
  std::size_t entry_count() const;

  /// Integer matrix reduced into the field: the SL2/PSL2 key, or nullopt if
  /// the reduction does not have determinant 1.
  std::optional<Key> reduce_integer_matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const;

  bool same_as(const Group& other) const;

  // ---- raw helpers for matrix groups ----------------------------------
  Key pack_raw(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
    return ((Key{a} * q_ + b) * q_ + c) * q_ + d;
  }
  void unpack_raw(Key g, std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) const {
    d = static_cast<std::uint32_t>(g % q_);
    g /= q_;
    c = static_cast<std::uint32_t>(g % q_);
    g /= q_;
    b = static_cast<std::uint32_t>(g % q_);
    a = static_cast<std::uint32_t>(g / q_);
  }
  /// Sign canonicalization of a packed SL2 matrix (identity map for SL2).
  Key canonical_key(Key g) const;

 private:
  Group(GroupKind kind, const GaloisField* field, int n);

  Key mul_sl2(Key g, Key h) const;
  Key mul_affine(Key g, Key h) const {
    const std::uint32_t r1 = static_cast<std::uint32_t>(g / q_), x1 = static_cast<std::uint32_t>(g % q_);
    const std::uint32_t r2 = static_cast<std::uint32_t>(h / q_), x2 = static_cast<std::uint32_t>(h % q_);
    const GaloisField& f = *field_;
    return Key{f.mul(r1, r2)} * q_ + f.add(x1, f.mul(r1, x2));
  }
  Key mul_sym(Key g, Key h) const;

  void lehmer_decode(Key g, std::uint8_t* out) const;
  Key lehmer_encode(const std::uint8_t* images) const;

  GroupKind kind_;
  std::optional<GaloisField> field_;
  std::uint32_t q_ = 0;
  int n_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t key_space_ = 0;
  Key identity_ = 0;
  std::vector<std::uint64_t> factorial_;
  std::vector<std::uint32_t> half_rank_;    // PSL2: rank of a lower-half code
  std::vector<std::uint32_t> half_unrank_;  // PSL2: inverse of half_rank_
};

using GroupPtr = std::shared_ptr<const Group>;

/// Value-semantics element handle for API-level code.
class GroupElem {
 public:
  GroupElem(GroupPtr group, Key key);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Key key() const { return key_; }

  /// Throws UsageError for elements of different groups.
  GroupElem operator*(const GroupElem& rhs) const;
  GroupElem inverse() const;
  bool operator==(const GroupElem& rhs) const;

 private:
  GroupPtr group_;
  Key key_;
};

GroupElem identity(const GroupPtr& group);
GroupElem mul(const GroupElem& g, const GroupElem& h);
GroupElem inv(const GroupElem& g);

/// a + d of the (canonical) representative. SL2/PSL2 only.
std::uint32_t trace(const Group& group, Key g);
/// tr(g) not in {2, -2}. SL2/PSL2 only.
bool is_regular_semisimple(const Group& group, Key g);

/// h -> (gh == hg).
class CentralizerPredicate {
 public:
  CentralizerPredicate(GroupPtr group, Key g) : group_(std::move(group)), g_(g) {}
  bool operator()(Key h) const { return group_->mul(g_, h) == group_->mul(h, g_); }
  Key center() const { return g_; }

 private:
  GroupPtr group_;
  Key g_;
};

CentralizerPredicate centralizer_predicate(const GroupPtr& group, Key g);

/// Standard generator sets. SL2/PSL2: {(1 1; 0 1), (1 0; 1 1)}. Affine:
/// A_lambda = {(lambda 0; 0 1), (1 1; 0 1)} with lambda the least primitive
/// root (prime fields) or least generator code of F_q^*. Not symmetrized.
std::vector<Key> standard_generators(const Group& group);

}  // namespace growthlab
