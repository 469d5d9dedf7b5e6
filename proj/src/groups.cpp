#include "growthlab/groups.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "growthlab/errors.hpp"

namespace growthlab {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::SL2: return "sl2";
    case GroupKind::PSL2: return "psl2";
    case GroupKind::Affine: return "affine";
    case GroupKind::Sym: return "sym";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  if (s == "sl2") return GroupKind::SL2;
  if (s == "psl2") return GroupKind::PSL2;
  if (s == "affine") return GroupKind::Affine;
  if (s == "sym") return GroupKind::Sym;
  throw UsageError("unknown group kind '" + s + "'");
}

Group::Group(GroupKind kind, const GaloisField* field, int n) : kind_(kind), n_(n) {
  if (field) {
    field_ = *field;
    q_ = field->q();
  }
  const std::uint64_t q = q_;
  switch (kind) {
    case GroupKind::SL2:
      order_ = q * (q * q - 1);
      key_space_ = q * q * q * q;
      identity_ = pack_raw(1, 0, 0, 1);
      break;
    case GroupKind::PSL2: {
      if (field->p() == 2) throw UsageError("PSL2 requires odd characteristic");
      order_ = q * (q * q - 1) / 2;
      key_space_ = q * q * q * q;
      identity_ = pack_raw(1, 0, 0, 1);
      half_rank_.assign(q_, 0);
      for (std::uint32_t code = 0; code < q_; ++code) {
        if (field->in_lower_half(code)) {
          half_rank_[code] = static_cast<std::uint32_t>(half_unrank_.size());
          half_unrank_.push_back(code);
        }
      }
      break;
    }
    case GroupKind::Affine:
      order_ = q * (q - 1);
      key_space_ = q * q;
      identity_ = q;  // (r = 1, x = 0)
      break;
    case GroupKind::Sym:
      factorial_.assign(n + 1, 1);
      for (int i = 1; i <= n; ++i) factorial_[i] = factorial_[i - 1] * i;
      order_ = factorial_[n];
      key_space_ = order_;
      identity_ = 0;
      break;
  }
}

GroupPtr Group::sl2(const GaloisField& field) { return GroupPtr(new Group(GroupKind::SL2, &field, 0)); }
GroupPtr Group::psl2(const GaloisField& field) { return GroupPtr(new Group(GroupKind::PSL2, &field, 0)); }
GroupPtr Group::affine(const GaloisField& field) { return GroupPtr(new Group(GroupKind::Affine, &field, 0)); }

GroupPtr Group::sym(int n) {
  if (n < 1 || n > kMaxSymDegree) throw UsageError("Sym(n) supports 1 <= n <= 12");
  return GroupPtr(new Group(GroupKind::Sym, nullptr, n));
}

const GaloisField& Group::field() const {
  if (!field_) throw UsageError("Sym(n) has no field");
  return *field_;
}

std::string Group::name() const {
  switch (kind_) {
    case GroupKind::SL2: return "SL2(" + field_->name() + ")";
    case GroupKind::PSL2: return "PSL2(" + field_->name() + ")";
    case GroupKind::Affine: return "Affine(" + field_->name() + ")";
    case GroupKind::Sym: return "Sym(" + std::to_string(n_) + ")";
  }
  return "?";
}

bool Group::same_as(const Group& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_) return false;
  if (kind_ == GroupKind::Sym) return n_ == other.n_;
  return *field_ == *other.field_;
}

Key Group::mul_sl2(Key g, Key h) const {
  std::uint32_t a, b, c, d, e, f, x, y;
  unpack_raw(g, a, b, c, d);
  unpack_raw(h, e, f, x, y);
  const GaloisField& F = *field_;
  const std::uint32_t r00 = F.add(F.mul(a, e), F.mul(b, x));
  const std::uint32_t r01 = F.add(F.mul(a, f), F.mul(b, y));
  const std::uint32_t r10 = F.add(F.mul(c, e), F.mul(d, x));
  const std::uint32_t r11 = F.add(F.mul(c, f), F.mul(d, y));
#ifndef NDEBUG
  if (F.sub(F.mul(r00, r11), F.mul(r01, r10)) != 1) throw std::logic_error("SL2 product left the group");
#endif
  return pack_raw(r00, r01, r10, r11);
}

Key Group::canonical_key(Key g) const {
  if (kind_ != GroupKind::PSL2) return g;
  std::uint32_t a, b, c, d;
  unpack_raw(g, a, b, c, d);
  const GaloisField& F = *field_;
  const std::uint32_t lead = a != 0 ? a : b;  // det = 1 rules out a = b = 0
  if (F.in_lower_half(lead)) return g;
  return pack_raw(F.neg(a), F.neg(b), F.neg(c), F.neg(d));
}

void Group::lehmer_decode(Key g, std::uint8_t* out) const {
  std::array<std::uint8_t, kMaxSymDegree> pool{};
  for (int i = 0; i < n_; ++i) pool[i] = static_cast<std::uint8_t>(i);
  int remaining = n_;
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t f = factorial_[n_ - 1 - i];
    const int digit = static_cast<int>(g / f);
    g %= f;
    out[i] = pool[digit];
    for (int j = digit; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
    --remaining;
  }
}

Key Group::lehmer_encode(const std::uint8_t* images) const {
  Key rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j) smaller += images[j] < images[i];
    rank += smaller * factorial_[n_ - 1 - i];
  }
  return rank;
}

Key Group::mul_sym(Key g, Key h) const {
  std::array<std::uint8_t, kMaxSymDegree> pg{}, ph{}, out{};
  lehmer_decode(g, pg.data());
  lehmer_decode(h, ph.data());
  for (int i = 0; i < n_; ++i) out[i] = pg[ph[i]];  // (gh)(i) = g(h(i))
  return lehmer_encode(out.data());
}

Key Group::inv(Key g) const {
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: {
      std::uint32_t a, b, c, d;
      unpack_raw(g, a, b, c, d);
      const GaloisField& F = *field_;
      return canonical_key(pack_raw(d, F.neg(b), F.neg(c), a));
    }
    case GroupKind::Affine: {
      const GaloisField& F = *field_;
      const std::uint32_t r = static_cast<std::uint32_t>(g / q_), x = static_cast<std::uint32_t>(g % q_);
      const std::uint32_t ri = F.inv(r);
      return Key{ri} * q_ + F.neg(F.mul(ri, x));
    }
    case GroupKind::Sym: {
      std::array<std::uint8_t, kMaxSymDegree> pg{}, out{};
      lehmer_decode(g, pg.data());
      for (int i = 0; i < n_; ++i) out[pg[i]] = static_cast<std::uint8_t>(i);
      return lehmer_encode(out.data());
    }
  }
  return 0;
}

bool Group::is_element(Key g) const {
  if (g >= key_space_) return false;
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: {
      std::uint32_t a, b, c, d;
      unpack_raw(g, a, b, c, d);
      const GaloisField& F = *field_;
      if (F.sub(F.mul(a, d), F.mul(b, c)) != 1) return false;
      return canonical_key(g) == g;
    }
    case GroupKind::Affine: return g / q_ != 0;
    case GroupKind::Sym: return true;
  }
  return false;
}

std::uint64_t Group::index(Key g) const {
  const std::uint64_t q = q_;
  switch (kind_) {
    case GroupKind::SL2: {
      std::uint32_t a, b, c, d;
      unpack_raw(g, a, b, c, d);
      if (a != 0) return ((a - 1) * q + b) * q + c;
      return (q - 1) * q * q + (b - 1) * q + d;
    }
    case GroupKind::PSL2: {
      std::uint32_t a, b, c, d;
      unpack_raw(g, a, b, c, d);
      const std::uint64_t half = half_unrank_.size();
      if (a != 0) return (half_rank_[a] * q + b) * q + c;
      return half * q * q + half_rank_[b] * q + d;
    }
    case GroupKind::Affine: return (g / q - 1) * q + g % q;
    case GroupKind::Sym: return g;
  }
  return 0;
}

Key Group::at(std::uint64_t i) const {
  if (i >= order_) throw UsageError("enumeration index out of range");
  const std::uint64_t q = q_;
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: {
      const GaloisField& F = *field_;
      const bool projective = kind_ == GroupKind::PSL2;
      const std::uint64_t leading = projective ? half_unrank_.size() : q - 1;
      auto lead_code = [&](std::uint64_t r) {
        return projective ? half_unrank_[r] : static_cast<std::uint32_t>(r + 1);
      };
      if (i < leading * q * q) {
        const auto c = static_cast<std::uint32_t>(i % q);
        const auto b = static_cast<std::uint32_t>((i / q) % q);
        const std::uint32_t a = lead_code(i / (q * q));
        const std::uint32_t d = F.mul(F.add(1, F.mul(b, c)), F.inv(a));
        return pack_raw(a, b, c, d);
      }
      const std::uint64_t j = i - leading * q * q;
      const auto d = static_cast<std::uint32_t>(j % q);
      const std::uint32_t b = lead_code(j / q);
      const std::uint32_t c = F.neg(F.inv(b));
      return pack_raw(0, b, c, d);
    }
    case GroupKind::Affine: return (i / q + 1) * q + i % q;
    case GroupKind::Sym: return i;
  }
  return 0;
}

void Group::check_enumerable(std::uint64_t cap) const {
  if (order_ > cap) {
    throw CapacityError(name() + " has " + std::to_string(order_) + " elements, above the enumeration cap " +
                        std::to_string(cap));
  }
}

Key Group::pack(const Mat2& m) const {
  if (!is_matrix_group()) throw UsageError("matrix element in a non-matrix group");
  if (m.a >= q_ || m.b >= q_ || m.c >= q_ || m.d >= q_) throw UsageError("matrix entry out of range");
  const GaloisField& F = *field_;
  if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)) != 1) throw UsageError("matrix does not have determinant 1");
  return canonical_key(pack_raw(m.a, m.b, m.c, m.d));
}

Mat2 Group::mat(Key g) const {
  if (!is_matrix_group()) throw UsageError("not a matrix group");
  Mat2 m;
  unpack_raw(g, m.a, m.b, m.c, m.d);
  return m;
}

Key Group::pack(const AffineElem& e) const {
  if (kind_ != GroupKind::Affine) throw UsageError("affine element in a non-affine group");
  if (e.r == 0 || e.r >= q_ || e.x >= q_) throw UsageError("affine element out of range (r must be nonzero)");
  return Key{e.r} * q_ + e.x;
}

AffineElem Group::affine_elem(Key g) const {
  if (kind_ != GroupKind::Affine) throw UsageError("not an affine group");
  return {static_cast<std::uint32_t>(g / q_), static_cast<std::uint32_t>(g % q_)};
}

Key Group::pack(const Perm& perm) const {
  if (kind_ != GroupKind::Sym) throw UsageError("permutation in a non-symmetric group");
  if (static_cast<int>(perm.images.size()) != n_) throw UsageError("permutation has the wrong degree");
  std::array<bool, kMaxSymDegree> seen{};
  for (auto v : perm.images) {
    if (v >= n_ || seen[v]) throw UsageError("images do not form a permutation");
    seen[v] = true;
  }
  return lehmer_encode(perm.images.data());
}

Perm Group::perm(Key g) const {
  if (kind_ != GroupKind::Sym) throw UsageError("not a symmetric group");
  Perm out;
  out.images.resize(n_);
  lehmer_decode(g, out.images.data());
  return out;
}

std::size_t Group::entry_count() const {
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: return 4;
    case GroupKind::Affine: return 2;
    case GroupKind::Sym: return static_cast<std::size_t>(n_);
  }
  return 0;
}

std::vector<std::int64_t> Group::entries(Key g) const {
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: {
      const Mat2 m = mat(g);
      return {m.a, m.b, m.c, m.d};
    }
    case GroupKind::Affine: {
      const AffineElem e = affine_elem(g);
      return {e.r, e.x};
    }
    case GroupKind::Sym: {
      const Perm p = perm(g);
      return std::vector<std::int64_t>(p.images.begin(), p.images.end());
    }
  }
  return {};
}

Key Group::from_entries(std::span<const std::int64_t> entries) const {
  if (entries.size() != entry_count()) {
    throw UsageError(name() + " elements take " + std::to_string(entry_count()) + " entries, got " +
                     std::to_string(entries.size()));
  }
  auto code = [&](std::int64_t v) -> std::uint32_t {
    if (v >= 0 && v < static_cast<std::int64_t>(q_)) return static_cast<std::uint32_t>(v);
    if (v < 0 || field_->is_prime_field()) return field_->from_int(v);
    throw UsageError("entry " + std::to_string(v) + " is not a code of " + field_->name());
  };
  switch (kind_) {
    case GroupKind::SL2:
    case GroupKind::PSL2: return pack(Mat2{code(entries[0]), code(entries[1]), code(entries[2]), code(entries[3])});
    case GroupKind::Affine: return pack(AffineElem{code(entries[0]), code(entries[1])});
    case GroupKind::Sym: {
      Perm p;
      for (auto v : entries) {
        if (v < 0 || v >= n_) throw UsageError("permutation image out of range");
        p.images.push_back(static_cast<std::uint8_t>(v));
      }
      return pack(p);
    }
  }
  return 0;
}

std::optional<Key> Group::reduce_integer_matrix(std::int64_t a, std::int64_t b, std::int64_t c,
                                                std::int64_t d) const {
  if (!is_matrix_group()) throw UsageError("integer matrices reduce only into SL2/PSL2");
  const GaloisField& F = *field_;
  const Mat2 m{F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)};
  if (F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c)) != 1) return std::nullopt;
  return pack(m);
}

// ---------------------------------------------------------------------------

GroupElem::GroupElem(GroupPtr group, Key key) : group_(std::move(group)), key_(key) {
  if (!group_->is_element(key_)) throw UsageError("key is not an element of " + group_->name());
}

GroupElem GroupElem::operator*(const GroupElem& rhs) const {
  if (!group_->same_as(*rhs.group_)) throw UsageError("elements of different groups");
  return GroupElem(group_, group_->mul(key_, rhs.key_));
}

GroupElem GroupElem::inverse() const { return GroupElem(group_, group_->inv(key_)); }

bool GroupElem::operator==(const GroupElem& rhs) const {
  return group_->same_as(*rhs.group_) && key_ == rhs.key_;
}

GroupElem identity(const GroupPtr& group) { return GroupElem(group, group->identity()); }
GroupElem mul(const GroupElem& g, const GroupElem& h) { return g * h; }
GroupElem inv(const GroupElem& g) { return g.inverse(); }

std::uint32_t trace(const Group& group, Key g) {
  if (!group.is_matrix_group()) throw UsageError("trace is defined for SL2/PSL2 only");
  const Mat2 m = group.mat(g);
  return group.field().add(m.a, m.d);
}

bool is_regular_semisimple(const Group& group, Key g) {
  const std::uint32_t t = trace(group, g);
  const GaloisField& F = group.field();
  const std::uint32_t two = F.from_int(2);
  return t != two && t != F.neg(two);
}

CentralizerPredicate centralizer_predicate(const GroupPtr& group, Key g) { return CentralizerPredicate(group, g); }

std::vector<Key> standard_generators(const Group& group) {
  switch (group.kind()) {
    case GroupKind::SL2:
    case GroupKind::PSL2: return {group.pack(Mat2{1, 1, 0, 1}), group.pack(Mat2{1, 0, 1, 1})};
    case GroupKind::Affine: {
      const GaloisField& F = group.field();
      std::uint32_t lambda = 1;
      for (std::uint32_t code = 1; code < F.q(); ++code) {
        if (F.order_of(code) == F.q() - 1) {
          lambda = code;
          break;
        }
      }
      return {group.pack(AffineElem{lambda, 0}), group.pack(AffineElem{1, 1})};
    }
    case GroupKind::Sym: {
      const int n = group.degree();
      Perm transposition, cycle;
      for (int i = 0; i < n; ++i) {
        transposition.images.push_back(static_cast<std::uint8_t>(i));
        cycle.images.push_back(static_cast<std::uint8_t>((i + 1) % n));
      }
      if (n >= 2) std::swap(transposition.images[0], transposition.images[1]);
      return {group.pack(transposition), group.pack(cycle)};
    }
  }
  return {};
}

}  // namespace growthlab
