#pragma once

// Finite subsets of a fixed group and the product-set operations on them.

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "growthlab/groups.hpp"

namespace growthlab {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;
/// Largest key space (in bits) for which accumulators use a dense bitset.
inline constexpr std::uint64_t kDenseKeySpaceLimit = std::uint64_t{1} << 28;

/// kDefaultWorkBudget unless GROWTHLAB_BUDGET holds a positive integer.
std::uint64_t default_work_budget();

struct WorkLimits {
  std::uint64_t budget = default_work_budget();  // key insertions per operation
  int threads = 1;
};

/// Sorted, duplicate-free list of keys of one group.
class ElementSet {
 public:
  explicit ElementSet(GroupPtr group);
  /// Keys are sorted and deduplicated; each must be an element of the group.
  ElementSet(GroupPtr group, std::vector<Key> keys);

  static ElementSet singleton(GroupPtr group, Key g);
  static ElementSet identity_set(GroupPtr group);
  /// Throws CapacityError above the enumeration cap.
  static ElementSet whole(GroupPtr group, std::uint64_t cap = kDefaultEnumerationCap);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Key>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  auto begin() const { return keys_.begin(); }
  auto end() const { return keys_.end(); }

  bool contains(Key g) const;
  bool contains_identity() const { return contains(group_->identity()); }
  bool is_symmetric() const;
  bool is_whole_group() const { return keys_.size() == group_->order(); }
  /// Every element of this set lies in `other`.
  bool subset_of(const ElementSet& other) const;

  ElementSet inverse() const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet filter(const std::function<bool(Key)>& keep) const;
  std::size_t count_if(const std::function<bool(Key)>& pred) const;

  bool operator==(const ElementSet& other) const;

 private:
  struct Trusted {};
  ElementSet(GroupPtr group, std::vector<Key> sorted_keys, Trusted);
  friend class KeyAccumulator;

  GroupPtr group_;
  std::vector<Key> keys_;
};

/// Collects keys of one group: a bitset over the key space when it is small
/// enough, a hash set otherwise.
class KeyAccumulator {
 public:
  explicit KeyAccumulator(GroupPtr group);

  /// True if the key was new.
  bool insert(Key g);
  bool contains(Key g) const;
  std::uint64_t size() const { return count_; }
  void merge(const KeyAccumulator& other);
  ElementSet to_set() const;

 private:
  GroupPtr group_;
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Key> sparse_;
  std::uint64_t count_ = 0;
};

/// {ab : a in A, b in B}. Throws CapacityError past the work budget.
ElementSet product(const ElementSet& a, const ElementSet& b, const WorkLimits& limits = {});
/// Left fold A^k = (...((A A) A) ...) A, k >= 1.
ElementSet power(const ElementSet& a, int k, const WorkLimits& limits = {});
/// A union A^-1 union {e}.
ElementSet symmetrize(const ElementSet& a);

/// Iterates A, A^2, A^3, ... When e is in A the step only multiplies the
/// newest shell, since then A^k is contained in A^(k+1).
class PowerSequence {
 public:
  PowerSequence(ElementSet a, WorkLimits limits = {});

  int exponent() const { return k_; }
  const ElementSet& current() const { return current_; }
  /// Replaces current() by current() * A.
  void advance();
  /// Sizes |A^1|, ..., |A^k| seen so far.
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }

 private:
  ElementSet base_;
  WorkLimits limits_;
  bool shells_;
  int k_ = 1;
  ElementSet current_;
  std::vector<Key> shell_;
  std::vector<std::uint64_t> sizes_;
};

/// {h g h^-1 : h in G}. Throws CapacityError above the cap.
ElementSet conjugacy_class(const GroupPtr& group, Key g, std::uint64_t cap = kDefaultEnumerationCap);
/// {h in G : gh = hg}, by enumeration.
ElementSet centralizer(const GroupPtr& group, Key g, std::uint64_t cap = kDefaultEnumerationCap);
/// The subgroup generated by A, by closure under right multiplication.
ElementSet generated_subgroup(const ElementSet& a, const WorkLimits& limits = {});
bool generates(const ElementSet& a, const WorkLimits& limits = {});

}  // namespace growthlab
