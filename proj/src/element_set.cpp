#include "growthlab/element_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "growthlab/errors.hpp"

namespace growthlab {

std::uint64_t default_work_budget() {
  if (const char* env = std::getenv("GROWTHLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultWorkBudget;
}

ElementSet::ElementSet(GroupPtr group) : group_(std::move(group)) {}

ElementSet::ElementSet(GroupPtr group, std::vector<Key> keys) : group_(std::move(group)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  for (Key g : keys_) {
    if (!group_->is_element(g)) throw UsageError("key " + std::to_string(g) + " is not in " + group_->name());
  }
}

ElementSet::ElementSet(GroupPtr group, std::vector<Key> sorted_keys, Trusted)
    : group_(std::move(group)), keys_(std::move(sorted_keys)) {}

ElementSet ElementSet::singleton(GroupPtr group, Key g) { return ElementSet(std::move(group), std::vector<Key>{g}); }

ElementSet ElementSet::identity_set(GroupPtr group) {
  const Key e = group->identity();
  return ElementSet(std::move(group), std::vector<Key>{e}, Trusted{});
}

ElementSet ElementSet::whole(GroupPtr group, std::uint64_t cap) {
  group->check_enumerable(cap);
  std::vector<Key> keys(group->order());
  for (std::uint64_t i = 0; i < keys.size(); ++i) keys[i] = group->at(i);
  std::sort(keys.begin(), keys.end());
  return ElementSet(std::move(group), std::move(keys), Trusted{});
}

bool ElementSet::contains(Key g) const { return std::binary_search(keys_.begin(), keys_.end(), g); }

bool ElementSet::is_symmetric() const {
  return std::all_of(keys_.begin(), keys_.end(), [&](Key g) { return contains(group_->inv(g)); });
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
}

ElementSet ElementSet::inverse() const {
  std::vector<Key> out;
  out.reserve(keys_.size());
  for (Key g : keys_) out.push_back(group_->inv(g));
  std::sort(out.begin(), out.end());
  return ElementSet(group_, std::move(out), Trusted{});
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  if (!group_->same_as(*other.group_)) throw UsageError("sets of different groups");
  std::vector<Key> out;
  std::set_union(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end(), std::back_inserter(out));
  return ElementSet(group_, std::move(out), Trusted{});
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  if (!group_->same_as(*other.group_)) throw UsageError("sets of different groups");
  std::vector<Key> out;
  std::set_intersection(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end(),
                        std::back_inserter(out));
  return ElementSet(group_, std::move(out), Trusted{});
}

ElementSet ElementSet::filter(const std::function<bool(Key)>& keep) const {
  std::vector<Key> out;
  std::copy_if(keys_.begin(), keys_.end(), std::back_inserter(out), keep);
  return ElementSet(group_, std::move(out), Trusted{});
}

std::size_t ElementSet::count_if(const std::function<bool(Key)>& pred) const {
  return static_cast<std::size_t>(std::count_if(keys_.begin(), keys_.end(), pred));
}

bool ElementSet::operator==(const ElementSet& other) const {
  return group_->same_as(*other.group_) && keys_ == other.keys_;
}

// ---------------------------------------------------------------------------

KeyAccumulator::KeyAccumulator(GroupPtr group)
    : group_(std::move(group)), dense_(group_->key_space() <= kDenseKeySpaceLimit) {
  if (dense_) bits_.assign((group_->key_space() + 63) / 64, 0);
}

bool KeyAccumulator::insert(Key g) {
  if (dense_) {
    std::uint64_t& word = bits_[g >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (g & 63);
    if (word & bit) return false;
    word |= bit;
    ++count_;
    return true;
  }
  if (!sparse_.insert(g).second) return false;
  ++count_;
  return true;
}

bool KeyAccumulator::contains(Key g) const {
  if (dense_) return (bits_[g >> 6] >> (g & 63)) & 1;
  return sparse_.count(g) != 0;
}

void KeyAccumulator::merge(const KeyAccumulator& other) {
  if (dense_) {
    count_ = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= other.bits_[i];
      count_ += static_cast<std::uint64_t>(__builtin_popcountll(bits_[i]));
    }
    return;
  }
  for (Key g : other.sparse_) insert(g);
}

ElementSet KeyAccumulator::to_set() const {
  std::vector<Key> keys;
  keys.reserve(count_);
  if (dense_) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w) {
        keys.push_back(i * 64 + static_cast<std::uint64_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  } else {
    keys.assign(sparse_.begin(), sparse_.end());
    std::sort(keys.begin(), keys.end());
  }
  return ElementSet(group_, std::move(keys), ElementSet::Trusted{});
}

// ---------------------------------------------------------------------------

namespace {

void check_same_group(const ElementSet& a, const ElementSet& b) {
  if (!a.group().same_as(b.group())) throw UsageError("product of sets from different groups");
}

// Inserts {x b : x in left, b in right} into acc. Stops early once the whole
// group is reached.
void multiply_into(KeyAccumulator& acc, const Group& g, std::span<const Key> left, const std::vector<Key>& right,
                   std::uint64_t budget, std::uint64_t& spent, const std::vector<std::uint64_t>& partial) {
  const std::uint64_t order = g.order();
  for (Key x : left) {
    if (acc.size() == order) return;
    spent += right.size();
    if (spent > budget) {
      throw CapacityError("product-set work budget of " + std::to_string(budget) + " insertions exceeded",
                          partial);
    }
    for (Key b : right) acc.insert(g.mul(x, b));
  }
}

void multiply_parallel(KeyAccumulator& acc, const GroupPtr& group, std::span<const Key> left,
                       const std::vector<Key>& right, const WorkLimits& limits, std::uint64_t& spent,
                       const std::vector<std::uint64_t>& partial) {
  const std::size_t threads = static_cast<std::size_t>(std::max(1, limits.threads));
  if (threads == 1 || left.size() < 2 * threads ||
      static_cast<double>(left.size()) * static_cast<double>(right.size()) > static_cast<double>(limits.budget)) {
    multiply_into(acc, *group, left, right, limits.budget, spent, partial);
    return;
  }
  std::vector<KeyAccumulator> parts(threads, KeyAccumulator(group));
  std::vector<std::thread> workers;
  const std::size_t chunk = (left.size() + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(left.size(), t * chunk), hi = std::min(left.size(), lo + chunk);
    workers.emplace_back([&, t, lo, hi] {
      std::uint64_t local = 0;
      multiply_into(parts[t], *group, left.subspan(lo, hi - lo), right, ~std::uint64_t{0}, local, partial);
    });
  }
  for (auto& w : workers) w.join();
  spent += left.size() * right.size();
  for (const auto& part : parts) acc.merge(part);
}

}  // namespace

ElementSet product(const ElementSet& a, const ElementSet& b, const WorkLimits& limits) {
  check_same_group(a, b);
  KeyAccumulator acc(a.group_ptr());
  std::uint64_t spent = 0;
  multiply_parallel(acc, a.group_ptr(), a.keys(), b.keys(), limits, spent, {a.size(), b.size()});
  return acc.to_set();
}

ElementSet symmetrize(const ElementSet& a) {
  return a.unite(a.inverse()).unite(ElementSet::identity_set(a.group_ptr()));
}

PowerSequence::PowerSequence(ElementSet a, WorkLimits limits)
    : base_(std::move(a)), limits_(limits), shells_(base_.contains_identity()), current_(base_) {
  if (base_.empty()) throw UsageError("powers of the empty set");
  shell_ = base_.keys();
  sizes_.push_back(base_.size());
}

void PowerSequence::advance() {
  KeyAccumulator acc(base_.group_ptr());
  std::uint64_t spent = 0;
  if (shells_) {
    for (Key g : current_) acc.insert(g);
    multiply_parallel(acc, base_.group_ptr(), shell_, base_.keys(), limits_, spent, sizes_);
    ElementSet next = acc.to_set();
    std::vector<Key> shell;
    std::set_difference(next.begin(), next.end(), current_.begin(), current_.end(), std::back_inserter(shell));
    shell_ = std::move(shell);
    current_ = std::move(next);
  } else {
    multiply_parallel(acc, base_.group_ptr(), current_.keys(), base_.keys(), limits_, spent, sizes_);
    current_ = acc.to_set();
  }
  ++k_;
  sizes_.push_back(current_.size());
}

ElementSet power(const ElementSet& a, int k, const WorkLimits& limits) {
  if (k < 1) throw UsageError("power exponent must be >= 1");
  PowerSequence seq(a, limits);
  while (seq.exponent() < k) {
    if (seq.current().is_whole_group()) return seq.current();
    seq.advance();
  }
  return seq.current();
}

ElementSet conjugacy_class(const GroupPtr& group, Key g, std::uint64_t cap) {
  group->check_enumerable(cap);
  KeyAccumulator acc(group);
  for (std::uint64_t i = 0; i < group->order(); ++i) {
    const Key h = group->at(i);
    acc.insert(group->mul(group->mul(h, g), group->inv(h)));
  }
  return acc.to_set();
}

ElementSet centralizer(const GroupPtr& group, Key g, std::uint64_t cap) {
  group->check_enumerable(cap);
  std::vector<Key> keys;
  for (std::uint64_t i = 0; i < group->order(); ++i) {
    const Key h = group->at(i);
    if (group->mul(g, h) == group->mul(h, g)) keys.push_back(h);
  }
  return ElementSet(group, std::move(keys));
}

ElementSet generated_subgroup(const ElementSet& a, const WorkLimits& limits) {
  PowerSequence seq(a.unite(ElementSet::identity_set(a.group_ptr())), limits);
  for (;;) {
    const std::size_t before = seq.current().size();
    if (seq.current().is_whole_group()) break;
    seq.advance();
    if (seq.current().size() == before) break;
  }
  return seq.current();
}

bool generates(const ElementSet& a, const WorkLimits& limits) { return generated_subgroup(a, limits).is_whole_group(); }

}  // namespace growthlab
