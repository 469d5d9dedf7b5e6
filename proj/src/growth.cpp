#include "growthlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "growthlab/errors.hpp"

namespace growthlab {

using Big = boost::multiprecision::cpp_int;

namespace {

Big pow_big(Big base, unsigned e) {
  Big r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

double ratio(const Big& num, const Big& den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

// lhs_num/lhs_den REL rhs_num/rhs_den with positive denominators.
Inequality compare(std::string name, const std::string& rel, const Big& lhs_num, const Big& lhs_den,
                   const Big& rhs_num, const Big& rhs_den) {
  Inequality q;
  q.name = std::move(name);
  q.relation = rel;
  q.lhs = ratio(lhs_num, lhs_den);
  q.rhs = ratio(rhs_num, rhs_den);
  const Big l = lhs_num * rhs_den, r = rhs_num * lhs_den;
  q.holds = rel == "<=" ? l <= r : l >= r;
  return q;
}

Inequality compare_int(std::string name, const std::string& rel, const Big& lhs, const Big& rhs) {
  return compare(std::move(name), rel, lhs, 1, rhs, 1);
}

void require_same_group(const ElementSet& a, const ElementSet& b) {
  if (!a.group().same_as(b.group())) throw UsageError("sets of different groups");
}

Key conj(const Group& g, Key h, Key x) { return g.mul(g.mul(h, x), g.inv(h)); }

ElementSet orbit_conjugation(const ElementSet& a, Key x) {
  std::vector<Key> out;
  for (Key h : a) out.push_back(conj(a.group(), h, x));
  return ElementSet(a.group_ptr(), std::move(out));
}

// Labels left cosets gH by the least key they contain.
class CosetLabeler {
 public:
  explicit CosetLabeler(const ElementSet& h) : h_(h) {}
  Key label(Key g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    Key best = ~Key{0};
    for (Key x : h_) best = std::min(best, h_.group().mul(g, x));
    cache_.emplace(g, best);
    return best;
  }
  std::size_t count(const ElementSet& a) {
    std::vector<Key> labels;
    for (Key g : a) labels.push_back(label(g));
    std::sort(labels.begin(), labels.end());
    return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
  }

 private:
  const ElementSet& h_;
  std::unordered_map<Key, Key> cache_;
};

// (a b; c d) view; affine (r x) reads as (r x; 0 1).
std::array<std::uint32_t, 4> matrix_entries(const Group& group, Key g) {
  if (group.is_matrix_group()) {
    const Mat2 m = group.mat(g);
    return {m.a, m.b, m.c, m.d};
  }
  if (group.kind() == GroupKind::Affine) {
    const AffineElem e = group.affine_elem(g);
    return {e.r, e.x, 0, 1};
  }
  throw UsageError("variety predicates need a matrix or affine group");
}

std::uint32_t trace_of(const Group& group, Key g) {
  const auto m = matrix_entries(group, g);
  return group.field().add(m[0], m[3]);
}

bool is_unipotent(const Group& group, Key g) {
  const auto m = matrix_entries(group, g);
  const std::uint32_t minus_one = group.field().neg(1);
  if (m[2] != 0) return false;
  if (m[0] == 1 && m[3] == 1) return true;
  return group.kind() == GroupKind::PSL2 && m[0] == minus_one && m[3] == minus_one;
}

void require_affine(const Group& group) {
  if (group.kind() != GroupKind::Affine) throw UsageError("affine group required");
}

}  // namespace

bool Verdict::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const Inequality& q) { return q.holds; });
}

const Inequality* Verdict::find(const std::string& name) const {
  for (const auto& q : checks) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

Verdict verify_ruzsa_triangle(const ElementSet& a, const ElementSet& b, const ElementSet& c,
                              const WorkLimits& limits) {
  require_same_group(a, b);
  require_same_group(a, c);
  const auto ac = product(a, c.inverse(), limits).size();
  const auto ab = product(a, b.inverse(), limits).size();
  const auto bc = product(b, c.inverse(), limits).size();
  Verdict v;
  v.checks.push_back(compare_int("ruzsa", "<=", Big(ac) * b.size(), Big(ab) * bc));
  return v;
}

Verdict verify_tripling_chain(const ElementSet& a, int k, const WorkLimits& limits) {
  if (k < 3) throw UsageError("chain check needs k >= 3");
  const ElementSet s = symmetrize(a);
  PowerSequence pa(a, limits), ps(s, limits);
  while (pa.exponent() < std::max(k, 3)) pa.advance();
  while (ps.exponent() < std::max(k, 3)) ps.advance();
  const Big n = a.size();
  const Big n3 = pa.sizes()[2];
  Verdict v;
  v.checks.push_back(compare("symmetrized_cube", "<=", Big(ps.sizes()[2]), n, pow_big(3 * n3, 3), pow_big(n, 3)));
  const bool symmetric = a.is_symmetric();
  if (!symmetric) v.notes.push_back("symmetric_powers skipped: A != A^-1");
  for (int j = 3; j <= k; ++j) {
    const unsigned e = static_cast<unsigned>(j - 2);
    if (symmetric) {
      v.checks.push_back(compare("symmetric_power_k" + std::to_string(j), "<=", Big(pa.sizes()[j - 1]), n,
                                 pow_big(n3, e), pow_big(n, e)));
    }
    if (j >= 4) {
      v.checks.push_back(compare("symmetrized_power_k" + std::to_string(j), "<=", Big(ps.sizes()[j - 1]), n,
                                 pow_big(3, e) * pow_big(n3, 3 * e), pow_big(n, 3 * e)));
    }
  }
  return v;
}

Verdict verify_orbit_stabilizer_conjugation(const ElementSet& a, const ElementSet& b, Key x,
                                            const WorkLimits& limits) {
  require_same_group(a, b);
  if (a.empty()) throw PreconditionError("A must be non-empty");
  const CentralizerPredicate stab(a.group_ptr(), x);
  const auto ax = orbit_conjugation(a, x).size();
  const auto bx = orbit_conjugation(b, x).size();
  const auto quotient_stab = product(a.inverse(), a, limits).count_if(stab);
  const auto a_stab = a.count_if(stab);
  const auto ba = product(b, a, limits).size();
  Verdict v;
  v.checks.push_back(compare("stabilizer_of_quotient", ">=", Big(quotient_stab), 1, Big(a.size()), Big(ax)));
  v.checks.push_back(compare_int("product_vs_orbit", ">=", Big(ba), Big(a_stab) * bx));
  return v;
}

Verdict verify_orbit_stabilizer_cosets(const ElementSet& a, const ElementSet& b, const ElementSet& h, int k,
                                       const WorkLimits& limits) {
  require_same_group(a, b);
  require_same_group(a, h);
  if (a.empty()) throw PreconditionError("A must be non-empty");
  if (k < 1) throw UsageError("k must be positive");
  if (!h.contains_identity() || !(product(h, h, limits) == h)) throw PreconditionError("H is not a subgroup");
  CosetLabeler cosets(h);
  const auto in_h = [&](Key g) { return h.contains(g); };
  const std::size_t r = cosets.count(a);
  const std::size_t r_b = cosets.count(b);
  Verdict v;
  v.checks.push_back(compare("stabilizer_of_quotient", ">=", Big(product(a.inverse(), a, limits).count_if(in_h)), 1,
                             Big(a.size()), Big(r)));
  v.checks.push_back(
      compare_int("product_vs_orbit", ">=", Big(product(b, a, limits).size()), Big(a.count_if(in_h)) * r_b));
  if (!a.is_symmetric()) {
    v.notes.push_back("subgroup bounds skipped: A != A^-1");
    return v;
  }
  PowerSequence walk(a, limits);
  std::size_t a2_h = 0, ak_h = 0, pi_ak = 0;
  std::uint64_t a_k1 = 0, a_k2 = 0;
  for (;;) {
    const int j = walk.exponent();
    if (j == 2) a2_h = walk.current().count_if(in_h);
    if (j == k) {
      ak_h = walk.current().count_if(in_h);
      pi_ak = cosets.count(walk.current());
    }
    if (j == k + 1) a_k1 = walk.current().size();
    if (j == k + 2) {
      a_k2 = walk.current().size();
      break;
    }
    walk.advance();
  }
  v.checks.push_back(compare("square_meets_subgroup", ">=", Big(a2_h), 1, Big(a.size()), Big(r)));
  v.checks.push_back(compare("subgroup_growth", ">=", Big(a_k1), 1, Big(ak_h) * a.size(), Big(a2_h)));
  v.checks.push_back(compare("quotient_growth", ">=", Big(a_k2), 1, Big(pi_ak) * a.size(), Big(r)));
  return v;
}

Verdict centralizer_lower_bound(const ElementSet& a, Key g, int l, const WorkLimits& limits) {
  if (l < 1) throw UsageError("l must be >= 1");
  if (a.empty() || !a.is_symmetric()) throw PreconditionError("A must be non-empty with A = A^-1");
  const GroupPtr& group = a.group_ptr();
  PowerSequence seq(a, limits);
  while (seq.exponent() < l) seq.advance();
  if (!seq.current().contains(g)) throw PreconditionError("g is not in A^l");
  while (seq.exponent() < l + 2) seq.advance();
  const ElementSet& top = seq.current();

  std::uint64_t class_meet = 0;
  Verdict v;
  if (group->order() <= 1'000'000) {
    class_meet = top.intersect(conjugacy_class(group, g)).size();
  } else if (group->is_matrix_group()) {
    const GaloisField& f = group->field();
    const std::uint32_t t = trace(*group, g);
    const bool projective = group->kind() == GroupKind::PSL2;
    class_meet = top.count_if([&](Key h) {
      const std::uint32_t th = trace(*group, h);
      return th == t || (projective && th == f.neg(t));
    });
    v.notes.push_back("class replaced by the trace slice containing it");
  } else {
    throw CapacityError("conjugacy class of " + group->name() + " is too large to enumerate");
  }
  const CentralizerPredicate commutes(group, g);
  const auto square_cent = power(a, 2, limits).count_if(commutes);
  v.checks.push_back(compare("centralizer_bound", ">=", Big(square_cent), 1, Big(a.size()), Big(class_meet)));
  return v;
}

// ---------------------------------------------------------------------------

std::string to_string(PivotCase c) {
  switch (c) {
    case PivotCase::PivotInSet: return "pivot_in_set";
    case PivotCase::NoPivots: return "no_pivots";
    case PivotCase::Mixed: return "mixed";
  }
  return "?";
}

bool in_maximal_torus(const ElementSet& a) {
  require_affine(a.group());
  const GaloisField& f = a.group().field();
  // (r, x) fixes c iff r c + x = c.
  for (std::uint32_t c = 0; c < f.q(); ++c) {
    const bool all_fix = std::all_of(a.begin(), a.end(), [&](Key g) {
      const AffineElem e = a.group().affine_elem(g);
      return f.add(f.mul(e.r, c), e.x) == c;
    });
    if (all_fix) return true;
  }
  return false;
}

PivotReport affine_pivot_product(const ElementSet& a_u, const ElementSet& a_t, const WorkLimits& limits) {
  require_same_group(a_u, a_t);
  const Group& g = a_u.group();
  require_affine(g);
  const GaloisField& f = g.field();
  const auto in_u = [&](Key x) { return g.affine_elem(x).r == 1; };
  if (!std::all_of(a_u.begin(), a_u.end(), in_u)) throw PreconditionError("A_u must lie in U");
  if (!a_u.is_symmetric()) throw PreconditionError("A_u must satisfy A_u = A_u^-1");
  if (!a_u.contains_identity() || !a_t.contains_identity()) throw PreconditionError("e must lie in A_u and A_t");
  if (a_u.size() < 2) throw PreconditionError("A_u must differ from {e}");
  if (!in_maximal_torus(a_t)) throw PreconditionError("A_t must lie in a maximal torus");

  const std::uint64_t p = f.q();
  PivotReport rep;
  rep.bound = std::min<std::uint64_t>(a_u.size() * a_t.size(), p);

  const ElementSet t2 = product(a_t, a_t, limits);
  std::vector<Key> acted;
  for (Key t : t2) {
    for (Key u : a_u) acted.push_back(conj(g, t, u));
  }
  const ElementSet s(a_u.group_ptr(), std::move(acted));
  rep.product_size = power(s, 6, limits).size();
  rep.holds = rep.product_size >= rep.bound;

  // phi_a(u, t) = u t a t^-1, tabulated by translation part.
  const std::uint64_t pairs = a_u.size() * a_t.size();
  std::vector<std::uint32_t> hits(p);
  bool pivot_in_set = false;
  rep.kappa_min = ~std::uint64_t{0};
  double kappa_total = 0;
  for (std::uint32_t x = 0; x < p; ++x) {
    const Key a = g.pack(AffineElem{1, x});
    std::fill(hits.begin(), hits.end(), 0);
    std::uint64_t distinct = 0, kappa = 0;
    for (Key u : a_u) {
      for (Key t : a_t) {
        const std::uint32_t img = g.affine_elem(g.mul(u, conj(g, t, a))).x;
        if (hits[img]++ == 0) ++distinct;
      }
    }
    for (auto h : hits) kappa += std::uint64_t{h} * h;
    const bool pivot = distinct == pairs;
    rep.pivots_in_u += pivot;
    if (pivot && a_u.contains(a)) pivot_in_set = true;
    if (x != 0) {
      rep.kappa_min = std::min(rep.kappa_min, kappa);
      rep.kappa_max = std::max(rep.kappa_max, kappa);
      kappa_total += static_cast<double>(kappa);
    }
  }
  rep.kappa_mean = p > 1 ? kappa_total / static_cast<double>(p - 1) : 0;
  if (p == 1) rep.kappa_min = 0;
  rep.case_label = pivot_in_set ? PivotCase::PivotInSet : rep.pivots_in_u == 0 ? PivotCase::NoPivots : PivotCase::Mixed;
  return rep;
}

Verdict verify_affine_growth(const ElementSet& a, const WorkLimits& limits) {
  const Group& g = a.group();
  require_affine(g);
  if (!a.is_symmetric()) throw PreconditionError("A must satisfy A = A^-1");
  if (!a.contains_identity()) throw PreconditionError("e must lie in A");
  const auto in_u = [&](Key x) { return g.affine_elem(x).r == 1; };

  std::vector<std::uint32_t> rs;
  for (Key x : a) rs.push_back(g.affine_elem(x).r);
  std::sort(rs.begin(), rs.end());
  const std::size_t pi_a = static_cast<std::size_t>(std::unique(rs.begin(), rs.end()) - rs.begin());

  PowerSequence seq(a, limits);
  std::uint64_t a5 = 0;
  ElementSet a2(a.group_ptr());
  std::optional<ElementSet> a72;
  std::uint64_t a73 = 0;
  const bool torus = in_maximal_torus(a);
  const int last = torus ? 5 : 73;
  for (;;) {
    const int j = seq.exponent();
    if (j == 2) a2 = seq.current();
    if (j == 5) a5 = seq.current().size();
    if (j == 72) a72 = seq.current();
    if (j == 73) a73 = seq.current().size();
    if (j == last) break;
    seq.advance();
  }

  Verdict v;
  if (std::all_of(a.begin(), a.end(), in_u)) {
    v.notes.push_back("lemma skipped: A lies in U");
  } else {
    v.checks.push_back(compare("unipotent_part", ">=", Big(a2.count_if(in_u)), 1, Big(a.size()), Big(pi_a)));
    for (Key x : a) {
      if (in_u(x)) continue;
      const CentralizerPredicate cx(a.group_ptr(), x);
      v.checks.push_back(compare("torus_part_x" + std::to_string(x), ">=", Big(a2.count_if(cx)), 1,
                                 Big(a.size()) * pi_a, Big(a5)));
    }
  }
  if (torus) {
    v.notes.push_back("proposition skipped: A lies in a maximal torus");
  } else {
    const std::uint64_t p = g.q();
    const std::size_t u_in = a72->count_if(in_u);
    // |A^73|^2 >= |pi(A)| |A|^2, or U inside A^72.
    Inequality growth = compare_int("growth_or_unipotent", ">=", Big(a73) * a73, Big(pi_a) * a.size() * a.size());
    growth.lhs = static_cast<double>(a73);
    growth.rhs = std::sqrt(static_cast<double>(pi_a)) * static_cast<double>(a.size());
    growth.holds = growth.holds || u_in == p;
    v.checks.push_back(growth);
  }
  return v;
}

SumProductReport sum_product_check(std::uint32_t p, const std::vector<std::uint32_t>& x,
                                   const std::vector<std::uint32_t>& y) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  std::vector<char> in_x(p, 0), in_y(p, 0);
  for (auto v : x) {
    if (v >= p) throw UsageError("X entry out of range");
    in_x[v] = 1;
  }
  for (auto v : y) {
    if (v == 0 || v >= p) throw UsageError("Y must lie in F_p^*");
    in_y[v] = 1;
  }
  if (!in_x[0]) throw PreconditionError("0 must lie in X");
  if (!in_y[1 % p]) throw PreconditionError("1 must lie in Y");
  for (std::uint32_t v = 0; v < p; ++v) {
    if (in_x[v] && !in_x[(p - v) % p]) throw PreconditionError("X must satisfy X = -X");
  }
  const auto count = [](const std::vector<char>& s) {
    return static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 1));
  };
  const std::uint64_t nx = count(in_x), ny = count(in_y);

  std::vector<char> y2x(p, 0);
  for (std::uint32_t y1 = 1; y1 < p; ++y1) {
    if (!in_y[y1]) continue;
    for (std::uint32_t y2 = 1; y2 < p; ++y2) {
      if (!in_y[y2]) continue;
      const std::uint64_t yy = std::uint64_t{y1} * y2 % p;
      for (std::uint32_t v = 0; v < p; ++v) {
        if (in_x[v]) y2x[yy * v % p] = 1;
      }
    }
  }
  std::vector<char> sum = y2x;
  for (int step = 1; step < 6; ++step) {
    std::vector<char> next(p, 0);
    for (std::uint32_t s = 0; s < p; ++s) {
      if (!sum[s]) continue;
      for (std::uint32_t t = 0; t < p; ++t) {
        if (y2x[t]) next[(s + t) % p] = 1;
      }
    }
    sum = std::move(next);
  }

  SumProductReport rep;
  rep.six_fold_size = count(sum);
  rep.bound = std::min<std::uint64_t>(nx * ny, p - 1);
  if (nx == 1) {
    rep.verdict.notes.push_back("sum_product skipped: X = {0}");
  } else {
    rep.verdict.checks.push_back(compare_int("sum_product", ">=", Big(rep.six_fold_size), Big(rep.bound)));
  }

  std::vector<std::uint32_t> d;
  for (std::uint32_t v = 1; v < p; ++v) {
    if (in_x[v] || in_y[v]) d.push_back(v);
  }
  rep.diag_set_size = d.size();
  if (!d.empty()) {
    std::vector<char> prod(p, 0), add(p, 0);
    for (auto u : d) {
      for (auto w : d) {
        prod[std::uint64_t{u} * w % p] = 1;
        add[(u + w) % p] = 1;
      }
    }
    rep.diag_product = count(prod);
    rep.diag_sum = count(add);
    rep.diag_ratio = static_cast<double>(std::max(rep.diag_product, rep.diag_sum)) / static_cast<double>(d.size());
  }
  return rep;
}

// ---------------------------------------------------------------------------

VarietyPredicate VarietyPredicate::trace_slice(std::vector<std::uint32_t> traces) {
  VarietyPredicate w;
  w.kind_ = Kind::TraceSlice;
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  w.traces_ = std::move(traces);
  std::ostringstream os;
  os << "trace in {";
  for (std::size_t i = 0; i < w.traces_.size(); ++i) os << (i ? "," : "") << w.traces_[i];
  os << "}";
  w.label_ = os.str();
  return w;
}

VarietyPredicate VarietyPredicate::non_regular_semisimple(const GaloisField& field) {
  VarietyPredicate w = trace_slice({field.from_int(2), field.from_int(-2)});
  w.label_ = "trace = +-2";
  return w;
}

VarietyPredicate VarietyPredicate::torus(GroupPtr group, Key g0) {
  VarietyPredicate w;
  w.kind_ = Kind::Torus;
  w.torus_group_ = std::move(group);
  w.torus_center_ = g0;
  w.label_ = "centralizer of " + std::to_string(g0);
  return w;
}

VarietyPredicate VarietyPredicate::unipotent() {
  VarietyPredicate w;
  w.kind_ = Kind::Unipotent;
  w.label_ = "unipotent U";
  return w;
}

VarietyPredicate VarietyPredicate::polynomial(std::vector<Monomial> terms) {
  VarietyPredicate w;
  w.kind_ = Kind::Polynomial;
  w.terms_ = std::move(terms);
  std::ostringstream os;
  static const char* names = "abcd";
  for (std::size_t i = 0; i < w.terms_.size(); ++i) {
    const auto& m = w.terms_[i];
    os << (i ? " + " : "") << m.coef;
    for (int j = 0; j < 4; ++j) {
      if (m.exps[j]) os << "*" << names[j] << (m.exps[j] > 1 ? "^" + std::to_string(m.exps[j]) : "");
    }
  }
  os << " = 0";
  w.label_ = os.str();
  return w;
}

VarietyPredicate VarietyPredicate::abcd_zero() {
  VarietyPredicate w = polynomial({Monomial{1, {1, 1, 1, 1}}});
  w.label_ = "abcd = 0";
  return w;
}

VarietyPredicate VarietyPredicate::nothing() {
  VarietyPredicate w;
  w.kind_ = Kind::Nothing;
  w.label_ = "empty";
  return w;
}

bool VarietyPredicate::contains(const Group& group, Key g) const {
  switch (kind_) {
    case Kind::Nothing: return false;
    case Kind::TraceSlice: return std::binary_search(traces_.begin(), traces_.end(), trace_of(group, g));
    case Kind::Torus: {
      if (!torus_group_->same_as(group)) throw UsageError("torus predicate used with another group");
      return group.mul(torus_center_, g) == group.mul(g, torus_center_);
    }
    case Kind::Unipotent: return is_unipotent(group, g);
    case Kind::Polynomial: {
      const GaloisField& f = group.field();
      const auto m = matrix_entries(group, g);
      std::uint32_t total = 0;
      for (const auto& term : terms_) {
        std::uint32_t v = f.from_int(term.coef);
        for (int j = 0; j < 4; ++j) v = f.mul(v, f.pow(m[j], term.exps[j]));
        total = f.add(total, v);
      }
      return total == 0;
    }
  }
  return false;
}

std::string VarietyPredicate::describe() const { return label_; }

VarietyPredicate parse_polynomial_predicate(const std::string& text) {
  std::vector<VarietyPredicate::Monomial> terms;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    VarietyPredicate::Monomial m;
    if (!(ls >> m.coef)) continue;
    for (int j = 0; j < 4; ++j) {
      int e;
      if (!(ls >> e) || e < 0 || e > 255) {
        throw UsageError("predicate line " + std::to_string(lineno) + ": expected 'coef ea eb ec ed'");
      }
      m.exps[j] = static_cast<std::uint8_t>(e);
    }
    std::string extra;
    if (ls >> extra) throw UsageError("predicate line " + std::to_string(lineno) + ": trailing input");
    terms.push_back(m);
  }
  if (terms.empty()) throw UsageError("predicate file has no monomials");
  return VarietyPredicate::polynomial(std::move(terms));
}

EscapeResult escape(const ElementSet& a, const VarietyPredicate& w, int k_max, const WorkLimits& limits) {
  if (k_max < 1) throw UsageError("k_max must be >= 1");
  if (!a.is_symmetric() || !a.contains_identity()) throw PreconditionError("escape needs A = A^-1 and e in A");
  EscapeResult res;
  res.k_max = k_max;
  PowerSequence seq(a, limits);
  for (;;) {
    const ElementSet& cur = seq.current();
    std::uint64_t outside = 0;
    std::optional<Key> first;
    for (Key g : cur) {
      if (!w.contains(a.group(), g)) {
        if (!first) first = g;
        ++outside;
      }
    }
    if (first) {
      res.found = true;
      res.k = seq.exponent();
      res.witness = *first;
      res.count_at_k = outside;
      res.size_at_k = cur.size();
      return res;
    }
    if (seq.exponent() >= k_max) break;
    const std::size_t before = cur.size();
    seq.advance();
    if (seq.current().size() == before) break;  // powers have stabilized inside W
  }
  res.k = seq.exponent();
  res.size_at_k = seq.current().size();
  return res;
}

SliceProfile slice_profile(const ElementSet& a, std::optional<Key> torus) {
  const Group& g = a.group();
  if (!g.is_matrix_group()) throw UsageError("slice profiles need SL2 or PSL2");
  const GaloisField& f = g.field();
  SliceProfile prof;
  prof.counts.assign(f.q(), 0);
  prof.set_size = a.size();
  for (Key x : a) ++prof.counts[trace(g, x)];
  const std::uint32_t two = f.from_int(2), minus_two = f.from_int(-2);
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (t == two || t == minus_two) continue;
    if (!prof.argmax_regular || prof.counts[t] > prof.max_regular) {
      prof.argmax_regular = t;
      prof.max_regular = prof.counts[t];
    }
  }
  const double log_a = std::log(static_cast<double>(a.size()));
  if (a.size() > 1 && prof.max_regular > 0) prof.exponent = std::log(static_cast<double>(prof.max_regular)) / log_a;
  if (torus) {
    if (!is_regular_semisimple(g, *torus)) throw PreconditionError("torus center must be regular semisimple");
    prof.torus_center = *torus;
    prof.torus_count = a.count_if(CentralizerPredicate(a.group_ptr(), *torus));
    if (a.size() > 1 && prof.torus_count > 0) {
      prof.torus_exponent = std::log(static_cast<double>(prof.torus_count)) / log_a;
    }
  }
  return prof;
}

// ---------------------------------------------------------------------------

GrowthReport dichotomy_probe(const ElementSet& a, int max_k, const WorkLimits& limits) {
  if (max_k < 1) throw UsageError("max_k must be >= 1");
  if (!generates(a, limits)) throw PreconditionError("A does not generate " + a.group().name());
  GrowthReport rep;
  rep.group_order = a.group().order();
  PowerSequence seq(a, limits);
  const int target = std::max(max_k, 3);
  while (true) {
    if (seq.current().is_whole_group()) {
      rep.saturated_at = seq.exponent();
      break;
    }
    if (seq.exponent() >= target) break;
    seq.advance();
  }
  rep.sizes = seq.sizes();
  const auto size_at = [&](int k) -> std::uint64_t {
    if (k <= static_cast<int>(rep.sizes.size())) return rep.sizes[k - 1];
    return rep.group_order;  // past saturation
  };
  const auto n1 = static_cast<double>(rep.sizes[0]);
  const auto n3 = static_cast<double>(size_at(3));
  rep.tripling = n3 / n1;
  rep.delta = rep.sizes[0] > 1 ? std::log(n3) / std::log(n1) - 1 : 0;
  for (std::size_t i = 0; i + 1 < rep.sizes.size(); ++i) {
    const auto lo = static_cast<double>(rep.sizes[i]), hi = static_cast<double>(rep.sizes[i + 1]);
    rep.step_deltas.push_back(lo > 1 ? std::log(hi) / std::log(lo) - 1 : 0);
  }
  const double order = static_cast<double>(rep.group_order);
  for (int k = 1; k <= static_cast<int>(rep.sizes.size()); ++k) {
    if (3 * k > static_cast<int>(rep.sizes.size()) && !rep.saturated_at) break;
    const double nk = static_cast<double>(size_at(k)), n3k = static_cast<double>(size_at(3 * k));
    if (size_at(3 * k) == rep.group_order) continue;
    if (n3k < std::pow(nk, 1.01) && nk < std::pow(order, 0.9)) rep.flagged_steps.push_back(k);
  }
  return rep;
}

ElementSet pyber_spiga_set(const GroupPtr& sym, int m) {
  if (sym->kind() != GroupKind::Sym) throw UsageError("Sym(n) required");
  const int n = sym->degree();
  if (m < 2 || m >= n) throw UsageError("need 2 <= m < n");
  // Permutations of {0..m-1} fixing the rest, enumerated through Sym(m).
  const GroupPtr small = Group::sym(m);
  std::vector<Key> keys;
  for (std::uint64_t i = 0; i < small->order(); ++i) {
    Perm p = small->perm(small->at(i));
    for (int j = m; j < n; ++j) p.images.push_back(static_cast<std::uint8_t>(j));
    keys.push_back(sym->pack(p));
  }
  Perm cycle;
  for (int i = 0; i < n; ++i) cycle.images.push_back(static_cast<std::uint8_t>((i + 1) % n));
  const Key s = sym->pack(cycle);
  keys.push_back(s);
  keys.push_back(sym->inv(s));
  return ElementSet(sym, std::move(keys));
}

PyberSpigaReport pyber_spiga_check(int n, int m, const WorkLimits& limits) {
  if (n < 3 || n > kMaxSymDegree || m < 2 || m >= n) throw UsageError("need 2 <= m < n <= 12");
  const GroupPtr sym = Group::sym(n);
  const ElementSet a = pyber_spiga_set(sym, m);
  PyberSpigaReport rep;
  rep.n = n;
  rep.m = m;
  rep.set_size = a.size();
  rep.cube_size = power(a, 3, limits).size();
  std::uint64_t fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  rep.bound = 9 * fact + 2 * fact * (m + 1);
  rep.holds = rep.cube_size <= rep.bound;
  return rep;
}

}  // namespace growthlab
