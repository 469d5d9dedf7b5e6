#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

#include "growthlab/errors.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/random.hpp"
#include "growthlab/suites.hpp"

using namespace growthlab;

namespace {

GroupPtr sl2(std::uint32_t q) { return Group::sl2(GaloisField::of_order(q)); }
GroupPtr affine(std::uint32_t q) { return Group::affine(GaloisField::of_order(q)); }

ElementSet set_of(const GroupPtr& g, std::vector<Key> keys) { return ElementSet(g, std::move(keys)); }

ElementSet standard_set(const GroupPtr& g) { return symmetrize(ElementSet(g, standard_generators(*g))); }

std::set<Key> naive_product(const ElementSet& a, const ElementSet& b) {
  std::set<Key> out;
  for (Key x : a)
    for (Key y : b) out.insert(a.group().mul(x, y));
  return out;
}

std::set<Key> as_set(const ElementSet& a) { return {a.begin(), a.end()}; }

// 2x2 matrices mod p as plain integer arrays.
using IntMat = std::array<int, 4>;

IntMat mat_mul(const IntMat& x, const IntMat& y, int p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
          (x[2] * y[1] + x[3] * y[3]) % p};
}

std::vector<std::size_t> matrix_power_sizes(const std::vector<IntMat>& a, int p, int k) {
  std::set<IntMat> cur(a.begin(), a.end());
  std::vector<std::size_t> sizes{cur.size()};
  for (int j = 2; j <= k; ++j) {
    std::set<IntMat> next;
    for (const auto& x : cur)
      for (const auto& y : a) next.insert(mat_mul(x, y, p));
    cur = std::move(next);
    sizes.push_back(cur.size());
  }
  return sizes;
}

}  // namespace

// ---- element sets ----------------------------------------------------------

TEST(ElementSets, ProductMatchesDoubleLoop) {
  Rng rng(11);
  for (const auto& g : {sl2(5), affine(13), Group::sym(5), Group::psl2(GaloisField::of_order(9))}) {
    for (int i = 0; i < 30; ++i) {
      const auto a = random_subset(g, 1 + rng.uniform(12), rng);
      const auto b = random_subset(g, 1 + rng.uniform(12), rng);
      EXPECT_EQ(as_set(product(a, b)), naive_product(a, b));
    }
  }
}

TEST(ElementSets, ProductIsAssociative) {
  Rng rng(12);
  const auto g = sl2(7);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_subset(g, 1 + rng.uniform(6), rng);
    const auto b = random_subset(g, 1 + rng.uniform(6), rng);
    const auto c = random_subset(g, 1 + rng.uniform(6), rng);
    EXPECT_EQ(product(a, product(b, c)), product(product(a, b), c));
  }
}

TEST(ElementSets, SymmetrizeIsIdempotent) {
  Rng rng(13);
  const auto g = affine(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_subset(g, 1 + rng.uniform(10), rng);
    const auto s = symmetrize(a);
    EXPECT_EQ(symmetrize(s), s);
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_TRUE(s.contains_identity());
    EXPECT_TRUE(a.subset_of(s));
  }
}

TEST(ElementSets, PowerSequenceMatchesLeftFold) {
  Rng rng(14);
  const auto g = sl2(5);
  for (int i = 0; i < 20; ++i) {
    const bool with_e = i % 2 == 0;
    auto a = random_subset(g, 1 + rng.uniform(4), rng);
    if (with_e) a = a.unite(ElementSet::identity_set(g));
    PowerSequence seq(a);
    ElementSet fold = a;
    for (int k = 2; k <= 6; ++k) {
      seq.advance();
      fold = product(fold, a);
      EXPECT_EQ(seq.current(), fold) << "k=" << k;
      EXPECT_EQ(power(a, k), fold);
    }
  }
}

TEST(ElementSets, ThreadedProductsEqualSerial) {
  Rng rng(15);
  const auto g = sl2(11);
  const auto a = random_subset(g, 200, rng);
  const auto b = random_subset(g, 150, rng);
  WorkLimits threaded;
  threaded.threads = 3;
  EXPECT_EQ(product(a, b, threaded), product(a, b));
  const auto s = standard_set(g);
  PowerSequence serial(s), parallel(s, threaded);
  for (int k = 2; k <= 8; ++k) {
    serial.advance();
    parallel.advance();
    EXPECT_EQ(serial.current(), parallel.current());
  }
}

TEST(ElementSets, BudgetCarriesPartialSizes) {
  const auto g = sl2(13);
  WorkLimits tight;
  tight.budget = 500;
  PowerSequence seq(standard_set(g), tight);
  try {
    for (int k = 0; k < 20; ++k) seq.advance();
    FAIL() << "budget not enforced";
  } catch (const CapacityError& e) {
    ASSERT_FALSE(e.partial_sizes.empty());
    EXPECT_EQ(e.partial_sizes, seq.sizes());
    EXPECT_EQ(e.partial_sizes[0], 5u);
  }
}

TEST(ElementSets, SparseAccumulatorAgreesWithDense) {
  // SL2(F_p) with p above 128 has a key space past the bitset limit.
  const auto big = sl2(131);
  ASSERT_GT(big->key_space(), kDenseKeySpaceLimit);
  const auto s = standard_set(big);
  const auto sizes = [](const ElementSet& a) {
    PowerSequence seq(a);
    for (int k = 0; k < 4; ++k) seq.advance();
    return seq.sizes();
  };
  std::vector<IntMat> gens{{1, 0, 0, 1}, {1, 1, 0, 1}, {1, 130, 0, 1}, {1, 0, 1, 1}, {1, 0, 130, 1}};
  const auto oracle = matrix_power_sizes(gens, 131, 5);
  const auto got = sizes(s);
  ASSERT_EQ(got.size(), oracle.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], oracle[i]);
}

TEST(ElementSets, Examples) {
  const auto g = sl2(5);
  const auto h = set_of(g, {g->identity(), g->pack(Mat2{4, 0, 0, 4})});
  EXPECT_EQ(product(h, h), h);

  const auto a11 = affine(11);
  const Key mult3 = a11->pack(AffineElem{3, 0});  // order 5
  const auto a = set_of(a11, {a11->identity(), mult3});
  EXPECT_EQ(power(a, 2).size(), 3u);
}

TEST(ElementSets, SL2F5SeriesMatchesMatrixOracle) {
  const auto g = sl2(5);
  const auto s = standard_set(g);
  ASSERT_EQ(s.size(), 5u);
  const std::vector<IntMat> gens{{1, 0, 0, 1}, {1, 1, 0, 1}, {1, 4, 0, 1}, {1, 0, 1, 1}, {1, 0, 4, 1}};
  const auto oracle = matrix_power_sizes(gens, 5, 7);
  PowerSequence seq(s);
  while (seq.exponent() < 7) seq.advance();
  const std::vector<std::uint64_t> expected{5, 17, 43, 91, 117, 120, 120};
  EXPECT_EQ(seq.sizes(), expected);
  for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(seq.sizes()[i], oracle[i]);
}

TEST(ElementSets, GeneratedSubgroup) {
  const auto g = sl2(7);
  EXPECT_TRUE(generates(standard_set(g)));
  const auto u = set_of(g, {g->pack(Mat2{1, 1, 0, 1})});
  EXPECT_EQ(generated_subgroup(u).size(), 7u);
  EXPECT_FALSE(generates(u));
}

// ---- Ruzsa and chain bounds -----------------------------------------------

TEST(Ruzsa, SubgroupGivesEquality) {
  const auto g = sl2(5);
  const auto h = generated_subgroup(set_of(g, {g->pack(Mat2{1, 1, 0, 1})}));
  const auto v = verify_ruzsa_triangle(h, h, h);
  ASSERT_EQ(v.checks.size(), 1u);
  EXPECT_TRUE(v.holds());
  EXPECT_DOUBLE_EQ(v.checks[0].lhs, v.checks[0].rhs);
}

TEST(Ruzsa, SingletonA) {
  Rng rng(21);
  const auto g = sl2(7);
  const auto a = ElementSet::identity_set(g);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_subset(g, 1 + rng.uniform(10), rng);
    const auto c = random_subset(g, 1 + rng.uniform(10), rng);
    const auto v = verify_ruzsa_triangle(a, b, c);
    EXPECT_TRUE(v.holds());
    EXPECT_DOUBLE_EQ(v.checks[0].lhs, static_cast<double>(c.size() * b.size()));
  }
}

TEST(Ruzsa, RandomSetsHold) {
  Rng rng(22);
  const auto g = sl2(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_subset(g, 20, rng), b = random_subset(g, 20, rng), c = random_subset(g, 20, rng);
    EXPECT_TRUE(verify_ruzsa_triangle(a, b, c).holds());
  }
}

TEST(Chain, SubgroupAndStandardSets) {
  const auto g = sl2(5);
  const auto h = generated_subgroup(set_of(g, {g->pack(Mat2{1, 1, 0, 1})}));
  EXPECT_TRUE(verify_tripling_chain(h, 5).holds());
  EXPECT_TRUE(verify_tripling_chain(standard_set(g), 5).holds());
  const auto single = symmetrize(set_of(g, {g->pack(Mat2{1, 1, 0, 1})}));
  EXPECT_TRUE(verify_tripling_chain(single, 4).holds());
}

TEST(Chain, SymmetrizedDisplayFailsAtThreeAndIsNotChecked) {
  // A = {g}, g of order 7: |S^3|/|A| = 7 while 3 (|A^3|/|A|)^3 = 3.
  const auto g = sl2(7);
  const auto a = set_of(g, {g->pack(Mat2{1, 1, 0, 1})});
  const auto s3 = power(symmetrize(a), 3).size();
  const auto a3 = power(a, 3).size();
  EXPECT_EQ(s3, 7u);
  EXPECT_EQ(a3, 1u);
  EXPECT_GT(static_cast<double>(s3), 3.0 * std::pow(static_cast<double>(a3), 3));
  const auto v = verify_tripling_chain(a, 5);
  EXPECT_EQ(v.find("symmetrized_power_k3"), nullptr);
  ASSERT_NE(v.find("symmetrized_power_k4"), nullptr);
  EXPECT_TRUE(v.holds());
}

TEST(Chain, NonSymmetricSkipsSymmetricPowers) {
  const auto g = sl2(7);
  const auto a = set_of(g, {g->identity(), g->pack(Mat2{1, 1, 0, 1}), g->pack(Mat2{1, 0, 1, 1})});
  const auto v = verify_tripling_chain(a, 4);
  EXPECT_EQ(v.find("symmetric_power_k3"), nullptr);
  EXPECT_FALSE(v.notes.empty());
  EXPECT_TRUE(v.holds());
}

// ---- orbit-stabilizer ----------------------------------------------------

TEST(OrbitStabilizer, StabilizerEquality) {
  const auto g = affine(7);
  const auto u = generated_subgroup(set_of(g, {g->pack(AffineElem{1, 1})}));
  const auto v = verify_orbit_stabilizer_cosets(u, u, u, 1);
  EXPECT_TRUE(v.holds());
  const auto* s = v.find("stabilizer_of_quotient");
  ASSERT_NE(s, nullptr);
  EXPECT_DOUBLE_EQ(s->lhs, s->rhs);
}

TEST(OrbitStabilizer, ConjugationRandomSymmetric) {
  Rng rng(31);
  const auto g = sl2(7);
  const Key x = g->pack(Mat2{2, 1, 1, 1});
  for (int i = 0; i < 30; ++i) {
    const auto a = random_symmetric(g, 2 + rng.uniform(15), rng, false);
    const auto b = random_symmetric(g, 2 + rng.uniform(15), rng, false);
    EXPECT_TRUE(verify_orbit_stabilizer_conjugation(a, b, x).holds());
  }
}

TEST(OrbitStabilizer, CosetsOfU) {
  Rng rng(32);
  const auto g = affine(11);
  const auto u = generated_subgroup(set_of(g, {g->pack(AffineElem{1, 1})}));
  for (int i = 0; i < 30; ++i) {
    const auto a = random_symmetric(g, 2 + rng.uniform(10), rng, true);
    const auto b = random_subset(g, 1 + rng.uniform(10), rng);
    const auto v = verify_orbit_stabilizer_cosets(a, b, u, 3);
    EXPECT_TRUE(v.holds());
    EXPECT_NE(v.find("quotient_growth"), nullptr);
  }
}

TEST(OrbitStabilizer, RejectsNonSubgroup) {
  const auto g = affine(7);
  const auto h = set_of(g, {g->identity(), g->pack(AffineElem{1, 1})});
  EXPECT_THROW(verify_orbit_stabilizer_cosets(h, h, h, 1), PreconditionError);
}

TEST(Centralizer, IdentityAndWholeGroup) {
  const auto g = sl2(5);
  const auto s = standard_set(g);
  EXPECT_TRUE(centralizer_lower_bound(s, g->identity(), 1).holds());
  const auto all = ElementSet::whole(g);
  for (Key x : {g->pack(Mat2{1, 1, 0, 1}), g->pack(Mat2{0, 1, 4, 0}), g->pack(Mat2{2, 0, 0, 3})}) {
    const auto v = centralizer_lower_bound(all, x, 1);
    ASSERT_TRUE(v.holds());
    EXPECT_DOUBLE_EQ(v.checks[0].lhs, static_cast<double>(centralizer(g, x).size()));
    EXPECT_DOUBLE_EQ(v.checks[0].lhs, v.checks[0].rhs);
  }
}

TEST(Centralizer, RegularSemisimpleInSquare) {
  const auto g = sl2(7);
  const auto s = standard_set(g);
  const auto s2 = power(s, 2);
  int tested = 0;
  for (Key x : s2) {
    if (!is_regular_semisimple(*g, x)) continue;
    EXPECT_TRUE(centralizer_lower_bound(s, x, 2).holds());
    ++tested;
  }
  EXPECT_GT(tested, 0);
}

TEST(Centralizer, Preconditions) {
  const auto g = sl2(7);
  const auto s = standard_set(g);
  EXPECT_THROW(centralizer_lower_bound(s, g->pack(Mat2{3, 0, 0, 5}), 1), PreconditionError);
  const auto nonsym = set_of(g, {g->pack(Mat2{1, 1, 0, 1})});
  EXPECT_THROW(centralizer_lower_bound(nonsym, g->pack(Mat2{1, 1, 0, 1}), 1), PreconditionError);
}

// ---- affine group ---------------------------------------------------------

TEST(Affine, PivotExamples) {
  const auto g = affine(31);
  const auto u = generated_subgroup(set_of(g, {g->pack(AffineElem{1, 1})}));
  const auto e = ElementSet::identity_set(g);
  const auto whole_u = affine_pivot_product(u, e);
  EXPECT_EQ(whole_u.bound, 31u);
  EXPECT_EQ(whole_u.product_size, 31u);
  EXPECT_TRUE(whole_u.holds);

  const auto g101 = affine(101);
  const auto au = set_of(g101, {g101->identity(), g101->pack(AffineElem{1, 1}), g101->pack(AffineElem{1, 100})});
  const auto at = set_of(g101, {g101->identity(), g101->pack(AffineElem{2, 0}), g101->pack(AffineElem{4, 0})});
  const auto rep = affine_pivot_product(au, at);
  EXPECT_EQ(rep.bound, 9u);
  EXPECT_GE(rep.product_size, 9u);
  EXPECT_TRUE(rep.holds);

  // |A_u||A_t| >= p: the product is all of U.
  const auto au31 = set_of(g, {g->identity(), g->pack(AffineElem{1, 1}), g->pack(AffineElem{1, 30}),
                               g->pack(AffineElem{1, 2}), g->pack(AffineElem{1, 29})});
  std::vector<Key> torus{g->identity()};
  for (std::uint32_t r : {3u, 9u, 27u, 19u, 26u, 16u}) torus.push_back(g->pack(AffineElem{r, 0}));
  const auto big = affine_pivot_product(au31, set_of(g, torus));
  EXPECT_EQ(big.bound, 31u);
  EXPECT_EQ(big.product_size, 31u);
}

TEST(Affine, PivotPreconditions) {
  const auto g = affine(13);
  const auto e = ElementSet::identity_set(g);
  EXPECT_THROW(affine_pivot_product(e, e), PreconditionError);
  const auto nonsym = set_of(g, {g->identity(), g->pack(AffineElem{1, 1})});
  EXPECT_THROW(affine_pivot_product(nonsym, e), PreconditionError);
  const auto sym_u = symmetrize(nonsym);
  const auto two_points = set_of(g, {g->identity(), g->pack(AffineElem{2, 0}), g->pack(AffineElem{2, 1})});
  EXPECT_THROW(affine_pivot_product(sym_u, two_points), PreconditionError);
}

TEST(Affine, GrowthExamples) {
  const auto g = affine(13);
  const auto whole = ElementSet::whole(g);
  EXPECT_TRUE(verify_affine_growth(whole).holds());
  const auto a = symmetrize(set_of(g, {g->pack(AffineElem{2, 0}), g->pack(AffineElem{1, 1})}));
  const auto v = verify_affine_growth(a);
  EXPECT_TRUE(v.holds());
  EXPECT_NE(v.find("unipotent_part"), nullptr);
  const auto* growth = v.find("growth_or_unipotent");
  ASSERT_NE(growth, nullptr);
  EXPECT_TRUE(growth->holds);
  const auto u = generated_subgroup(set_of(g, {g->pack(AffineElem{1, 1})}));
  EXPECT_TRUE(u.subset_of(power(a, 72)));
}

TEST(Affine, TorusDetection) {
  const auto g = affine(7);
  EXPECT_TRUE(in_maximal_torus(set_of(g, {g->identity(), g->pack(AffineElem{3, 0})})));
  // (3, 1) fixes c with 3c + 1 = c, c = 3.
  EXPECT_TRUE(in_maximal_torus(set_of(g, {g->identity(), g->pack(AffineElem{3, 1})})));
  EXPECT_FALSE(in_maximal_torus(set_of(g, {g->pack(AffineElem{3, 0}), g->pack(AffineElem{1, 1})})));
}

TEST(SumProduct, Examples) {
  const auto trivial = sum_product_check(7, {0}, {1});
  EXPECT_EQ(trivial.six_fold_size, 1u);
  EXPECT_EQ(trivial.bound, 1u);

  const auto r = sum_product_check(31, {0, 1, 30, 2, 29}, {1, 3});
  EXPECT_EQ(r.bound, 10u);
  // independent count of 6 Y^2 X
  std::set<std::uint32_t> y2x;
  for (std::uint32_t y1 : {1u, 3u})
    for (std::uint32_t y2 : {1u, 3u})
      for (std::uint32_t x : {0u, 1u, 30u, 2u, 29u}) y2x.insert(y1 * y2 * x % 31);
  std::set<std::uint32_t> sum{0};
  for (int i = 0; i < 6; ++i) {
    std::set<std::uint32_t> next;
    for (auto s : sum)
      for (auto t : y2x) next.insert((s + t) % 31);
    sum = next;
  }
  EXPECT_EQ(r.six_fold_size, sum.size());
  EXPECT_GE(r.six_fold_size, 10u);
  EXPECT_TRUE(r.verdict.holds());

  std::vector<std::uint32_t> all(13);
  for (std::uint32_t v = 0; v < 13; ++v) all[v] = v;
  const auto full = sum_product_check(13, all, {1});
  EXPECT_EQ(full.six_fold_size, 13u);
  EXPECT_EQ(full.bound, 12u);
  EXPECT_TRUE(full.verdict.holds());
}

TEST(SumProduct, ZeroSetIsReportedNotChecked) {
  const auto r = sum_product_check(7, {0}, {1, 2});
  EXPECT_EQ(r.six_fold_size, 1u);
  EXPECT_EQ(r.bound, 2u);
  EXPECT_TRUE(r.verdict.checks.empty());
  EXPECT_FALSE(r.verdict.notes.empty());
}

TEST(SumProduct, Preconditions) {
  EXPECT_THROW(sum_product_check(7, {1, 6}, {1}), PreconditionError);
  EXPECT_THROW(sum_product_check(7, {0, 1}, {1}), PreconditionError);
  EXPECT_THROW(sum_product_check(7, {0}, {2}), PreconditionError);
  EXPECT_THROW(sum_product_check(7, {0}, {0, 1}), UsageError);
}

// ---- escape and slices ---------------------------------------------------

TEST(Escape, NonRegularSemisimpleLocus) {
  const auto g = sl2(7);
  const auto s = standard_set(g);
  const auto r = escape(s, VarietyPredicate::non_regular_semisimple(g->field()), 6);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.k, 2);
  const Key example_witness = g->pack(Mat2{2, 1, 1, 1});
  const auto s2 = power(s, 2);
  EXPECT_TRUE(s2.contains(example_witness));
  EXPECT_TRUE(is_regular_semisimple(*g, example_witness));
  EXPECT_TRUE(is_regular_semisimple(*g, r.witness));
  // least key outside W
  for (Key x : s2) {
    if (is_regular_semisimple(*g, x)) {
      EXPECT_EQ(x, r.witness);
      break;
    }
  }
  EXPECT_EQ(r.count_at_k, s2.count_if([&](Key x) { return is_regular_semisimple(*g, x); }));
  for (Key x : s) EXPECT_FALSE(is_regular_semisimple(*g, x));
}

TEST(Escape, AbcdZero) {
  const auto g = sl2(7);
  const auto r = escape(standard_set(g), VarietyPredicate::abcd_zero(), 6);
  ASSERT_TRUE(r.found);
  EXPECT_LE(r.k, 4);
  const Mat2 m = g->mat(r.witness);
  EXPECT_TRUE(m.a && m.b && m.c && m.d);
}

TEST(Escape, EmptyVarietyAndFailureValue) {
  const auto g = sl2(5);
  const auto s = standard_set(g);
  const auto r = escape(s, VarietyPredicate::nothing(), 3);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.witness, g->identity());

  // ad - bc - 1 vanishes on all of SL2, so nothing escapes.
  std::vector<VarietyPredicate::Monomial> det{{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}, {-1, {0, 0, 0, 0}}};
  const auto none = escape(s, VarietyPredicate::polynomial(det), 4);
  EXPECT_FALSE(none.found);
  EXPECT_EQ(none.k_max, 4);

  EXPECT_THROW(escape(set_of(g, {g->pack(Mat2{1, 1, 0, 1})}), VarietyPredicate::nothing(), 3), PreconditionError);
}

TEST(Escape, PolynomialParser) {
  const auto w = parse_polynomial_predicate("# a*d - b*c - 1\n1 1 0 0 1\n-1 0 1 1 0\n-1 0 0 0 0\n");
  const auto g = sl2(5);
  for (Key x : ElementSet::whole(g)) EXPECT_TRUE(w.contains(*g, x));
  EXPECT_THROW(parse_polynomial_predicate("1 2 3\n"), UsageError);
}

TEST(Slices, WholeGroupCounts) {
  for (std::uint32_t p : {5u, 7u}) {
    const auto g = sl2(p);
    const auto prof = slice_profile(ElementSet::whole(g));
    const PrimeField f(p);
    std::uint64_t total = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
      total += prof.counts[t];
      const FieldElem disc = f.elem(t) * f.elem(t) - f.elem(4);
      if (disc.is_zero()) {
        EXPECT_EQ(prof.counts[t], std::uint64_t{p} * p);
      } else if (is_square(disc)) {
        EXPECT_EQ(prof.counts[t], std::uint64_t{p} * (p + 1)) << p << " t=" << t;
      } else {
        EXPECT_EQ(prof.counts[t], std::uint64_t{p} * (p - 1)) << p << " t=" << t;
      }
    }
    EXPECT_EQ(total, g->order());
  }
  EXPECT_EQ(slice_profile(ElementSet::whole(sl2(5))).counts[0], 30u);
}

TEST(Slices, IdentityOnly) {
  const auto g = sl2(7);
  const auto prof = slice_profile(ElementSet::identity_set(g));
  for (std::uint32_t t = 0; t < 7; ++t) EXPECT_EQ(prof.counts[t], t == 2 ? 1u : 0u);
  EXPECT_EQ(prof.max_regular, 0u);
  EXPECT_EQ(prof.exponent, 0.0);
}

TEST(Slices, SumsToSetSize) {
  Rng rng(41);
  const auto g = sl2(11);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_subset(g, 1 + rng.uniform(300), rng);
    const auto prof = slice_profile(a, g->pack(Mat2{2, 0, 0, 6}));
    std::uint64_t total = 0;
    for (auto c : prof.counts) total += c;
    EXPECT_EQ(total, a.size());
    EXPECT_EQ(prof.torus_count, a.count_if(centralizer_predicate(g, g->pack(Mat2{2, 0, 0, 6}))));
  }
  EXPECT_THROW(slice_profile(ElementSet::whole(g), g->identity()), PreconditionError);
}

// ---- dichotomy and Pyber-Spiga -------------------------------------------

TEST(Dichotomy, Examples) {
  const auto g = sl2(5);
  EXPECT_EQ(dichotomy_probe(ElementSet::whole(g), 5).saturated_at, 1);
  const auto rep = dichotomy_probe(standard_set(g), 10);
  ASSERT_TRUE(rep.saturated_at.has_value());
  EXPECT_LE(*rep.saturated_at, 8);
  EXPECT_EQ(rep.sizes.back(), 120u);
  EXPECT_TRUE(rep.flagged_steps.empty());
  EXPECT_DOUBLE_EQ(rep.tripling, 43.0 / 5.0);

  const auto a13 = affine(13);
  const auto a = symmetrize(set_of(a13, {a13->pack(AffineElem{2, 0}), a13->pack(AffineElem{1, 1})}));
  const auto r13 = dichotomy_probe(a, 40);
  ASSERT_TRUE(r13.saturated_at.has_value());
  for (int k = 1; k < *r13.saturated_at; ++k) EXPECT_LT(r13.sizes[k - 1], r13.sizes[k]);
  EXPECT_THROW(dichotomy_probe(set_of(g, {g->identity()}), 3), PreconditionError);
}

TEST(Dichotomy, SeriesInvariants) {
  Rng rng(51);
  const auto g = sl2(7);
  for (int i = 0; i < 5; ++i) {
    const auto a = random_symmetric_generating(g, 4, rng, true);
    const auto rep = dichotomy_probe(a, 12);
    for (std::size_t k = 1; k < rep.sizes.size(); ++k) {
      EXPECT_LE(rep.sizes[k - 1], rep.sizes[k]);
      EXPECT_LE(rep.sizes[k], g->order());
    }
  }
}

TEST(PyberSpiga, Examples) {
  const auto r = pyber_spiga_check(6, 3);
  EXPECT_EQ(r.set_size, 8u);
  EXPECT_EQ(r.bound, 102u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(pyber_spiga_check(5, 2).bound, 30u);

  // brute-force cube on explicit permutations
  const auto sym = Group::sym(6);
  const auto a = pyber_spiga_set(sym, 3);
  std::set<std::vector<int>> perms;
  for (Key k : a) {
    const auto p = sym->perm(k);
    perms.insert(std::vector<int>(p.images.begin(), p.images.end()));
  }
  const auto compose = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[y[i]];
    return z;
  };
  std::set<std::vector<int>> cube;
  for (const auto& x : perms)
    for (const auto& y : perms)
      for (const auto& z : perms) cube.insert(compose(compose(x, y), z));
  EXPECT_EQ(r.cube_size, cube.size());
  EXPECT_LE(r.cube_size, r.bound);
}

// ---- suites at reduced trial counts ----------------------------------------

TEST(Suites, AllPassOnSmallRuns) {
  for (const auto& name : suite_names()) {
    SuiteOptions opts;
    opts.seed = 7;
    opts.trials = std::min<std::size_t>(default_trials(name), 20);
    const auto r = run_suite(name, opts);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.passes + r.skipped + r.failure_count, r.trials) << name;
  }
  EXPECT_THROW(run_suite("nope", {}), UsageError);
}
