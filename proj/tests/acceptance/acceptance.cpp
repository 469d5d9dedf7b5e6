// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 when the failing criteria are exactly the expected ones.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "growthlab/element_set.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/graphs.hpp"
#include "growthlab/groups.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/random.hpp"
#include "growthlab/spectral.hpp"
#include "growthlab/suites.hpp"

using namespace growthlab;

namespace {

GroupPtr sl2(std::uint32_t q) { return Group::sl2(GaloisField::of_order(q)); }
GroupPtr affine(std::uint32_t q) { return Group::affine(GaloisField::of_order(q)); }

ElementSet standard_set(const GroupPtr& g) { return symmetrize(ElementSet(g, standard_generators(*g))); }

ElementSet lambda_set(const GroupPtr& g) {
  const ElementSet gens(g, standard_generators(*g));
  return gens.unite(gens.inverse());
}

struct Outcome {
  bool pass = false;
  std::string detail;
  double limit_seconds = 0;  // 0: no runtime bound
};

bool is_square_mod(std::uint32_t x, std::uint32_t p) {
  for (std::uint32_t y = 0; y < p; ++y) {
    if (y * y % p == x) return true;
  }
  return false;
}

Outcome affine_diameter() {
  std::ostringstream d;
  bool pass = true;
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    const auto g = affine(p);
    const auto without_e = bfs_diameter(CayleyGraph(lambda_set(g))).diameter;
    const auto with_e = bfs_diameter(CayleyGraph(standard_set(g))).diameter;
    const std::uint64_t want = (p - 1) / 2;
    pass = pass && without_e == want;
    d << " p=" << p << ":" << without_e << "(e:" << with_e << ",want " << want << ")";
  }
  return {pass, "diam" + d.str(), 1.0};
}

Outcome nikolov_pyber() {
  std::ostringstream d;
  bool pass = true;
  const std::pair<std::uint32_t, std::uint64_t> cases[] = {{11, 1189}, {9, 694}};
  for (auto [q, threshold] : cases) {
    const auto r = nikolov_pyber_check(q, 100, 20261014 + q);
    std::uint64_t min_size = ~std::uint64_t{0};
    for (auto s : r.set_sizes) min_size = std::min(min_size, s);
    const bool ok = r.threshold == threshold && !r.vacuous && r.trials == 100 && r.passes == 100 &&
                    min_size >= threshold;
    pass = pass && ok;
    d << " q=" << q << " threshold=" << r.threshold << " A^3=G " << r.passes << "/" << r.trials;
  }
  return {pass, d.str(), 120.0};
}

// Dense graphs for criteria 3 and 4, shared so criterion 4 covers every one.
struct DenseCase {
  std::string label;
  std::uint32_t q = 0;  // 0: not SL2, no multiplicity bound
  SpectrumReport spectrum;
  std::uint64_t set_size = 0, order = 0;
};
std::vector<DenseCase> dense_cases;

Outcome frobenius() {
  std::ostringstream d;
  bool pass = true;
  Rng rng(7);
  for (std::uint32_t q : {5u, 7u}) {
    const auto g = sl2(q);
    std::size_t worst = ~std::size_t{0}, required = 0;
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_symmetric_generating(g, 4 + 2 * trial, rng, false);
      auto spectrum = dense_spectrum(WalkOperator::cayley(CayleyGraph(a)), kClusterTolerance);
      const auto v = verify_multiplicity_bound(spectrum, q);
      pass = pass && v.holds;
      worst = std::min(worst, v.min_multiplicity);
      required = v.required;
      dense_cases.push_back({g->name() + " |A|=" + std::to_string(a.size()), q, std::move(spectrum), a.size(),
                             g->order()});
    }
    d << " q=" << q << " min multiplicity " << worst << " (need " << required << ")";
  }
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto g = sl2(p);
    const auto a = standard_set(g);
    dense_cases.push_back({g->name() + " standard", p, dense_spectrum(WalkOperator::cayley(CayleyGraph(a))),
                           a.size(), g->order()});
  }
  return {pass, d.str(), 60.0};
}

Outcome trace_and_bound() {
  bool pass = true;
  double worst_rel = 0, worst_margin = -1e300;
  for (const auto& c : dense_cases) {
    const auto t = check_trace_identity(c.spectrum, c.set_size, c.order);
    pass = pass && t.relative_error <= 1e-6;
    worst_rel = std::max(worst_rel, t.relative_error);
    if (c.q) {
      const auto h = verify_himult(c.spectrum, c.q, c.set_size, c.order);
      pass = pass && h.max_abs <= h.bound + 1e-9;
      worst_margin = std::max(worst_margin, h.max_abs - h.bound);
    }
  }
  std::ostringstream d;
  d << dense_cases.size() << " graphs, max relative trace error " << worst_rel << ", max |nu_j| - bound "
    << worst_margin;
  return {pass && !dense_cases.empty(), d.str()};
}

Outcome suites() {
  struct Item {
    std::string name;
    std::size_t trials;
  };
  const std::vector<Item> items = {{"ruzsa", 0},        {"chain", 0},          {"orbitstab", 0}, {"centralizer", 200},
                                   {"affine-growth", 200}, {"pivot", 200},    {"sumprod", 500}};
  std::ostringstream d;
  bool pass = true;
  for (const auto& it : items) {
    SuiteOptions opts;
    opts.trials = it.trials;
    opts.seed = 2026;
    const auto r = run_suite(it.name, opts);
    const bool ok = r.ok() && r.passes > 0 && r.passes + r.skipped == r.trials;
    pass = pass && ok;
    d << " " << it.name << " " << r.passes << "/" << r.trials;
    if (r.skipped) d << "(" << r.skipped << " skipped)";
    if (!ok) d << "!";
  }
  return {pass, d.str(), 300.0};
}

Outcome slices() {
  std::ostringstream d;
  bool pass = true;
  for (std::uint32_t p : {5u, 7u}) {
    const auto g = sl2(p);
    const auto prof = slice_profile(ElementSet::whole(g));
    std::uint64_t sum = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
      const std::uint32_t disc = (t * t + p * p - 4) % p;
      const std::uint64_t want = disc == 0 ? std::uint64_t{p} * p
                                 : is_square_mod(disc, p) ? std::uint64_t{p} * (p + 1)
                                                          : std::uint64_t{p} * (p - 1);
      pass = pass && prof.counts.at(t) == want;
      sum += prof.counts.at(t);
    }
    pass = pass && sum == g->order();
    d << " p=" << p << " sum " << sum << "/" << g->order();
  }
  return {pass, d.str()};
}

Outcome pyber_spiga() {
  const auto r = pyber_spiga_check(6, 3);
  std::ostringstream d;
  d << "|A|=" << r.set_size << " |A^3|=" << r.cube_size << " bound " << r.bound;
  return {r.set_size == 8 && r.bound == 102 && r.cube_size <= 102 && r.holds, d.str(), 1.0};
}

Outcome escapes() {
  std::ostringstream d;
  bool pass = true;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto g = sl2(p);
    const auto a = standard_set(g);
    const auto rs = escape(a, VarietyPredicate::non_regular_semisimple(g->field()), 3);
    const auto ad = escape(a, VarietyPredicate::abcd_zero(), 4);
    bool ok = rs.found && rs.k <= 3 && is_regular_semisimple(*g, rs.witness) && ad.found && ad.k <= 4;
    if (ad.found) {
      const Mat2 m = g->mat(ad.witness);
      ok = ok && m.a && m.b && m.c && m.d;
    }
    pass = pass && ok;
    d << " p=" << p << " rs k=" << (rs.found ? std::to_string(rs.k) : "-")
      << " abcd k=" << (ad.found ? std::to_string(ad.k) : "-");
  }
  return {pass, d.str()};
}

Outcome mixing() {
  const auto g = sl2(17);
  const auto a = standard_set(g);
  const auto op = WalkOperator::cayley(CayleyGraph(a));
  const auto est = second_eigenvalue_iterative(op, 1e-9, 200'000, 1);
  const double gap = 1 - est.nu1_lazy;
  const auto r = mixing_profile(op, 2, gap, g->index(g->identity()));
  const double n = static_cast<double>(g->order());
  std::ostringstream d;
  d << "lazy gap " << gap << " k=" << r.steps << " l2=" << r.l2_dist.back() << " (<= " << 1 / (n * n)
    << ") linf=" << r.linf_dist.back() << " (<= " << 1 / n << ")";
  const bool pass = est.converged && r.l2_dist.back() <= 1 / (n * n) && r.linf_dist.back() <= 1 / n &&
                    r.l2_display_holds && r.linf_display_holds;
  return {pass, d.str(), 60.0};
}

Outcome cheeger() {
  const auto g = affine(5);
  const auto table = NeighborTable::from_cayley(CayleyGraph(standard_set(g)));
  const auto exp = vertex_edge_expansion_exact(table);
  const auto spec = dense_spectrum(WalkOperator(table));
  const auto c = cheeger_cross_check(exp.edge_h, spec.gap);
  std::ostringstream d;
  d << "|V|=" << table.n << " h=" << exp.edge_h << " gap=" << spec.gap;
  return {c.spectral_implies_edge && c.edge_implies_spectral && exp.edge_h >= spec.gap / 2 &&
              spec.gap >= exp.edge_h * exp.edge_h / 2,
          d.str()};
}

Outcome monitored() {
  const std::vector<std::uint32_t> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::size_t probes = 0, flags = 0;
  double min_delta = 1e300, max_slice = 0;
  Rng rng(31);
  for (std::uint32_t p : primes) {
    const auto g = sl2(p);
    std::vector<ElementSet> sets = {standard_set(g)};
    for (int i = 0; i < 3; ++i) sets.push_back(random_symmetric_generating(g, 4 + 2 * i, rng, true));
    for (const auto& a : sets) {
      const auto rep = dichotomy_probe(a, 40);
      ++probes;
      flags += rep.flagged_steps.size();
      if (rep.delta > 0) min_delta = std::min(min_delta, rep.delta);
      max_slice = std::max(max_slice, slice_profile(a).exponent);
    }
  }
  const auto rows = expander_scan({{1, 2, 0, 1}, {1, 0, 2, 1}}, {5, 7, 11, 13});
  double min_gap = 1e300;
  for (const auto& r : rows) min_gap = std::min(min_gap, r.gap);
  std::ostringstream d;
  d << probes << " dichotomy probes, " << flags << " flags; min growth delta " << min_delta
    << ", max slice exponent " << max_slice << ", min scan gap " << min_gap << " over " << rows.size() << " primes";
  return {flags == 0 && !rows.empty(), d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"affine diameter (p-1)/2", affine_diameter},
      {"Nikolov-Pyber A^3 = G", nikolov_pyber},
      {"Frobenius multiplicity", frobenius},
      {"trace identity and eigenvalue bound", trace_and_bound},
      {"inequality suites", suites},
      {"trace-slice counts", slices},
      {"Pyber-Spiga n=6 m=3", pyber_spiga},
      {"escape", escapes},
      {"mixing on SL2(F_17), C=2", mixing},
      {"Cheeger on Affine(F_5)", cheeger},
      {"monitored reports", monitored},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs << "s";
    if (o.limit_seconds > 0) {
      t << " (limit " << o.limit_seconds << "s)";
      pass = pass && secs < o.limit_seconds;
    }
    if (!pass) failed.insert(n);
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << criteria[i].first << " -- "
              << o.detail << " [" << t.str() << "]" << (!pass && expected.count(n) ? " (expected)" : "") << "\n"
              << std::flush;
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed\n";
  if (failed != expected) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
