#include "growthlab/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

constexpr std::size_t kMaxListedFailures = 10;

struct Context {
  const SuiteOptions& options;
  SuiteResult& result;
  Rng base;

  std::vector<std::uint32_t> primes(std::vector<std::uint32_t> fallback) const {
    return options.primes.empty() ? fallback : options.primes;
  }

  void record(bool passed, const std::string& label) {
    if (passed) {
      ++result.passes;
    } else {
      ++result.failure_count;
      if (result.failures.size() < kMaxListedFailures) result.failures.push_back(label);
    }
  }
};

std::string failing_checks(const Verdict& v) {
  std::ostringstream os;
  for (const auto& c : v.checks) {
    if (!c.holds) os << ' ' << c.name << ": " << format_double(c.lhs) << ' ' << c.relation << ' ' << format_double(c.rhs);
  }
  return os.str();
}

std::string set_label(const char* name, const ElementSet& a) {
  std::ostringstream os;
  os << name << '=' << '{';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.keys()[i];
  os << '}';
  return os.str();
}

std::uint32_t pick(const std::vector<std::uint32_t>& v, Rng& rng) { return v[rng.uniform(v.size())]; }

GroupPtr sl2(std::uint32_t q) { return Group::sl2(GaloisField::of_order(q)); }
GroupPtr affine(std::uint32_t q) { return Group::affine(GaloisField::of_order(q)); }

void record_verdict(Context& cx, const Verdict& v, const std::string& label) {
  cx.record(v.holds(), v.holds() ? label : label + " fails:" + failing_checks(v));
}

// ---- suites -------------------------------------------------------------

void suite_ruzsa(Context& cx) {
  const auto primes = cx.primes({7});
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const GroupPtr g = sl2(pick(primes, rng));
    const ElementSet a = random_subset(g, 1 + rng.uniform(20), rng);
    const ElementSet b = random_subset(g, 1 + rng.uniform(20), rng);
    const ElementSet c = random_subset(g, 1 + rng.uniform(20), rng);
    const Verdict v = verify_ruzsa_triangle(a, b, c, cx.options.limits);
    record_verdict(cx, v, g->name() + " trial " + std::to_string(t));
  }
}

void suite_chain(Context& cx) {
  const auto primes = cx.primes({5, 7, 11, 13});
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const GroupPtr g = sl2(pick(primes, rng));
    const std::size_t n = 1 + rng.uniform(6);
    ElementSet a(g);
    switch (rng.uniform(3)) {
      case 0: a = random_subset(g, n, rng); break;
      case 1: a = random_symmetric(g, n, rng, false); break;
      default: a = random_symmetric(g, n, rng, true); break;
    }
    const Verdict v = verify_tripling_chain(a, 5, cx.options.limits);
    record_verdict(cx, v, g->name() + " " + set_label("A", a));
  }
}

ElementSet unipotent_subgroup(const GroupPtr& g) {
  std::vector<Key> keys;
  for (std::uint32_t x = 0; x < g->q(); ++x) keys.push_back(g->pack(AffineElem{1, x}));
  return ElementSet(g, std::move(keys));
}

// Stabilizer of the point c: {(r, c - r c)}.
ElementSet point_stabilizer(const GroupPtr& g, std::uint32_t c) {
  const GaloisField& f = g->field();
  std::vector<Key> keys;
  for (std::uint32_t r = 1; r < g->q(); ++r) keys.push_back(g->pack(AffineElem{r, f.sub(c, f.mul(r, c))}));
  return ElementSet(g, std::move(keys));
}

void suite_orbitstab(Context& cx) {
  const auto primes = cx.primes({5, 7, 11, 13});
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const std::uint32_t p = pick(primes, rng);
    if (t % 2 == 0) {
      const GroupPtr g = sl2(p);
      const ElementSet a = random_symmetric(g, 2 + rng.uniform(12), rng, rng.uniform(2) == 0);
      const ElementSet b = random_subset(g, 1 + rng.uniform(12), rng);
      Key x = random_element(*g, rng);
      if (rng.uniform(2) == 0) {
        while (!is_regular_semisimple(*g, x)) x = random_element(*g, rng);
      }
      const Verdict v = verify_orbit_stabilizer_conjugation(a, b, x, cx.options.limits);
      record_verdict(cx, v, g->name() + " conjugation x=" + std::to_string(x) + " " + set_label("A", a));
    } else {
      const GroupPtr g = affine(p);
      const ElementSet h = rng.uniform(2) == 0 ? unipotent_subgroup(g)
                                               : point_stabilizer(g, static_cast<std::uint32_t>(rng.uniform(p)));
      const ElementSet a = rng.uniform(4) == 0 ? random_subset(g, 1 + rng.uniform(10), rng)
                                               : random_symmetric(g, 2 + rng.uniform(10), rng, rng.uniform(2) == 0);
      const ElementSet b = random_subset(g, 1 + rng.uniform(10), rng);
      const int k = 1 + static_cast<int>(rng.uniform(3));
      const Verdict v = verify_orbit_stabilizer_cosets(a, b, h, k, cx.options.limits);
      record_verdict(cx, v, g->name() + " cosets k=" + std::to_string(k) + " " + set_label("A", a));
    }
  }
}

void suite_centralizer(Context& cx) {
  const auto primes = cx.primes({7});
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const GroupPtr g = sl2(pick(primes, rng));
    const ElementSet a = random_symmetric(g, 2 + rng.uniform(15), rng, rng.uniform(2) == 0);
    const int l = 1 + static_cast<int>(rng.uniform(3));
    const ElementSet al = power(a, l, cx.options.limits);
    const Key x = al.keys()[rng.uniform(al.size())];
    const Verdict v = centralizer_lower_bound(a, x, l, cx.options.limits);
    record_verdict(cx, v, g->name() + " l=" + std::to_string(l) + " g=" + std::to_string(x) + " " + set_label("A", a));
  }
}

void suite_affine_growth(Context& cx) {
  const auto primes = cx.primes({11, 13});
  std::size_t torus_skips = 0, u_skips = 0;
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const std::uint32_t p = pick(primes, rng);
    const GroupPtr g = affine(p);
    KeyAccumulator acc(g);
    acc.insert(g->identity());
    const auto add = [&](Key x) {
      acc.insert(x);
      acc.insert(g->inv(x));
    };
    const std::size_t n = 1 + rng.uniform(8);
    const std::uint64_t mode = rng.uniform(4);
    const ElementSet u = unipotent_subgroup(g);
    const ElementSet tor = point_stabilizer(g, static_cast<std::uint32_t>(rng.uniform(p)));
    for (std::size_t i = 0; i < n; ++i) {
      switch (mode) {
        case 0: add(random_element(*g, rng)); break;
        case 1: add(u.keys()[rng.uniform(u.size())]); break;
        case 2: add(tor.keys()[rng.uniform(tor.size())]); break;
        default: add(i == 0 ? random_element(*g, rng) : u.keys()[rng.uniform(u.size())]); break;
      }
    }
    const ElementSet a = acc.to_set();
    const Verdict v = verify_affine_growth(a, cx.options.limits);
    for (const auto& note : v.notes) {
      torus_skips += note.find("torus") != std::string::npos;
      u_skips += note.find("lies in U") != std::string::npos;
    }
    record_verdict(cx, v, g->name() + " " + set_label("A", a));
  }
  cx.result.details["proposition_skipped_torus"] = torus_skips;
  cx.result.details["lemma_skipped_unipotent"] = u_skips;
}

void suite_pivot(Context& cx) {
  const auto primes = cx.primes({11, 13, 17, 19, 23});
  std::map<std::string, std::size_t> cases;
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const std::uint32_t p = pick(primes, rng);
    const GroupPtr g = affine(p);
    const ElementSet u = unipotent_subgroup(g);
    KeyAccumulator au(g);
    au.insert(g->identity());
    const std::size_t nu = 1 + rng.uniform(p / 3);
    while (au.size() < 2 * nu + 1 && au.size() < p) {
      const Key x = u.keys()[1 + rng.uniform(p - 1)];
      au.insert(x);
      au.insert(g->inv(x));
    }
    const ElementSet tor = point_stabilizer(g, static_cast<std::uint32_t>(rng.uniform(p)));
    KeyAccumulator at(g);
    at.insert(g->identity());
    const std::size_t nt = rng.uniform(p / 2);
    for (std::size_t i = 0; i < nt; ++i) at.insert(tor.keys()[rng.uniform(tor.size())]);
    const PivotReport rep = affine_pivot_product(au.to_set(), at.to_set(), cx.options.limits);
    ++cases[to_string(rep.case_label)];
    cx.record(rep.holds, g->name() + " |A_u|=" + std::to_string(au.size()) + " |A_t|=" + std::to_string(at.size()) +
                             " product " + std::to_string(rep.product_size) + " < " + std::to_string(rep.bound));
  }
  Json c = Json::object();
  for (const auto& [k, v] : cases) c[k] = v;
  cx.result.details["cases"] = std::move(c);
}

void suite_sumprod(Context& cx) {
  const auto primes = cx.primes({5, 7, 11, 13, 17, 19, 23, 29, 31});
  for (std::size_t t = 0; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const std::uint32_t p = pick(primes, rng);
    std::vector<std::uint32_t> x{0}, y{1};
    const std::size_t nx = 1 + rng.uniform(p / 2), ny = rng.uniform(p / 2 + 1);
    for (std::size_t i = 0; i < nx; ++i) {
      const auto v = static_cast<std::uint32_t>(1 + rng.uniform(p - 1));
      x.push_back(v);
      x.push_back(p - v);
    }
    for (std::size_t i = 0; i < ny; ++i) y.push_back(static_cast<std::uint32_t>(1 + rng.uniform(p - 1)));
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    const SumProductReport rep = sum_product_check(p, x, y);
    record_verdict(cx, rep.verdict,
                   "p=" + std::to_string(p) + " |X|=" + std::to_string(x.size()) + " |Y|=" + std::to_string(y.size()));
  }
}

void suite_nikolov_pyber(Context& cx) {
  const auto qs = cx.primes({9, 11});
  Json reports = Json::array();
  std::size_t total = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const NikolovPyberReport rep = nikolov_pyber_check(qs[i], cx.result.trials, cx.base.split(i).next(), cx.options.limits);
    if (rep.vacuous) {
      cx.result.notes.push_back("q=" + std::to_string(qs[i]) + " vacuous: threshold " + std::to_string(rep.threshold) +
                                " exceeds |G| = " + std::to_string(rep.group_order));
      cx.result.skipped += rep.trials;
    } else {
      for (std::size_t t = 0; t < rep.trials; ++t) {
        cx.record(rep.cube_sizes[t] == rep.group_order,
                  "q=" + std::to_string(rep.q) + " trial " + std::to_string(t) + ": |A|=" +
                      std::to_string(rep.set_sizes[t]) + " |A^3|=" + std::to_string(rep.cube_sizes[t]));
      }
    }
    total += rep.trials;
    Json j = to_json(rep);
    j.erase("set_sizes");
    j.erase("cube_sizes");
    reports.push_back(std::move(j));
  }
  cx.result.trials = total;
  cx.result.details["groups"] = std::move(reports);
}

// Dense-spectrum suites over random symmetric generating sets of SL2(F_q).
template <typename Check>
void spectral_suite(Context& cx, Check check) {
  const auto qs = cx.primes({5, 7});
  std::size_t total = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const GroupPtr g = sl2(qs[i]);
    for (std::size_t t = 0; t < cx.result.trials; ++t) {
      Rng rng = cx.base.split(i * 1'000'003 + t);
      const ElementSet a =
          random_symmetric_generating(g, 4 + rng.uniform(9), rng, rng.uniform(2) == 0, cx.options.limits);
      const WalkOperator op = WalkOperator::cayley(CayleyGraph(a), WalkMode::Adjacency, cx.options.limits.threads);
      const SpectrumReport spec = dense_spectrum(op);
      check(qs[i], *g, a, spec, g->name() + " " + set_label("A", a));
      ++total;
    }
  }
  cx.result.trials = total;
}

void suite_frobenius(Context& cx) {
  std::size_t min_seen = ~std::size_t{0};
  spectral_suite(cx, [&](std::uint32_t q, const Group&, const ElementSet&, const SpectrumReport& spec,
                         const std::string& label) {
    const MultiplicityVerdict v = verify_multiplicity_bound(spec, q);
    min_seen = std::min(min_seen, v.min_multiplicity);
    cx.record(v.holds, label + ": multiplicity " + std::to_string(v.min_multiplicity) + " < " +
                           std::to_string(v.required));
  });
  cx.result.details["min_multiplicity_seen"] = min_seen;
}

void suite_himult(Context& cx) {
  double worst_ratio = 0, worst_trace = 0;
  spectral_suite(cx, [&](std::uint32_t q, const Group& g, const ElementSet& a, const SpectrumReport& spec,
                         const std::string& label) {
    const HimultVerdict h = verify_himult(spec, q, a.size(), g.order());
    const TraceIdentity tr = check_trace_identity(spec, a.size(), g.order());
    worst_ratio = std::max(worst_ratio, h.max_abs / h.bound);
    worst_trace = std::max(worst_trace, tr.relative_error);
    cx.record(h.holds && tr.holds, label + ": max|nu|=" + format_double(h.max_abs) + " bound " +
                                       format_double(h.bound) + " trace error " + format_double(tr.relative_error));
  });
  cx.result.details["max_ratio_to_bound"] = worst_ratio;
  cx.result.details["max_trace_relative_error"] = worst_trace;
}

void suite_pyber_spiga(Context& cx) {
  const std::vector<std::pair<int, int>> cases = {{6, 3}, {5, 2}, {7, 3}, {8, 4}, {6, 5}, {7, 2}};
  Json reports = Json::array();
  for (const auto& [n, m] : cases) {
    const PyberSpigaReport rep = pyber_spiga_check(n, m, cx.options.limits);
    cx.record(rep.holds, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": |A^3|=" +
                             std::to_string(rep.cube_size) + " > " + std::to_string(rep.bound));
    reports.push_back(to_json(rep));
  }
  cx.result.trials = cases.size();
  cx.result.details["cases"] = std::move(reports);
}

void suite_nonexpansion(Context& cx) {
  struct Case {
    std::uint32_t p;
    std::vector<std::uint32_t> lambdas;
    double epsilon;
  };
  std::vector<Case> cases = {{10007, {2}, 0.5}, {1009, {2}, 1.0}, {10007, {3}, 0.5},
                             {101, {1}, 0.5},   {10007, {2, 3}, 1.0}, {31, {2}, 100.0}};
  const std::vector<std::uint32_t> pool = {1009, 2003, 4001, 8009, 10007};
  for (std::size_t t = cases.size(); t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    cases.push_back({pick(pool, rng), {static_cast<std::uint32_t>(2 + rng.uniform(4))}, rng.uniform(2) ? 0.5 : 1.0});
  }
  cases.resize(std::max<std::size_t>(1, std::min(cases.size(), cx.result.trials)));
  Json rows = Json::array();
  for (const auto& c : cases) {
    const NonexpansionWitness w = nonexpansion_witness(c.p, c.lambdas, c.epsilon);
    Json j = to_json(w);
    j["p"] = c.p;
    j["lambdas"] = c.lambdas;
    j["epsilon"] = c.epsilon;
    rows.push_back(std::move(j));
    if (!w.found) {
      ++cx.result.skipped;
      cx.result.notes.push_back("p=" + std::to_string(c.p) + ": no construction found" +
                                (w.note.empty() ? "" : " (" + w.note + ")"));
      continue;
    }
    // Recount independently of the witness search.
    std::vector<std::uint32_t> lam;
    for (auto l : c.lambdas) lam.push_back(l % c.p);
    const double ratio = static_cast<double>(expansion_union_size(w.set, c.p, lam)) / static_cast<double>(w.set.size());
    cx.record(ratio <= 1 + c.epsilon && 2 * w.set.size() <= c.p,
              "p=" + std::to_string(c.p) + ": ratio " + format_double(ratio));
  }
  cx.result.trials = cases.size();
  cx.result.details["cases"] = std::move(rows);
}

void suite_cheeger(Context& cx) {
  struct Named {
    std::string name;
    NeighborTable table;
  };
  std::vector<Named> graphs;
  const auto cayley = [](const ElementSet& a) { return NeighborTable::from_cayley(CayleyGraph(a)); };
  const GroupPtr aff5 = affine(5);
  const std::vector<Key> std5 = standard_generators(*aff5);
  const ElementSet a5 = ElementSet(aff5, std5).unite(ElementSet(aff5, std5).inverse());
  graphs.push_back({"Affine(F_5) A_lambda u A_lambda^-1", cayley(a5)});
  graphs.push_back({"Affine(F_5) symmetrized with e", cayley(symmetrize(a5))});
  const GroupPtr sl3 = sl2(3);
  graphs.push_back({"SL2(F_3) standard", cayley(symmetrize(ElementSet(sl3, standard_generators(*sl3))))});
  const GroupPtr s4 = Group::sym(4);
  graphs.push_back({"Sym(4) standard", cayley(symmetrize(ElementSet(s4, standard_generators(*s4))))});
  graphs.push_back({"cycle C_20", NeighborTable::from_schreier(cycle_graph(20))});
  graphs.push_back({"complete K_6", NeighborTable::complete(6)});
  const std::size_t fixed = graphs.size();
  for (std::size_t t = fixed; t < cx.result.trials; ++t) {
    Rng rng = cx.base.split(t);
    const ElementSet a = random_symmetric_generating(aff5, 3 + rng.uniform(6), rng, rng.uniform(2) == 0, cx.options.limits);
    graphs.push_back({"Affine(F_5) random " + set_label("A", a), cayley(a)});
  }
  Json rows = Json::array();
  for (const auto& gph : graphs) {
    const ExpansionReport ex = vertex_edge_expansion_exact(gph.table);
    const SpectrumReport spec = dense_spectrum(WalkOperator(gph.table));
    const CheegerCheck c = cheeger_cross_check(ex.edge_h, spec.gap);
    Json j = to_json(c);
    j["graph"] = gph.name;
    j["vertex_h"] = ex.vertex_h;
    rows.push_back(std::move(j));
    cx.record(c.spectral_implies_edge && c.edge_implies_spectral,
              gph.name + ": h=" + format_double(ex.edge_h) + " gap=" + format_double(spec.gap));
  }
  cx.result.trials = graphs.size();
  cx.result.details["graphs"] = std::move(rows);
}

using SuiteFn = std::function<void(Context&)>;

const std::vector<std::pair<std::string, std::pair<std::size_t, SuiteFn>>>& registry() {
  static const std::vector<std::pair<std::string, std::pair<std::size_t, SuiteFn>>> r = {
      {"ruzsa", {1000, suite_ruzsa}},
      {"chain", {500, suite_chain}},
      {"orbitstab", {500, suite_orbitstab}},
      {"centralizer", {200, suite_centralizer}},
      {"pivot", {200, suite_pivot}},
      {"affine-growth", {200, suite_affine_growth}},
      {"sumprod", {500, suite_sumprod}},
      {"nikolov-pyber", {100, suite_nikolov_pyber}},
      {"frobenius", {5, suite_frobenius}},
      {"himult", {5, suite_himult}},
      {"pyber-spiga", {6, suite_pyber_spiga}},
      {"nonexpansion", {6, suite_nonexpansion}},
      {"cheeger", {10, suite_cheeger}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.first);
    return n;
  }();
  return names;
}

std::size_t default_trials(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.first == name) return e.second.first;
  }
  throw UsageError("unknown verification suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteResult result;
  result.name = name;
  result.trials = options.trials ? options.trials : default_trials(name);
  Context cx{options, result, Rng(options.seed)};
  for (const auto& e : registry()) {
    if (e.first == name) e.second.second(cx);
  }
  return result;
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["skipped"] = r.skipped;
  j["failures"] = r.failure_count;
  j["ok"] = r.ok();
  if (!r.failures.empty()) j["failing_instances"] = r.failures;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

// ---------------------------------------------------------------------------

ElementSet random_subset(const GroupPtr& group, std::size_t n, Rng& rng) {
  if (n > group->order()) throw UsageError("subset larger than the group");
  KeyAccumulator acc(group);
  while (acc.size() < n) acc.insert(random_element(*group, rng));
  return acc.to_set();
}

ElementSet random_symmetric(const GroupPtr& group, std::size_t n, Rng& rng, bool with_identity) {
  if (n > group->order()) throw UsageError("subset larger than the group");
  KeyAccumulator acc(group);
  if (with_identity) acc.insert(group->identity());
  while (acc.size() < n) {
    const Key x = random_element(*group, rng);
    acc.insert(x);
    acc.insert(group->inv(x));
  }
  return acc.to_set();
}

ElementSet random_symmetric_generating(const GroupPtr& group, std::size_t n, Rng& rng, bool with_identity,
                                       const WorkLimits& limits, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    ElementSet a = random_symmetric(group, n, rng, with_identity);
    if (generates(a, limits)) return a;
  }
  throw PreconditionError("no generating set of size " + std::to_string(n) + " found in " + group->name());
}

}  // namespace growthlab
