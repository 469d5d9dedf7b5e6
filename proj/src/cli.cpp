#include "growthlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "growthlab/errors.hpp"
#include "growthlab/report_io.hpp"
#include "growthlab/suites.hpp"

namespace growthlab {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Config {
  std::string command;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "json";
  std::optional<std::uint64_t> budget;

  std::string group = "sl2";
  std::uint32_t p = 5;
  int ext = 1;
  int n = 5;
  std::string gens = "standard";

  int max_k = 10;
  bool dense = false, iterative = false;
  double tol = 1e-9;
  std::size_t max_iters = 200'000;
  double C = 2;
  std::string suite;
  std::size_t trials = 0;
  std::string primes;
  std::string predicate = "regular-ss";
  int kmax = 4;
  bool torus = false;
  std::uint32_t lambda = 2;
  std::uint32_t alpha = 1;
  std::optional<std::uint64_t> J;
  std::string gens_file;
  std::string emit_edges;
  std::uint64_t vertex_cap = kDefaultVertexCap;

  WorkLimits limits() const {
    WorkLimits l;
    if (budget) l.budget = *budget;
    l.threads = threads;
    return l;
  }
};

// ---- input parsing ------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty lines with '#' comments removed, split on commas.
std::vector<std::vector<std::int64_t>> parse_rows(const std::string& text, const std::string& source) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::int64_t> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::istringstream cs(cell);
      std::int64_t v;
      std::string rest;
      if (!(cs >> v) || (cs >> rest)) {
        throw UsageError(source + " line " + std::to_string(lineno) + ": '" + cell + "' is not an integer");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::istringstream parts(text);
  std::string part;
  const auto to_u32 = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used != s.size() || v > kMaxFieldOrder) throw UsageError("");
      return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw UsageError("bad prime list entry '" + s + "'");
    }
  };
  while (std::getline(parts, part, ',')) {
    if (part.empty()) continue;
    if (const auto dots = part.find(".."); dots != std::string::npos) {
      const std::uint32_t lo = to_u32(part.substr(0, dots)), hi = to_u32(part.substr(dots + 2));
      for (std::uint32_t v = lo; v <= hi; ++v) {
        if (is_prime(v)) out.push_back(v);
      }
    } else {
      const std::uint32_t v = to_u32(part);
      if (!is_prime(v)) throw UsageError(part + " is not prime");
      out.push_back(v);
    }
  }
  if (out.empty()) throw UsageError("prime list '" + text + "' is empty");
  return out;
}

GroupPtr make_group(const Config& cfg) {
  const GroupKind kind = parse_group_kind(cfg.group);
  if (kind == GroupKind::Sym) return Group::sym(cfg.n);
  if (!is_prime(cfg.p)) throw UsageError("--p " + std::to_string(cfg.p) + " is not prime");
  if (cfg.ext < 1 || cfg.ext > kMaxExtensionDegree) throw UsageError("--ext must lie in 1..4");
  std::uint64_t q = 1;
  for (int i = 0; i < cfg.ext; ++i) q *= cfg.p;
  if (q >= kMaxFieldOrder) throw UsageError("field order p^ext must be below 65536");
  const GaloisField field = GaloisField::of_order(static_cast<std::uint32_t>(q));
  switch (kind) {
    case GroupKind::SL2: return Group::sl2(field);
    case GroupKind::PSL2: return Group::psl2(field);
    default: return Group::affine(field);
  }
}

ElementSet parse_set_file(const GroupPtr& g, const std::string& path) {
  std::vector<Key> keys;
  for (const auto& row : parse_rows(read_file(path), path)) {
    if (row.size() != g->entry_count()) {
      throw UsageError(path + ": expected " + std::to_string(g->entry_count()) + " entries per element");
    }
    keys.push_back(g->from_entries(row));
  }
  if (keys.empty()) throw UsageError(path + " lists no elements");
  return ElementSet(g, std::move(keys));
}

struct Generators {
  ElementSet set;
  std::string source;
};

// "standard" is symmetrized; file and random sets are taken verbatim, and
// graph commands symmetrize them when they are not already symmetric.
Generators load_gens(const GroupPtr& g, const Config& cfg) {
  const std::string& spec = cfg.gens;
  if (spec == "standard") return {symmetrize(ElementSet(g, standard_generators(*g))), "standard"};
  if (spec.rfind("file:", 0) == 0) return {parse_set_file(g, spec.substr(5)), spec};
  if (spec.rfind("random:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(spec.substr(7));
    } catch (const std::exception&) {
      throw UsageError("--gens random:N needs a count");
    }
    if (n == 0 || n > g->order()) throw UsageError("--gens random:N needs 0 < N <= |G|");
    Rng rng = Rng(cfg.seed).split(0);
    return {random_symmetric(g, n, rng, true), spec};
  }
  throw UsageError("--gens must be standard, file:PATH or random:N");
}

ElementSet graph_gens(const ElementSet& a) { return a.is_symmetric() ? a : symmetrize(a); }

// ---- output -------------------------------------------------------------

Json header(const Config& cfg) {
  Json h;
  h["tool"] = "growthlab";
  h["version"] = kVersion;
  h["command"] = cfg.command;
  h["rng"] = std::string(Rng::kAlgorithm);
  h["seed"] = cfg.seed;
  h["work_budget"] = cfg.limits().budget;
  return h;
}

Json group_json(const Group& g) { return Json{{"name", g.name()}, {"order", g.order()}}; }

void emit(const Config& cfg, std::ostream& out, Json doc, const Table& table) {
  if (cfg.format == "csv") {
    write_csv(out, table);
  } else {
    Json full;
    full["header"] = header(cfg);
    for (auto& [k, v] : doc.items()) full[k] = std::move(v);
    out << full.dump(2) << '\n';
  }
}

void write_edges(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  body(file);
}

// ---- commands -----------------------------------------------------------

int cmd_diameter(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  const Generators gens = load_gens(g, cfg);
  const CayleyGraph graph(graph_gens(gens.set));
  BfsOptions opt;
  opt.vertex_cap = cfg.vertex_cap;
  opt.threads = cfg.threads;
  const DiameterReport rep = bfs_diameter(graph, opt);
  if (!cfg.emit_edges.empty()) write_edges(cfg.emit_edges, [&](std::ostream& f) { emit_edges(graph, f); });
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(graph.gens());
  doc["generator_source"] = gens.source;
  doc["result"] = to_json(rep);
  emit(cfg, out, std::move(doc), to_table(rep));
  return rep.counting_bound_holds ? kExitOk : kExitVerificationFailure;
}

int cmd_growth(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  const Generators gens = load_gens(g, cfg);
  const GrowthReport rep = dichotomy_probe(gens.set, cfg.max_k, cfg.limits());
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(gens.set);
  doc["generator_source"] = gens.source;
  doc["result"] = to_json(rep);
  emit(cfg, out, std::move(doc), to_table(rep));
  return kExitOk;
}

int cmd_spectrum(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  const Generators gens = load_gens(g, cfg);
  const ElementSet a = graph_gens(gens.set);
  const WalkOperator op = WalkOperator::cayley(CayleyGraph(a), WalkMode::Adjacency, cfg.threads);
  const bool dense = cfg.dense || (!cfg.iterative && g->order() <= kDenseSpectrumCap);
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(a);
  doc["generator_source"] = gens.source;
  int code = kExitOk;
  if (dense) {
    const SpectrumReport rep = dense_spectrum(op);
    doc["result"] = to_json(rep);
    const TraceIdentity tr = check_trace_identity(rep, a.size(), g->order());
    Json checks;
    checks["trace_identity"] = to_json(tr);
    if (!tr.holds) code = kExitVerificationFailure;
    if (g->kind() == GroupKind::SL2 && generates(a, cfg.limits())) {
      const MultiplicityVerdict m = verify_multiplicity_bound(rep, g->q());
      const HimultVerdict h = verify_himult(rep, g->q(), a.size(), g->order());
      checks["multiplicity"] = to_json(m);
      checks["eigenvalue_bound"] = to_json(h);
      if (!m.holds || !h.holds) code = kExitVerificationFailure;
    }
    doc["checks"] = std::move(checks);
    emit(cfg, out, std::move(doc), to_table(rep));
  } else {
    const SpectrumReport rep = iterative_spectrum(op, cfg.tol, cfg.max_iters, cfg.seed);
    doc["result"] = to_json(rep);
    emit(cfg, out, std::move(doc), to_table(rep));
  }
  return code;
}

int cmd_mixing(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  const Generators gens = load_gens(g, cfg);
  const ElementSet a = graph_gens(gens.set);
  if (!generates(a, cfg.limits())) throw PreconditionError("A does not generate " + g->name());
  const WalkOperator op = WalkOperator::cayley(CayleyGraph(a), WalkMode::Lazy, cfg.threads);
  double lazy_gap = 0;
  Json gap_source;
  if (!cfg.iterative && g->order() <= kDenseSpectrumCap) {
    const DenseEigensystem sys = dense_eigensystem(op);
    lazy_gap = 1 - sys.values[1];
    gap_source = Json{{"method", "dense"}};
  } else {
    const IterativeEstimate est = second_eigenvalue_iterative(op, cfg.tol, cfg.max_iters, cfg.seed);
    lazy_gap = 1 - est.nu1_lazy;
    gap_source = to_json(est);
    gap_source["method"] = "power_deflation";
  }
  const MixingReport rep = mixing_profile(op, cfg.C, lazy_gap, g->index(g->identity()));
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(a);
  doc["generator_source"] = gens.source;
  doc["gap_estimate"] = std::move(gap_source);
  doc["result"] = to_json(rep);
  emit(cfg, out, std::move(doc), to_table(rep));
  return rep.l2_display_holds && rep.linf_display_holds ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.limits = cfg.limits();
  if (!cfg.primes.empty()) opt.primes = parse_primes(cfg.primes);
  const SuiteResult res = run_suite(cfg.suite, opt);
  Table t{{"suite", "trials", "passes", "skipped", "failures"},
          {{res.name, std::to_string(res.trials), std::to_string(res.passes), std::to_string(res.skipped),
            std::to_string(res.failure_count)}}};
  emit(cfg, out, Json{{"result", to_json(res)}}, t);
  return res.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_escape(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  const Generators gens = load_gens(g, cfg);
  ElementSet a = gens.set;
  if (!a.is_symmetric() || !a.contains_identity()) a = symmetrize(a);
  std::optional<VarietyPredicate> w;
  if (cfg.predicate == "regular-ss") {
    if (!g->is_matrix_group()) throw UsageError("regular-ss needs sl2 or psl2");
    w = VarietyPredicate::non_regular_semisimple(g->field());
  } else if (cfg.predicate == "abcd-nonzero") {
    w = VarietyPredicate::abcd_zero();
  } else if (cfg.predicate.rfind("file:", 0) == 0) {
    w = parse_polynomial_predicate(read_file(cfg.predicate.substr(5)));
  } else {
    throw UsageError("--predicate must be regular-ss, abcd-nonzero or file:PATH");
  }
  const EscapeResult res = escape(a, *w, cfg.kmax, cfg.limits());
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(a);
  doc["generator_source"] = gens.source;
  doc["variety"] = w->describe();
  doc["result"] = to_json(res, *g);
  emit(cfg, out, std::move(doc), to_table(res));
  return kExitOk;
}

int cmd_slice(const Config& cfg, std::ostream& out) {
  const GroupPtr g = make_group(cfg);
  if (!g->is_matrix_group()) throw UsageError("slice needs --group sl2 or psl2");
  const Generators gens = load_gens(g, cfg);
  std::optional<Key> center;
  if (cfg.torus) {
    // Least regular semisimple element of A, else of G.
    for (Key x : gens.set) {
      if (is_regular_semisimple(*g, x)) {
        center = x;
        break;
      }
    }
    for (std::uint64_t i = 0; !center && i < g->order(); ++i) {
      if (is_regular_semisimple(*g, g->at(i))) center = g->at(i);
    }
  }
  const SliceProfile rep = slice_profile(gens.set, center);
  Json doc;
  doc["group"] = group_json(*g);
  doc["generators"] = set_json(gens.set);
  doc["generator_source"] = gens.source;
  doc["result"] = to_json(rep, *g);
  emit(cfg, out, std::move(doc), to_table(rep));
  return kExitOk;
}

int cmd_schreier(const Config& cfg, std::ostream& out) {
  BfsOptions opt;
  opt.vertex_cap = cfg.vertex_cap;
  opt.threads = cfg.threads;
  const GammaReport rep = gamma_p_lambda_report(cfg.p, cfg.lambda, opt);
  if (!cfg.emit_edges.empty()) {
    const SchreierGraph graph = gamma_p_lambda(cfg.p, cfg.lambda);
    write_edges(cfg.emit_edges, [&](std::ostream& f) { emit_edges(graph, f); });
  }
  emit(cfg, out, Json{{"result", to_json(rep)}}, to_table(rep.diameter));
  return rep.diameter.counting_bound_holds ? kExitOk : kExitVerificationFailure;
}

int cmd_scan(const Config& cfg, std::ostream& out) {
  if (cfg.gens_file.empty()) throw UsageError("scan needs --gens-file");
  std::vector<IntMatrix> gens;
  for (const auto& row : parse_rows(read_file(cfg.gens_file), cfg.gens_file)) {
    if (row.size() != 4) throw UsageError(cfg.gens_file + ": expected 4 integers a,b,c,d per line");
    gens.push_back({row[0], row[1], row[2], row[3]});
  }
  const std::vector<ScanRow> rows = expander_scan(gens, parse_primes(cfg.primes.empty() ? "5..101" : cfg.primes), cfg.C,
                                                  cfg.limits());
  Json list = Json::array();
  std::optional<double> min_gap;
  for (const auto& r : rows) {
    list.push_back(to_json(r));
    if (r.generated) min_gap = min_gap ? std::min(*min_gap, r.gap) : r.gap;
  }
  Json doc;
  doc["generators"] = cfg.gens_file;
  doc["rows"] = std::move(list);
  doc["min_gap"] = min_gap ? Json(*min_gap) : Json(nullptr);
  emit(cfg, out, std::move(doc), to_table(rows));
  return kExitOk;
}

int cmd_konyagin(const Config& cfg, std::ostream& out) {
  const KonyaginReport rep = konyagin_energy(cfg.p, cfg.lambda, cfg.alpha, cfg.J);
  emit(cfg, out, Json{{"result", to_json(rep)}}, to_table(rep));
  return kExitOk;
}

// ---- argument wiring ----------------------------------------------------

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--budget", cfg.budget, "work budget (key insertions per product)")->check(CLI::PositiveNumber);
}

void add_group(CLI::App* sub, Config& cfg, bool with_gens = true) {
  sub->add_option("--group", cfg.group, "sl2, psl2, affine or sym")
      ->check(CLI::IsMember({"sl2", "psl2", "affine", "sym"}))
      ->capture_default_str();
  sub->add_option("--p", cfg.p, "field characteristic")->capture_default_str();
  sub->add_option("--ext", cfg.ext, "extension degree k, field F_{p^k}")->capture_default_str();
  sub->add_option("--n", cfg.n, "degree of Sym(n)")->capture_default_str();
  if (with_gens) sub->add_option("--gens", cfg.gens, "standard, file:PATH or random:N")->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Growth, diameter and expansion experiments in SL2, PSL2, affine and symmetric groups", "growthlab"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* diameter = app.add_subcommand("diameter", "BFS diameter of the Cayley graph");
  add_group(diameter, cfg);
  diameter->add_option("--emit-edges", cfg.emit_edges, "write the edge list to PATH");
  diameter->add_option("--vertex-cap", cfg.vertex_cap, "largest vertex count searched")->capture_default_str();

  auto* growth = app.add_subcommand("growth", "sizes of A^k and the growth dichotomy probe");
  add_group(growth, cfg);
  growth->add_option("--max-k", cfg.max_k, "largest power")->check(CLI::PositiveNumber)->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of the normalized adjacency operator");
  add_group(spectrum, cfg);
  auto* dense_flag = spectrum->add_flag("--dense", cfg.dense, "full dense spectrum");
  spectrum->add_flag("--iterative", cfg.iterative, "second eigenvalue by power iteration")->excludes(dense_flag);
  spectrum->add_option("--tol", cfg.tol, "iteration residual tolerance")->capture_default_str();
  spectrum->add_option("--max-iters", cfg.max_iters, "iteration limit")->capture_default_str();

  auto* mixing = app.add_subcommand("mixing", "lazy random walk distance to uniform");
  add_group(mixing, cfg);
  mixing->add_option("--C", cfg.C, "exponent C in the step count")->check(CLI::PositiveNumber)->capture_default_str();
  mixing->add_flag("--iterative", cfg.iterative, "estimate the gap by power iteration");
  mixing->add_option("--tol", cfg.tol, "iteration residual tolerance")->capture_default_str();
  mixing->add_option("--max-iters", cfg.max_iters, "iteration limit")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "randomized verification suite");
  verify->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", cfg.trials, "number of trials (default per suite)");
  verify->add_option("--primes", cfg.primes, "field sizes, e.g. 5,7 or 5..31");

  auto* esc = app.add_subcommand("escape", "least k with A^k outside a special set");
  add_group(esc, cfg);
  esc->add_option("--predicate", cfg.predicate, "regular-ss, abcd-nonzero or file:PATH")->capture_default_str();
  esc->add_option("--kmax", cfg.kmax, "largest power tried")->check(CLI::PositiveNumber)->capture_default_str();

  auto* slice = app.add_subcommand("slice", "distribution of A over trace slices");
  add_group(slice, cfg);
  slice->add_flag("--torus", cfg.torus, "also count A in the torus of a regular semisimple element");

  auto* schreier = app.add_subcommand("schreier", "diameter of the graph x -> x+-1, lambda^(+-1) x on F_p");
  schreier->add_option("--p", cfg.p, "prime")->required();
  schreier->add_option("--lambda", cfg.lambda, "multiplier")->required();
  schreier->add_option("--emit-edges", cfg.emit_edges, "write the edge list to PATH");
  schreier->add_option("--vertex-cap", cfg.vertex_cap, "largest vertex count searched")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "spectral gaps of integer generators reduced mod primes");
  scan->add_option("--gens-file", cfg.gens_file, "integer matrices a,b,c,d, one per line")->required();
  scan->add_option("--primes", cfg.primes, "primes, e.g. 5..101")->default_str("5..101");
  scan->add_option("--C", cfg.C, "exponent C in the step count")->check(CLI::PositiveNumber)->capture_default_str();

  auto* konyagin = app.add_subcommand("konyagin", "sum of squared distances of alpha lambda^j / p to Z");
  konyagin->add_option("--p", cfg.p, "prime")->required();
  konyagin->add_option("--lambda", cfg.lambda, "multiplier")->required();
  konyagin->add_option("--alpha", cfg.alpha, "starting residue")->capture_default_str();
  konyagin->add_option("--J", cfg.J, "last exponent (default floor(log p (log log p)^4))");

  for (auto* sub : {diameter, growth, spectrum, mixing, verify, esc, slice, schreier, scan, konyagin}) {
    add_common(sub, cfg);
    sub->failure_message(CLI::FailureMessage::help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    err << "growthlab: " << cfg.command << '\n';
    if (cfg.command == "diameter") return cmd_diameter(cfg, out);
    if (cfg.command == "growth") return cmd_growth(cfg, out);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.command == "mixing") return cmd_mixing(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "escape") return cmd_escape(cfg, out);
    if (cfg.command == "slice") return cmd_slice(cfg, out);
    if (cfg.command == "schreier") return cmd_schreier(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, out);
    if (cfg.command == "konyagin") return cmd_konyagin(cfg, out);
  } catch (const CapacityError& e) {
    err << "growthlab: capacity exceeded: " << e.what() << '\n';
    Table t{{"k", "size"}, {}};
    for (std::size_t i = 0; i < e.partial_sizes.size(); ++i) {
      t.rows.push_back({std::to_string(i + 1), std::to_string(e.partial_sizes[i])});
    }
    emit(cfg, out, Json{{"error", Json{{"kind", "capacity"}, {"message", e.what()}, {"partial_sizes", e.partial_sizes}}}},
         t);
    return kExitCapacity;
  } catch (const UsageError& e) {
    err << "growthlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "growthlab: precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    err << "growthlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "growthlab: internal error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

}  // namespace growthlab
