#include "growthlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "growthlab/errors.hpp"
#include "growthlab/random.hpp"

namespace growthlab {

std::string to_string(WalkMode m) { return m == WalkMode::Adjacency ? "adjacency" : "lazy"; }
std::string to_string(SpectrumMethod m) { return m == SpectrumMethod::Dense ? "dense" : "power_deflation"; }

WalkOperator::WalkOperator(NeighborTable table, WalkMode mode, int threads)
    : table_(std::move(table)), mode_(mode), threads_(std::max(1, threads)) {
  if (table_.n == 0 || table_.d == 0) throw UsageError("walk operator needs a non-empty regular graph");
}

WalkOperator WalkOperator::cayley(const CayleyGraph& graph, WalkMode mode, int threads) {
  return WalkOperator(NeighborTable::from_cayley(graph), mode, threads);
}

WalkOperator WalkOperator::with_mode(WalkMode mode) const { return WalkOperator(table_, mode, threads_); }

void WalkOperator::apply_rows(const double* f, double* out, std::size_t lo, std::size_t hi) const {
  const double w = 1.0 / table_.d;
  for (std::size_t v = lo; v < hi; ++v) {
    const std::uint32_t* row = table_.nbrs.data() + v * table_.d;
    double s = 0;
    for (std::uint32_t j = 0; j < table_.d; ++j) s += f[row[j]];
    s *= w;
    out[v] = mode_ == WalkMode::Lazy ? 0.5 * (s + f[v]) : s;
  }
}

void WalkOperator::apply(const double* f, double* out) const {
  const std::size_t n = table_.n;
  if (threads_ == 1 || n < 8192) {
    apply_rows(f, out, 0, n);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + threads_ - 1) / threads_;
  for (int t = 0; t < threads_; ++t) {
    const std::size_t lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
    workers.emplace_back([=, this] { apply_rows(f, out, lo, hi); });
  }
  for (auto& w : workers) w.join();
}

std::vector<double> WalkOperator::apply(const std::vector<double>& f) const {
  if (f.size() != table_.n) {
    throw UsageError("vector has length " + std::to_string(f.size()) + ", operator dimension is " +
                     std::to_string(table_.n));
  }
  std::vector<double> out(f.size());
  apply(f.data(), out.data());
  return out;
}

// ---------------------------------------------------------------------------

DenseEigensystem dense_eigensystem(const WalkOperator& op) {
  const std::size_t n = op.dimension();
  if (n > kDenseSpectrumCap) {
    throw CapacityError("dense spectra are limited to " + std::to_string(kDenseSpectrumCap) + " vertices");
  }
  const NeighborTable& t = op.table();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double w = 1.0 / t.d;
  for (std::uint32_t v = 0; v < t.n; ++v) {
    for (std::uint32_t j = 0; j < t.d; ++j) m(v, t.at(v, j)) += w;
  }
  if (op.mode() == WalkMode::Lazy) {
    m *= 0.5;
    m.diagonal().array() += 0.5;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  DenseEigensystem sys;
  sys.values = solver.eigenvalues().reverse();
  sys.vectors = solver.eigenvectors().rowwise().reverse();
  return sys;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& descending, double tolerance) {
  std::vector<EigenCluster> out;
  for (double v : descending) {
    if (!out.empty() && std::abs(out.back().value - v) <= tolerance * std::max(1.0, std::abs(v))) {
      ++out.back().multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

SpectrumReport dense_spectrum(const WalkOperator& op, double cluster_tolerance) {
  const DenseEigensystem sys = dense_eigensystem(op.with_mode(WalkMode::Adjacency));
  SpectrumReport rep;
  rep.method = SpectrumMethod::Dense;
  rep.dimension = op.dimension();
  rep.degree = op.degree();
  rep.eigenvalues.assign(sys.values.data(), sys.values.data() + sys.values.size());
  rep.gap = rep.eigenvalues.size() > 1 ? 1 - rep.eigenvalues[1] : 0;
  rep.multiplicities = cluster_eigenvalues(rep.eigenvalues, cluster_tolerance);
  return rep;
}

IterativeEstimate second_eigenvalue_iterative(const WalkOperator& op, double tol, std::size_t max_iters,
                                              std::uint64_t seed) {
  const WalkOperator lazy = op.with_mode(WalkMode::Lazy);
  const std::size_t n = lazy.dimension();
  IterativeEstimate est;
  if (n < 2) {
    est.converged = true;
    return est;
  }
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (auto& v : x) v = rng.unit() - 0.5;
  const auto deflate_normalize = [n](std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
    double norm = 0;
    for (auto& e : v) {
      e -= mean;
      norm += e * e;
    }
    return std::sqrt(norm);
  };
  double norm = deflate_normalize(x);
  for (auto& e : x) e /= norm;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    lazy.apply(x.data(), y.data());
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double mu = 0, res = 0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] -= mean;
      mu += x[i] * y[i];
    }
    for (std::size_t i = 0; i < n; ++i) res += (y[i] - mu * x[i]) * (y[i] - mu * x[i]);
    est.nu1_lazy = mu;
    est.residual = std::sqrt(res);
    est.iterations = it;
    if (est.residual <= tol) {
      est.converged = true;
      break;
    }
    norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (norm == 0) {  // x was in the kernel: the lazy spectrum is {1} plus 0s
      est.nu1_lazy = 0;
      est.residual = 0;
      est.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  est.nu1 = 2 * est.nu1_lazy - 1;
  return est;
}

SpectrumReport iterative_spectrum(const WalkOperator& op, double tol, std::size_t max_iters, std::uint64_t seed) {
  const IterativeEstimate est = second_eigenvalue_iterative(op, tol, max_iters, seed);
  SpectrumReport rep;
  rep.method = SpectrumMethod::PowerDeflation;
  rep.dimension = op.dimension();
  rep.degree = op.degree();
  rep.eigenvalues = {1.0, est.nu1};
  rep.gap = 1 - est.nu1;
  rep.residual = est.residual;
  rep.iterations = est.iterations;
  rep.converged = est.converged;
  return rep;
}

// ---------------------------------------------------------------------------

MultiplicityVerdict verify_multiplicity_bound(const SpectrumReport& report, std::uint32_t q) {
  if (report.method != SpectrumMethod::Dense) throw UsageError("multiplicity check needs a dense spectrum");
  MultiplicityVerdict v;
  v.required = (q - 1 + 1) / 2;  // ceil((q-1)/2)
  v.min_multiplicity = report.dimension;
  for (std::size_t i = 0; i < report.multiplicities.size(); ++i) {
    std::size_t m = report.multiplicities[i].multiplicity;
    if (i == 0) {
      if (m == 1) continue;
      --m;  // further eigenvalues at 1 form a nontrivial cluster
    }
    v.min_multiplicity = std::min(v.min_multiplicity, m);
  }
  v.holds = v.min_multiplicity >= v.required;
  return v;
}

HimultVerdict verify_himult(const SpectrumReport& report, std::uint32_t q, std::uint64_t set_size,
                            std::uint64_t group_order) {
  if (report.method != SpectrumMethod::Dense) throw UsageError("eigenvalue bound check needs a dense spectrum");
  HimultVerdict v;
  v.bound = std::sqrt((static_cast<double>(group_order) / static_cast<double>(set_size)) / ((q - 1) / 2.0));
  for (std::size_t j = 1; j < report.eigenvalues.size(); ++j) v.max_abs = std::max(v.max_abs, std::abs(report.eigenvalues[j]));
  v.holds = v.max_abs <= v.bound + 1e-9;
  return v;
}

TraceIdentity check_trace_identity(const SpectrumReport& report, std::uint64_t set_size, std::uint64_t group_order) {
  TraceIdentity t;
  for (double v : report.eigenvalues) t.sum_squares += v * v;
  t.expected = static_cast<double>(group_order) / static_cast<double>(set_size);
  t.relative_error = std::abs(t.sum_squares - t.expected) / t.expected;
  t.holds = t.relative_error <= 1e-6;
  return t;
}

// ---------------------------------------------------------------------------

std::uint64_t nikolov_pyber_threshold(std::uint64_t group_order) {
  using boost::multiprecision::cpp_int;
  // Least T with T^9 >= 2^9 |G|^8.
  const cpp_int target = cpp_int(512) * boost::multiprecision::pow(cpp_int(group_order), 8);
  auto t = static_cast<std::uint64_t>(std::floor(2 * std::pow(static_cast<double>(group_order), 8.0 / 9.0)));
  t = t > 2 ? t - 2 : 0;
  while (boost::multiprecision::pow(cpp_int(t), 9) < target) ++t;
  return t;
}

NikolovPyberReport nikolov_pyber_check(std::uint32_t q, std::size_t trials, std::uint64_t seed,
                                       const WorkLimits& limits) {
  const GroupPtr g = Group::sl2(GaloisField::of_order(q));
  NikolovPyberReport rep;
  rep.q = q;
  rep.group_order = g->order();
  rep.threshold = nikolov_pyber_threshold(rep.group_order);
  rep.trials = trials;
  if (rep.threshold > rep.group_order) {
    rep.vacuous = true;
    return rep;
  }
  const Rng base(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = base.split(trial);
    KeyAccumulator acc(g);
    while (acc.size() < rep.threshold) {
      const Key x = random_element(*g, rng);
      acc.insert(x);
      acc.insert(g->inv(x));
    }
    const ElementSet a = acc.to_set();
    const ElementSet cube = power(a, 3, limits);
    rep.set_sizes.push_back(a.size());
    rep.cube_sizes.push_back(cube.size());
    rep.passes += cube.is_whole_group();
  }
  return rep;
}

MixingReport mixing_profile(const WalkOperator& op, double C, double lazy_gap, std::size_t source) {
  if (!(lazy_gap > 0)) throw PreconditionError("mixing needs a positive spectral gap (A must generate G)");
  if (source >= op.dimension()) throw UsageError("source index out of range");
  const WalkOperator lazy = op.with_mode(WalkMode::Lazy);
  const std::size_t n = lazy.dimension();
  const double nd = static_cast<double>(n);
  MixingReport rep;
  rep.gap = lazy_gap;
  rep.C = C;
  rep.predicted_threshold = (2 * C / lazy_gap) * std::log(nd);
  rep.steps = static_cast<std::size_t>(std::ceil(rep.predicted_threshold));
  std::vector<double> phi(n, 0.0), next(n);
  phi[source] = 1;
  const double u = 1 / nd;
  double sq = 0;
  for (std::size_t k = 0;; ++k) {
    sq = 0;
    double linf = 0;
    for (double v : phi) {
      sq += (v - u) * (v - u);
      linf = std::max(linf, std::abs(v - u));
    }
    rep.l2_dist.push_back(std::sqrt(sq));
    rep.linf_dist.push_back(linf);
    if (k == rep.steps) break;
    lazy.apply(phi.data(), next.data());
    phi.swap(next);
  }
  rep.l2_squared_at_threshold = sq;
  rep.l2_display_holds = sq <= std::pow(nd, -C);
  rep.l2_norm_holds = rep.l2_dist.back() <= std::pow(nd, -C);
  rep.linf_display_holds = rep.linf_dist.back() <= std::pow(nd, -(C - 1));
  rep.monotone = true;
  for (std::size_t k = 1; k < rep.l2_dist.size(); ++k) {
    if (rep.l2_dist[k] > rep.l2_dist[k - 1] * (1 + 1e-12) + 1e-15) rep.monotone = false;
  }
  return rep;
}

std::vector<ScanRow> expander_scan(const std::vector<IntMatrix>& gens0, const std::vector<std::uint32_t>& primes,
                                   double C, const WorkLimits& limits) {
  if (gens0.empty()) throw UsageError("expander scan needs generators");
  std::vector<ScanRow> rows;
  for (std::uint32_t p : primes) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    const GroupPtr g = Group::sl2(GaloisField(PrimeField{p}));
    ScanRow row;
    row.p = p;
    row.group_order = g->order();
    std::vector<Key> keys;
    for (const auto& m : gens0) {
      const auto k = g->reduce_integer_matrix(m.a, m.b, m.c, m.d);
      if (!k) {
        row.flag = "reduction does not have determinant 1";
        break;
      }
      keys.push_back(*k);
    }
    if (row.flag.empty()) {
      const ElementSet a = symmetrize(ElementSet(g, keys));
      row.generated = generates(a, limits);
      if (!row.generated) {
        row.flag = "reduction generates a proper subgroup";
      } else {
        const WalkOperator op = WalkOperator::cayley(CayleyGraph(a), WalkMode::Lazy, limits.threads);
        const IterativeEstimate est = second_eigenvalue_iterative(op, 1e-9, 200'000, p);
        row.gap = 1 - est.nu1;
        const double lazy_gap = 1 - est.nu1_lazy;
        row.mixing_k = static_cast<std::size_t>(std::ceil((2 * C / lazy_gap) * std::log(static_cast<double>(g->order()))));
        if (!est.converged) row.flag = "eigenvalue iteration did not converge";
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t konyagin_default_j(std::uint32_t p) {
  const double lp = std::log(static_cast<double>(p));
  const double llp = std::log(lp);
  if (llp <= 0) return 0;
  return static_cast<std::uint64_t>(std::floor(lp * std::pow(llp, 4)));
}

KonyaginReport konyagin_energy(std::uint32_t p, std::uint32_t lambda, std::uint32_t alpha,
                               std::optional<std::uint64_t> J) {
  const GaloisField f(PrimeField{p});
  KonyaginReport rep;
  rep.p = p;
  rep.lambda = f.from_int(lambda);
  rep.alpha = f.from_int(alpha);
  if (rep.lambda == 0) throw UsageError("lambda must be nonzero mod p");
  if (rep.alpha == 0) throw UsageError("alpha must be nonzero mod p");
  rep.lambda_order = f.order_of(rep.lambda);
  rep.J = J ? *J : konyagin_default_j(p);
  std::uint32_t x = rep.alpha;
  for (std::uint64_t j = 0; j <= rep.J; ++j) {
    // Representative m of x in (-p/2, p/2].
    const std::int64_t m = 2 * std::int64_t{x} <= p ? x : std::int64_t{x} - p;
    rep.numerator += static_cast<std::uint64_t>(m * m);
    x = f.mul(x, rep.lambda);
  }
  const double pp = static_cast<double>(p);
  rep.energy = static_cast<double>(rep.numerator) / (pp * pp);
  rep.threshold = 1 / std::pow(std::log(pp), std::pow(3.0, 0.25));
  rep.meets_threshold = rep.energy >= rep.threshold;
  return rep;
}

}  // namespace growthlab
