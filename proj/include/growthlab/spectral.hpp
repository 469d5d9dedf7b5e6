#pragma once

// The normalized adjacency operator f -> (1/|A|) sum_a f(a g), its spectrum,
// lazy random walks, and the spectral verifiers built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "growthlab/graphs.hpp"

namespace growthlab {

inline constexpr std::size_t kDenseSpectrumCap = 4000;
inline constexpr double kClusterTolerance = 1e-8;

enum class WalkMode { Adjacency, Lazy };
std::string to_string(WalkMode m);

class WalkOperator {
 public:
  explicit WalkOperator(NeighborTable table, WalkMode mode = WalkMode::Adjacency, int threads = 1);
  static WalkOperator cayley(const CayleyGraph& graph, WalkMode mode = WalkMode::Adjacency, int threads = 1);

  std::size_t dimension() const { return table_.n; }
  std::size_t degree() const { return table_.d; }
  WalkMode mode() const { return mode_; }
  const NeighborTable& table() const { return table_; }
  WalkOperator with_mode(WalkMode mode) const;

  /// Throws UsageError on a length mismatch.
  std::vector<double> apply(const std::vector<double>& f) const;
  void apply(const double* f, double* out) const;

 private:
  void apply_rows(const double* f, double* out, std::size_t lo, std::size_t hi) const;

  NeighborTable table_;
  WalkMode mode_;
  int threads_;
};

struct EigenCluster {
  double value = 0;
  std::size_t multiplicity = 0;
};

enum class SpectrumMethod { Dense, PowerDeflation };
std::string to_string(SpectrumMethod m);

struct SpectrumReport {
  /// Eigenvalues of the adjacency operator, descending. Iterative mode
  /// holds {nu_0 = 1, nu_1}.
  std::vector<double> eigenvalues;
  double gap = 0;  // 1 - nu_1
  std::vector<EigenCluster> multiplicities;
  SpectrumMethod method = SpectrumMethod::Dense;
  std::size_t dimension = 0;
  std::size_t degree = 0;
  // Iterative mode only.
  double residual = 0;
  std::size_t iterations = 0;
  bool converged = true;
};

struct DenseEigensystem {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // orthonormal columns, matching values
};

/// Eigen-decomposition of the operator in its own mode. |V| <= 4000.
DenseEigensystem dense_eigensystem(const WalkOperator& op);
/// Spectrum of the adjacency operator with clustered multiplicities.
SpectrumReport dense_spectrum(const WalkOperator& op, double cluster_tolerance = kClusterTolerance);
std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& descending, double tolerance);

struct IterativeEstimate {
  double nu1_lazy = 0;
  double nu1 = 0;  // adjacency: 2 nu1_lazy - 1
  double residual = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Power iteration for the lazy operator on the complement of the constants.
IterativeEstimate second_eigenvalue_iterative(const WalkOperator& op, double tol = 1e-9,
                                              std::size_t max_iters = 200'000, std::uint64_t seed = 1);
SpectrumReport iterative_spectrum(const WalkOperator& op, double tol = 1e-9, std::size_t max_iters = 200'000,
                                  std::uint64_t seed = 1);

// ---- verifiers ----------------------------------------------------------

struct MultiplicityVerdict {
  bool holds = false;
  std::size_t required = 0;        // ceil((q-1)/2)
  std::size_t min_multiplicity = 0;  // over clusters other than nu_0
};
/// Every cluster other than the one at 1 has multiplicity >= (q-1)/2.
MultiplicityVerdict verify_multiplicity_bound(const SpectrumReport& report, std::uint32_t q);

struct HimultVerdict {
  bool holds = false;
  double bound = 0;    // sqrt((|G|/|A|) / ((q-1)/2))
  double max_abs = 0;  // max_{j >= 1} |nu_j|
};
HimultVerdict verify_himult(const SpectrumReport& report, std::uint32_t q, std::uint64_t set_size,
                            std::uint64_t group_order);

struct TraceIdentity {
  double sum_squares = 0;
  double expected = 0;  // |G|/|A|
  double relative_error = 0;
  bool holds = false;   // relative error <= 1e-6
};
TraceIdentity check_trace_identity(const SpectrumReport& report, std::uint64_t set_size, std::uint64_t group_order);

struct NikolovPyberReport {
  std::uint32_t q = 0;
  std::uint64_t group_order = 0;
  std::uint64_t threshold = 0;  // ceil(2 |G|^(8/9))
  bool vacuous = false;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<std::uint64_t> set_sizes;
  std::vector<std::uint64_t> cube_sizes;
};

/// ceil(2 |G|^(8/9)), computed exactly on integers.
std::uint64_t nikolov_pyber_threshold(std::uint64_t group_order);
/// Random symmetric A with |A| >= threshold; checks A^3 = G exactly.
NikolovPyberReport nikolov_pyber_check(std::uint32_t q, std::size_t trials, std::uint64_t seed,
                                       const WorkLimits& limits = {});

struct MixingReport {
  double gap = 0;  // of the lazy operator
  double C = 2;
  std::size_t steps = 0;  // ceil((2C/gap) log |G|)
  double predicted_threshold = 0;
  std::vector<double> l2_dist;    // ||phi_k - u||_2, k = 0..steps
  std::vector<double> linf_dist;  // max |phi_k - u|
  double l2_squared_at_threshold = 0;
  bool l2_display_holds = false;    // sum |phi - u|^2 <= |G|^-C
  bool l2_norm_holds = false;       // ||phi - u||_2 <= |G|^-C
  bool linf_display_holds = false;  // max |phi - u| <= |G|^-(C-1)
  bool monotone = false;  // l2_dist nonincreasing, up to 1e-15 of rounding
};

/// Iterates phi_k = L^k delta_source for the lazy operator L.
MixingReport mixing_profile(const WalkOperator& op, double C, double lazy_gap, std::size_t source);

struct ScanRow {
  std::uint32_t p = 0;
  std::uint64_t group_order = 0;
  double gap = 0;  // adjacency gap 1 - nu_1
  std::optional<std::size_t> mixing_k;
  bool generated = false;
  std::string flag;  // why a row is flagged, empty otherwise
};

struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
};

/// Symmetrized reductions of gens0 mod each p; gaps by power iteration.
std::vector<ScanRow> expander_scan(const std::vector<IntMatrix>& gens0, const std::vector<std::uint32_t>& primes,
                                   double C = 2, const WorkLimits& limits = {});

struct KonyaginReport {
  std::uint32_t p = 0, lambda = 0, alpha = 0;
  std::uint64_t lambda_order = 0;
  std::uint64_t J = 0;
  std::uint64_t numerator = 0;  // sum of m^2, energy = numerator / p^2
  double energy = 0;
  double threshold = 0;  // 1 / (log p)^(3^(1/4))
  bool meets_threshold = false;
};

/// Default J = floor(log p (log log p)^4).
std::uint64_t konyagin_default_j(std::uint32_t p);
KonyaginReport konyagin_energy(std::uint32_t p, std::uint32_t lambda, std::uint32_t alpha,
                               std::optional<std::uint64_t> J = std::nullopt);

}  // namespace growthlab
