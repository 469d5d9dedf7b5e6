#pragma once

// Cayley and Schreier graphs as implicit graphs, BFS diameters, and exact
// expansion constants of small graphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "growthlab/element_set.hpp"

namespace growthlab {

inline constexpr std::uint64_t kDefaultVertexCap = 20'000'000;
inline constexpr std::uint64_t kAllSourcesLimit = 100'000;
inline constexpr std::uint64_t kEdgeDumpLimit = 100'000;
inline constexpr std::size_t kMaxExactExpansionVertices = 24;

/// Gamma(G, A): vertices G, g adjacent to g a for a in A. A = A^-1 is
/// required, so the graph is symmetric and |A|-regular.
class CayleyGraph {
 public:
  explicit CayleyGraph(ElementSet gens);

  const ElementSet& gens() const { return gens_; }
  const Group& group() const { return gens_.group(); }
  const GroupPtr& group_ptr() const { return gens_.group_ptr(); }
  std::size_t degree() const { return gens_.size(); }
  std::uint64_t vertex_count() const { return gens_.group().order(); }

 private:
  ElementSet gens_;
};

/// Points 0..n-1 with one permutation per generator; `act(i, x)` is the
/// image of x under generator i.
class SchreierGraph {
 public:
  using Action = std::function<std::uint64_t(std::size_t, std::uint64_t)>;

  SchreierGraph(std::uint64_t points, std::size_t generators, Action act, std::string description);

  std::uint64_t vertex_count() const { return n_; }
  std::size_t degree() const { return gens_; }
  std::uint64_t neighbor(std::uint64_t x, std::size_t i) const { return act_(i, x); }
  const std::string& description() const { return description_; }

  /// Checks that every generator permutes the points and that the
  /// generator list is closed under inverses, by exhaustion.
  bool is_symmetric() const;

 private:
  std::uint64_t n_;
  std::size_t gens_;
  Action act_;
  std::string description_;
};

/// Z/nZ with steps +-1.
SchreierGraph cycle_graph(std::uint64_t n);

enum class DiameterMethod { ExactBfs, DoubleSweepLowerBound };
std::string to_string(DiameterMethod m);

struct DiameterReport {
  std::uint64_t diameter = 0;
  /// |B_k| for k = 0..eccentricity of the source.
  std::vector<std::uint64_t> ball_sizes;
  std::uint64_t source = 0;
  DiameterMethod method = DiameterMethod::ExactBfs;
  bool connected = true;
  std::uint64_t vertex_count = 0;
  std::size_t degree = 0;
  /// log|V|/log d - 1; holds is vacuous for d <= 1 or disconnected graphs.
  double counting_bound = 0;
  bool counting_bound_holds = true;
  std::string note;
};

struct BfsOptions {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t all_sources_limit = kAllSourcesLimit;
  int threads = 1;
};

/// Eccentricity of e, which is the diameter by vertex transitivity.
DiameterReport bfs_diameter(const CayleyGraph& graph, const BfsOptions& options = {});
/// All-sources diameter up to options.all_sources_limit points, otherwise a
/// double-sweep lower bound.
DiameterReport bfs_diameter(const SchreierGraph& graph, const BfsOptions& options = {});

/// Edges x -> x +- 1 and x -> lambda^(+-1) x on F_p.
SchreierGraph gamma_p_lambda(std::uint32_t p, std::uint32_t lambda);

struct GammaReport {
  DiameterReport diameter;
  std::uint32_t p = 0, lambda = 0;
  std::uint64_t lambda_order = 0;
  double log_exponent = 0;  // log(diam) / log log p
};
GammaReport gamma_p_lambda_report(std::uint32_t p, std::uint32_t lambda, const BfsOptions& options = {});

enum class Step { AddOne, TimesLambda };
/// Horner word over {x -> x+1, x -> lambda0 x} taking 0 to target, from the
/// base-lambda0 digits of target in [0, p).
std::vector<Step> word_via_base_digits(std::uint32_t target, std::uint32_t p, std::uint32_t lambda0);
std::uint32_t evaluate_word(const std::vector<Step>& word, std::uint32_t p, std::uint32_t lambda0);

// ---- explicit small graphs ----------------------------------------------

/// d-regular graph given by a neighbor table, rows of length d.
struct NeighborTable {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> nbrs;  // nbrs[v * d + j]

  std::uint32_t at(std::uint32_t v, std::uint32_t j) const { return nbrs[std::size_t{v} * d + j]; }
  bool is_symmetric() const;

  /// Row of g lists index(a g) for a in A, matching f -> (1/|A|) sum f(a g).
  static NeighborTable from_cayley(const CayleyGraph& graph, std::uint64_t cap = kDefaultEnumerationCap);
  static NeighborTable from_schreier(const SchreierGraph& graph);
  static NeighborTable complete(std::uint32_t n);
};

struct ExpansionReport {
  double vertex_h = 0;  // min |boundary vertices| / |S|
  double edge_h = 0;    // min |cut edges| / (d |S|)
  std::uint32_t vertices = 0;
  std::uint32_t degree = 0;
};

/// Exhausts all S with 0 < |S| <= |V|/2. |V| <= 24.
ExpansionReport vertex_edge_expansion_exact(const NeighborTable& graph,
                                            std::size_t max_vertices = kMaxExactExpansionVertices);

struct CheegerCheck {
  double edge_h = 0;
  double gap = 0;
  bool spectral_implies_edge = false;  // h >= gap/2
  bool edge_implies_spectral = false;  // gap >= h^2/2
};
CheegerCheck cheeger_cross_check(double edge_h, double gap);

struct NonexpansionWitness {
  bool found = false;
  std::vector<std::uint32_t> set;  // sorted
  double ratio = 0;                // |S u (S+1) u lambda_i S| / |S|
  int layers = 0;                  // r in the union of lambda^-i V, i <= r
  std::uint32_t interval_length = 0;
  std::string note;
};

/// Size of S u (S+1) u lambda_1 S u ... over F_p.
std::uint64_t expansion_union_size(const std::vector<std::uint32_t>& s, std::uint32_t p,
                                   const std::vector<std::uint32_t>& lambdas);
/// Searches S = union over exponent vectors of prod lambda_m^-i_m V, V an
/// interval, for a set with 0 < |S| <= p/2 and ratio <= 1 + epsilon.
NonexpansionWitness nonexpansion_witness(std::uint32_t p, const std::vector<std::uint32_t>& lambdas, double epsilon);

/// "u v" key pairs, one edge per line. Throws CapacityError above the limit.
void emit_edges(const CayleyGraph& graph, std::ostream& out, std::uint64_t limit = kEdgeDumpLimit);
void emit_edges(const SchreierGraph& graph, std::ostream& out, std::uint64_t limit = kEdgeDumpLimit);

}  // namespace growthlab
