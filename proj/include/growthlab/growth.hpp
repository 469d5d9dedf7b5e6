#pragma once

// Verifiers and probes for growth inequalities on concrete sets. Every
// inequality is compared exactly on integers; the doubles in Inequality are
// for display only.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/element_set.hpp"

namespace growthlab {

struct Inequality {
  std::string name;
  std::string relation;  // "<=" or ">="
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct Verdict {
  std::vector<Inequality> checks;
  /// Branches that were not evaluated, and why.
  std::vector<std::string> notes;

  bool holds() const;
  const Inequality* find(const std::string& name) const;
};

/// |A C^-1| |B| <= |A B^-1| |B C^-1|.
Verdict verify_ruzsa_triangle(const ElementSet& a, const ElementSet& b, const ElementSet& c,
                              const WorkLimits& limits = {});

/// With S = A u A^-1 u {e}:
///   |S^3|/|A| <= (3|A^3|/|A|)^3,
///   |A^j|/|A| <= (|A^3|/|A|)^(j-2) for 3 <= j <= k when A = A^-1,
///   |S^j|/|A| <= 3^(j-2) (|A^3|/|A|)^(3(j-2)) for 4 <= j <= k.
/// The last display is false at j = 3 (A = {g}, g of order >= 4, gives 7 > 3),
/// so it starts at j = 4.
Verdict verify_tripling_chain(const ElementSet& a, int k, const WorkLimits& limits = {});

/// G acting on itself by conjugation, x a point:
///   |(A^-1 A) n C(x)| >= |A| / |A.x|,  |BA| >= |A n C(x)| |B.x|.
Verdict verify_orbit_stabilizer_conjugation(const ElementSet& a, const ElementSet& b, Key x,
                                            const WorkLimits& limits = {});

/// G acting on G/H by left multiplication, x = H, with r the number of
/// cosets of H meeting A: the two point displays, then for A = A^-1
///   |A^2 n H| >= |A|/r,
///   |A^(k+1)| >= |A^k n H| / |A^2 n H| * |A|,
///   |A^(k+2)| >= |pi(A^k)| / |pi(A)| * |A|.
/// `h` must be a subgroup.
Verdict verify_orbit_stabilizer_cosets(const ElementSet& a, const ElementSet& b, const ElementSet& h, int k,
                                       const WorkLimits& limits = {});

/// |A^2 n C(g)| >= |A| / |A^(l+2) n Cl(g)| for A = A^-1, g in A^l. The class
/// is enumerated when |G| <= 10^6 and otherwise replaced by its superset
/// {h : tr h = tr g} (matrix groups only), which only weakens the right side.
/// PreconditionError if A != A^-1 or g is not in A^l.
Verdict centralizer_lower_bound(const ElementSet& a, Key g, int l, const WorkLimits& limits = {});

// ---- affine group -----------------------------------------------------

enum class PivotCase { PivotInSet, NoPivots, Mixed };
std::string to_string(PivotCase c);

struct PivotReport {
  PivotCase case_label = PivotCase::Mixed;
  /// kappa_a = #{(u1,t1,u2,t2) : phi_a(u1,t1) = phi_a(u2,t2)} over a in U \ {e}.
  std::uint64_t kappa_min = 0, kappa_max = 0;
  double kappa_mean = 0;
  std::uint64_t pivots_in_u = 0;
  std::uint64_t product_size = 0;  // |(A_t^2(A_u))^6|
  std::uint64_t bound = 0;         // min(|A_u||A_t|, p)
  bool holds = false;
};

/// A_u in U symmetric with e, A_u != {e}; A_t inside one maximal torus with e.
/// PreconditionError otherwise.
PivotReport affine_pivot_product(const ElementSet& a_u, const ElementSet& a_t, const WorkLimits& limits = {});

/// For A = A^-1, e in A in the affine group:
///   |A^2 n U| >= |A|/|pi(A)| and |A^2 n C(x)| >= |A|/|A^5| |pi(A)| for every
///   x in A \ U (skipped if A is inside U);
///   |A^73| >= sqrt|pi(A)| |A| or U inside A^72 (skipped if A lies in a
///   maximal torus).
Verdict verify_affine_growth(const ElementSet& a, const WorkLimits& limits = {});

/// True iff every element of A fixes one common point of the line, i.e. A
/// lies in a maximal torus C(g), g not in U.
bool in_maximal_torus(const ElementSet& a);

struct SumProductReport {
  Verdict verdict;
  std::uint64_t six_fold_size = 0;     // |6 Y^2 X|
  std::uint64_t bound = 0;             // min(|X||Y|, p-1)
  std::uint64_t diag_set_size = 0;     // |D| for D = (X u Y) \ {0}
  std::uint64_t diag_product = 0;      // |D.D|
  std::uint64_t diag_sum = 0;          // |D+D|
  double diag_ratio = 0;               // max(|D.D|, |D+D|)/|D|
};

/// |6 Y^2 X| >= min(|X||Y|, p-1) for X = -X with 0 in X and Y in F_p^* with
/// 1 in Y; elements as residues. The bound fails for X = {0} (Y = {1, 2} gives
/// 1 < 2), so that case is reported but not checked.
SumProductReport sum_product_check(std::uint32_t p, const std::vector<std::uint32_t>& x,
                                   const std::vector<std::uint32_t>& y);

// ---- varieties and escape ----------------------------------------------

/// Membership test for a special set W, evaluated on the entries (a,b,c,d)
/// of the canonical representative; affine (r,x) reads as (r x; 0 1).
class VarietyPredicate {
 public:
  struct Monomial {
    std::int64_t coef = 1;
    std::array<std::uint8_t, 4> exps{};  // exponents of a, b, c, d
  };

  /// W = {g : tr g in traces}.
  static VarietyPredicate trace_slice(std::vector<std::uint32_t> traces);
  /// W = {g : tr g = +-2}; the complement is the regular semisimple locus.
  static VarietyPredicate non_regular_semisimple(const GaloisField& field);
  /// W = C(g0).
  static VarietyPredicate torus(GroupPtr group, Key g0);
  /// W = {(1 x; 0 1)}.
  static VarietyPredicate unipotent();
  /// W = zero set of the polynomial.
  static VarietyPredicate polynomial(std::vector<Monomial> terms);
  /// W = {abcd = 0}.
  static VarietyPredicate abcd_zero();
  /// W empty.
  static VarietyPredicate nothing();

  bool contains(const Group& group, Key g) const;
  std::string describe() const;

 private:
  enum class Kind { TraceSlice, Torus, Unipotent, Polynomial, Nothing };
  Kind kind_ = Kind::Nothing;
  std::vector<std::uint32_t> traces_;
  GroupPtr torus_group_;
  Key torus_center_ = 0;
  std::vector<Monomial> terms_;
  std::string label_;
};

/// Parses "coef ea eb ec ed" lines (# comments) into a polynomial predicate.
VarietyPredicate parse_polynomial_predicate(const std::string& text);

struct EscapeResult {
  bool found = false;
  int k = 0;
  Key witness = 0;               // least key of A^k outside W
  std::uint64_t count_at_k = 0;  // |A^k \ W|
  std::uint64_t size_at_k = 0;   // |A^k|
  int k_max = 0;
};

/// Least k <= k_max with A^k not inside W. A = A^-1 and e in A are required
/// (PreconditionError). Not finding one is a result, not an error.
EscapeResult escape(const ElementSet& a, const VarietyPredicate& w, int k_max, const WorkLimits& limits = {});

struct SliceProfile {
  std::vector<std::uint64_t> counts;  // counts[t] = |A n V_t|, t a field code
  std::uint64_t set_size = 0;
  std::optional<std::uint32_t> argmax_regular;  // t != +-2 maximizing the count
  std::uint64_t max_regular = 0;
  double exponent = 0;  // log max_regular / log |A|
  std::optional<Key> torus_center;
  std::uint64_t torus_count = 0;  // |A n C(g0)|
  double torus_exponent = 0;      // against the 1/3 baseline
};

/// SL2/PSL2 only. `torus` must be regular semisimple when given.
SliceProfile slice_profile(const ElementSet& a, std::optional<Key> torus = std::nullopt);

// ---- dichotomy ----------------------------------------------------------

struct GrowthReport {
  std::vector<std::uint64_t> sizes;  // |A^1|, ..., |A^K|
  double tripling = 0;               // |A^3|/|A|
  double delta = 0;                  // log|A^3|/log|A| - 1
  std::optional<int> saturated_at;
  /// log|A^(k+1)|/log|A^k| - 1 for consecutive computed powers.
  std::vector<double> step_deltas;
  /// k with |A^3k| < |A^k|^1.01, A^3k != G and |A^k| < |G|^0.9.
  std::vector<int> flagged_steps;
  std::uint64_t group_order = 0;
};

/// A must generate G (PreconditionError). Stops at saturation or max_k.
GrowthReport dichotomy_probe(const ElementSet& a, int max_k, const WorkLimits& limits = {});

struct PyberSpigaReport {
  int n = 0, m = 0;
  std::uint64_t set_size = 0;
  std::uint64_t cube_size = 0;
  std::uint64_t bound = 0;  // 9 m! + 2 (m+1)!
  bool holds = false;
};

/// Sym({0..m-1}) u {s, s^-1} inside Sym(n), s the n-cycle i -> i+1.
ElementSet pyber_spiga_set(const GroupPtr& sym, int m);
PyberSpigaReport pyber_spiga_check(int n, int m, const WorkLimits& limits = {});

}  // namespace growthlab
