#include "growthlab/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "growthlab/errors.hpp"

namespace growthlab {

CayleyGraph::CayleyGraph(ElementSet gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw UsageError("empty generator set");
  if (!gens_.is_symmetric()) throw UsageError("Cayley graph generators must satisfy A = A^-1");
}

SchreierGraph::SchreierGraph(std::uint64_t points, std::size_t generators, Action act, std::string description)
    : n_(points), gens_(generators), act_(std::move(act)), description_(std::move(description)) {
  if (n_ == 0 || gens_ == 0) throw UsageError("Schreier graph needs points and generators");
}

bool SchreierGraph::is_symmetric() const {
  std::vector<char> seen(n_);
  for (std::size_t i = 0; i < gens_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint64_t x = 0; x < n_; ++x) {
      const std::uint64_t y = act_(i, x);
      if (y >= n_ || seen[y]) return false;
      seen[y] = 1;
    }
  }
  for (std::uint64_t x = 0; x < n_; ++x) {
    for (std::size_t i = 0; i < gens_; ++i) {
      const std::uint64_t y = act_(i, x);
      bool back = false;
      for (std::size_t j = 0; j < gens_ && !back; ++j) back = act_(j, y) == x;
      if (!back) return false;
    }
  }
  return true;
}

SchreierGraph cycle_graph(std::uint64_t n) {
  return SchreierGraph(
      n, 2, [n](std::size_t i, std::uint64_t x) { return i == 0 ? (x + 1) % n : (x + n - 1) % n; },
      "Z/" + std::to_string(n) + "Z, steps +-1");
}

std::string to_string(DiameterMethod m) {
  return m == DiameterMethod::ExactBfs ? "exact_bfs" : "double_sweep_lower_bound";
}

namespace {

void finish_report(DiameterReport& rep) {
  rep.counting_bound = 0;
  rep.counting_bound_holds = true;
  if (rep.degree >= 2 && rep.vertex_count > 1) {
    rep.counting_bound = std::log(static_cast<double>(rep.vertex_count)) / std::log(static_cast<double>(rep.degree)) - 1;
    if (rep.connected) rep.counting_bound_holds = static_cast<double>(rep.diameter) >= rep.counting_bound - 1e-12;
  }
}

// Single-source BFS over points; returns ball sizes.
std::vector<std::uint64_t> schreier_balls(const SchreierGraph& g, std::uint64_t source, std::vector<std::uint32_t>& dist,
                                          std::uint64_t& farthest) {
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::fill(dist.begin(), dist.end(), kUnseen);
  std::vector<std::uint64_t> frontier{source}, next;
  dist[source] = 0;
  std::vector<std::uint64_t> balls{1};
  farthest = source;
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    next.clear();
    for (std::uint64_t x : frontier) {
      for (std::size_t i = 0; i < g.degree(); ++i) {
        const std::uint64_t y = g.neighbor(x, i);
        if (dist[y] == kUnseen) {
          dist[y] = level + 1;
          next.push_back(y);
        }
      }
    }
    if (next.empty()) break;
    ++level;
    farthest = *std::min_element(next.begin(), next.end());
    balls.push_back(balls.back() + next.size());
    frontier.swap(next);
  }
  return balls;
}

}  // namespace

DiameterReport bfs_diameter(const CayleyGraph& graph, const BfsOptions& options) {
  const Group& group = graph.group();
  if (group.order() > options.vertex_cap) {
    throw CapacityError(group.name() + " exceeds the BFS vertex cap of " + std::to_string(options.vertex_cap));
  }
  const std::vector<Key>& gens = graph.gens().keys();
  KeyAccumulator visited(graph.group_ptr());
  std::vector<Key> frontier{group.identity()}, next;
  visited.insert(group.identity());
  DiameterReport rep;
  rep.source = group.identity();
  rep.vertex_count = group.order();
  rep.degree = gens.size();
  rep.ball_sizes.push_back(1);
  const std::size_t threads = static_cast<std::size_t>(std::max(1, options.threads));
  while (!frontier.empty() && visited.size() < group.order()) {
    next.clear();
    if (threads > 1 && frontier.size() >= 4096) {
      // Workers produce candidate lists; merging in chunk order keeps the
      // frontier sequence independent of the thread count.
      std::vector<std::vector<Key>> cand(threads);
      std::vector<std::thread> workers;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          const std::size_t lo = std::min(frontier.size(), t * chunk), hi = std::min(frontier.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i) {
            for (Key a : gens) {
              const Key y = group.mul(frontier[i], a);
              if (!visited.contains(y)) cand[t].push_back(y);
            }
          }
        });
      }
      for (auto& w : workers) w.join();
      for (const auto& c : cand) {
        for (Key y : c) {
          if (visited.insert(y)) next.push_back(y);
        }
      }
    } else {
      for (Key x : frontier) {
        for (Key a : gens) {
          const Key y = group.mul(x, a);
          if (visited.insert(y)) next.push_back(y);
        }
      }
    }
    if (next.empty()) break;
    rep.ball_sizes.push_back(visited.size());
    frontier.swap(next);
  }
  rep.diameter = rep.ball_sizes.size() - 1;
  rep.connected = visited.size() == group.order();
  if (!rep.connected) rep.note = "generators do not generate the group; diameter is the eccentricity of e";
  finish_report(rep);
  return rep;
}

DiameterReport bfs_diameter(const SchreierGraph& graph, const BfsOptions& options) {
  const std::uint64_t n = graph.vertex_count();
  if (n > options.vertex_cap) throw CapacityError("Schreier graph exceeds the BFS vertex cap");
  std::vector<std::uint32_t> dist(n);
  DiameterReport rep;
  rep.vertex_count = n;
  rep.degree = graph.degree();
  rep.source = 0;
  std::uint64_t far = 0;
  rep.ball_sizes = schreier_balls(graph, 0, dist, far);
  rep.connected = rep.ball_sizes.back() == n;
  rep.diameter = rep.ball_sizes.size() - 1;
  if (!rep.connected) {
    rep.note = "graph is disconnected; diameter is the eccentricity of point 0";
  } else if (n <= options.all_sources_limit) {
    for (std::uint64_t s = 1; s < n; ++s) {
      std::uint64_t unused = 0;
      rep.diameter = std::max<std::uint64_t>(rep.diameter, schreier_balls(graph, s, dist, unused).size() - 1);
    }
    rep.method = DiameterMethod::ExactBfs;
  } else {
    std::uint64_t unused = 0;
    const auto sweep = schreier_balls(graph, far, dist, unused);
    rep.diameter = std::max<std::uint64_t>(rep.diameter, sweep.size() - 1);
    rep.method = DiameterMethod::DoubleSweepLowerBound;
    rep.note = "lower bound from a double sweep";
  }
  finish_report(rep);
  return rep;
}

SchreierGraph gamma_p_lambda(std::uint32_t p, std::uint32_t lambda) {
  const GaloisField f(PrimeField{p});
  const std::uint32_t l = f.from_int(lambda);
  if (l == 0) throw UsageError("lambda must be nonzero mod p");
  const std::uint32_t li = f.inv(l);
  return SchreierGraph(
      p, 4,
      [f, l, li](std::size_t i, std::uint64_t x) -> std::uint64_t {
        const auto v = static_cast<std::uint32_t>(x);
        switch (i) {
          case 0: return f.add(v, 1);
          case 1: return f.sub(v, 1);
          case 2: return f.mul(l, v);
          default: return f.mul(li, v);
        }
      },
      "Gamma_{" + std::to_string(p) + "," + std::to_string(l) + "}");
}

GammaReport gamma_p_lambda_report(std::uint32_t p, std::uint32_t lambda, const BfsOptions& options) {
  GammaReport rep;
  const GaloisField f(PrimeField{p});
  rep.p = p;
  rep.lambda = f.from_int(lambda);
  rep.diameter = bfs_diameter(gamma_p_lambda(p, lambda), options);
  rep.lambda_order = f.order_of(rep.lambda);
  const double ll = std::log(std::log(static_cast<double>(p)));
  if (rep.diameter.diameter > 0 && ll > 0) rep.log_exponent = std::log(static_cast<double>(rep.diameter.diameter)) / ll;
  return rep;
}

std::vector<Step> word_via_base_digits(std::uint32_t target, std::uint32_t p, std::uint32_t lambda0) {
  if (lambda0 < 2) throw UsageError("lambda0 must be >= 2");
  if (target >= p) throw UsageError("target must lie in [0, p)");
  std::vector<std::uint32_t> digits;
  for (std::uint32_t t = target; t > 0; t /= lambda0) digits.push_back(t % lambda0);
  std::vector<Step> word;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (!word.empty()) word.push_back(Step::TimesLambda);
    word.insert(word.end(), *it, Step::AddOne);
  }
  return word;
}

std::uint32_t evaluate_word(const std::vector<Step>& word, std::uint32_t p, std::uint32_t lambda0) {
  std::uint64_t x = 0;
  for (Step s : word) x = s == Step::AddOne ? (x + 1) % p : (x * lambda0) % p;
  return static_cast<std::uint32_t>(x);
}

// ---------------------------------------------------------------------------

bool NeighborTable::is_symmetric() const {
  // Multiplicity of w in row v must equal multiplicity of v in row w.
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t w = at(v, j);
      std::uint32_t vw = 0, wv = 0;
      for (std::uint32_t k = 0; k < d; ++k) {
        vw += at(v, k) == w;
        wv += at(w, k) == v;
      }
      if (vw != wv) return false;
    }
  }
  return true;
}

NeighborTable NeighborTable::from_cayley(const CayleyGraph& graph, std::uint64_t cap) {
  const Group& g = graph.group();
  g.check_enumerable(cap);
  NeighborTable t;
  t.n = static_cast<std::uint32_t>(g.order());
  t.d = static_cast<std::uint32_t>(graph.degree());
  t.nbrs.resize(std::size_t{t.n} * t.d);
  for (std::uint32_t v = 0; v < t.n; ++v) {
    const Key x = g.at(v);
    std::uint32_t j = 0;
    for (Key a : graph.gens()) t.nbrs[std::size_t{v} * t.d + j++] = static_cast<std::uint32_t>(g.index(g.mul(a, x)));
  }
  return t;
}

NeighborTable NeighborTable::from_schreier(const SchreierGraph& graph) {
  if (graph.vertex_count() > kDefaultEnumerationCap) throw CapacityError("Schreier graph too large to tabulate");
  NeighborTable t;
  t.n = static_cast<std::uint32_t>(graph.vertex_count());
  t.d = static_cast<std::uint32_t>(graph.degree());
  t.nbrs.resize(std::size_t{t.n} * t.d);
  for (std::uint32_t v = 0; v < t.n; ++v) {
    for (std::uint32_t j = 0; j < t.d; ++j) t.nbrs[std::size_t{v} * t.d + j] = static_cast<std::uint32_t>(graph.neighbor(v, j));
  }
  return t;
}

NeighborTable NeighborTable::complete(std::uint32_t n) {
  if (n < 2) throw UsageError("complete graph needs n >= 2");
  NeighborTable t;
  t.n = n;
  t.d = n - 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w = 0; w < n; ++w) {
      if (w != v) t.nbrs.push_back(w);
    }
  }
  return t;
}

ExpansionReport vertex_edge_expansion_exact(const NeighborTable& graph, std::size_t max_vertices) {
  const std::uint32_t n = graph.n, d = graph.d;
  if (n > max_vertices || n > kMaxExactExpansionVertices) {
    throw CapacityError("exact expansion is limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (n < 2) throw UsageError("expansion needs at least two vertices");
  if (!graph.is_symmetric()) throw UsageError("expansion needs a symmetric graph");
  std::vector<std::uint32_t> cnt(n, 0);  // edges from S into each vertex
  std::uint32_t set = 0;
  std::int64_t cut = 0, boundary = 0;
  std::uint32_t size = 0;
  double best_v = 1e300, best_e = 1e300;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(i));
    const std::uint32_t bit = 1u << v;
    const bool adding = !(set & bit);
    std::int64_t inside = 0, outside = 0;  // neighbors of v other than v, relative to S
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t u = graph.at(v, j);
      if (u == v) continue;
      if (set & (1u << u)) ++inside;
      else ++outside;
    }
    if (adding) {
      cut += outside - inside;
      if (cnt[v] > 0) --boundary;
      set |= bit;
      ++size;
      for (std::uint32_t j = 0; j < d; ++j) {
        const std::uint32_t u = graph.at(v, j);
        if (cnt[u]++ == 0 && !(set & (1u << u))) ++boundary;
      }
    } else {
      cut += inside - outside;
      set &= ~bit;
      --size;
      for (std::uint32_t j = 0; j < d; ++j) {
        const std::uint32_t u = graph.at(v, j);
        if (--cnt[u] == 0 && u != v && !(set & (1u << u))) --boundary;
      }
      if (cnt[v] > 0) ++boundary;
    }
    if (2 * size <= n) {
      best_v = std::min(best_v, static_cast<double>(boundary) / size);
      best_e = std::min(best_e, static_cast<double>(cut) / (static_cast<double>(d) * size));
    }
  }
  return ExpansionReport{best_v, best_e, n, d};
}

CheegerCheck cheeger_cross_check(double edge_h, double gap) {
  constexpr double kSlack = 1e-12;
  CheegerCheck c;
  c.edge_h = edge_h;
  c.gap = gap;
  c.spectral_implies_edge = edge_h >= gap / 2 - kSlack;
  c.edge_implies_spectral = gap >= edge_h * edge_h / 2 - kSlack;
  return c;
}

std::uint64_t expansion_union_size(const std::vector<std::uint32_t>& s, std::uint32_t p,
                                   const std::vector<std::uint32_t>& lambdas) {
  std::vector<char> mark(p, 0);
  std::uint64_t count = 0;
  const auto put = [&](std::uint64_t x) {
    if (!mark[x]) {
      mark[x] = 1;
      ++count;
    }
  };
  for (auto x : s) {
    put(x);
    put((x + 1) % p);
    for (auto l : lambdas) put(std::uint64_t{l % p} * x % p);
  }
  return count;
}

NonexpansionWitness nonexpansion_witness(std::uint32_t p, const std::vector<std::uint32_t>& lambdas, double epsilon) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  if (epsilon <= 0) throw UsageError("epsilon must be positive");
  const GaloisField f(PrimeField{p});
  std::vector<std::uint32_t> lam, inv;
  for (auto l : lambdas) {
    const std::uint32_t r = f.from_int(l);
    if (r == 0) throw UsageError("lambda must be nonzero mod p");
    lam.push_back(r);
    inv.push_back(f.inv(r));
  }
  const std::size_t k = lam.size();
  NonexpansionWitness best;
  std::vector<char> mark(p);

  // S = union over exponent vectors e in [0, r]^k of prod lambda_m^-e_m V.
  const auto build = [&](std::uint32_t start, std::uint32_t len, int r) {
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<std::uint32_t> scales{1};
    for (std::size_t m = 0; m < k; ++m) {
      std::vector<std::uint32_t> grown;
      for (auto s : scales) {
        std::uint32_t c = s;
        for (int e = 0; e <= r; ++e) {
          grown.push_back(c);
          c = f.mul(c, inv[m]);
        }
      }
      std::sort(grown.begin(), grown.end());
      grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
      scales = std::move(grown);
    }
    std::vector<std::uint32_t> s;
    for (auto c : scales) {
      for (std::uint32_t t = 0; t < len; ++t) {
        const std::uint32_t x = f.mul(c, static_cast<std::uint32_t>((std::uint64_t{start} + t) % p));
        if (!mark[x]) {
          mark[x] = 1;
          s.push_back(x);
        }
      }
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto consider = [&](std::uint32_t start, std::uint32_t len, int r) {
    std::vector<std::uint32_t> s = build(start, len, r);
    if (s.empty() || 2 * s.size() > p) return false;
    const double ratio = static_cast<double>(expansion_union_size(s, p, lam)) / static_cast<double>(s.size());
    if (!best.found || ratio < best.ratio) {
      best.ratio = ratio;
      best.set = std::move(s);
      best.layers = r;
      best.interval_length = len;
      best.found = ratio <= 1 + epsilon;
      return best.found;
    }
    return false;
  };

  // The half interval first: optimal when the lambdas barely move it.
  if (consider(1, p / 2, 0)) return best;
  for (int r = 1; r <= 24; ++r) {
    double layers = 1;
    for (std::size_t m = 0; m < k; ++m) layers *= r + 1;
    if (layers > p / 4.0) break;
    const auto max_len = static_cast<std::uint32_t>(p / (2 * layers));
    for (std::uint32_t len = max_len; len >= 2; len /= 2) {
      for (int slot = 0; slot < 64; ++slot) {
        const auto start = static_cast<std::uint32_t>((std::uint64_t{p} * slot) / 64);
        if (consider(start, len, r)) return best;
      }
    }
  }
  if (best.found) return best;
  best.note = "no construction with ratio <= 1 + epsilon at this p";
  return best;
}

void emit_edges(const CayleyGraph& graph, std::ostream& out, std::uint64_t limit) {
  const Group& g = graph.group();
  if (g.order() > limit) throw CapacityError("edge dumps are limited to " + std::to_string(limit) + " vertices");
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const Key x = g.at(i);
    for (Key a : graph.gens()) out << x << ' ' << g.mul(x, a) << '\n';
  }
}

void emit_edges(const SchreierGraph& graph, std::ostream& out, std::uint64_t limit) {
  if (graph.vertex_count() > limit) throw CapacityError("edge dumps are limited to " + std::to_string(limit) + " vertices");
  for (std::uint64_t x = 0; x < graph.vertex_count(); ++x) {
    for (std::size_t i = 0; i < graph.degree(); ++i) out << x << ' ' << graph.neighbor(x, i) << '\n';
  }
}

}  // namespace growthlab
