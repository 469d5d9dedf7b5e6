#include "growthlab/report_io.hpp"

#include <charconv>
#include <cmath>

namespace growthlab {

namespace {

// nlohmann writes non-finite doubles as null; keep them readable instead.
Json num(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

Json nums(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(num(x));
  return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json element_json(const Group& group, Key g) {
  Json j;
  j["kind"] = to_string(group.kind());
  j["key"] = str(g);
  j["entries"] = group.entries(g);
  return j;
}

Json set_json(const ElementSet& a, std::size_t max_listed) {
  Json j;
  j["group"] = a.group().name();
  j["size"] = a.size();
  Json listed = Json::array();
  for (std::size_t i = 0; i < a.size() && i < max_listed; ++i) listed.push_back(element_json(a.group(), a.keys()[i]));
  j["elements"] = std::move(listed);
  j["truncated"] = a.size() > max_listed;
  return j;
}

Json to_json(const Inequality& x) {
  return Json{{"name", x.name}, {"relation", x.relation}, {"lhs", num(x.lhs)}, {"rhs", num(x.rhs)}, {"holds", x.holds}};
}

Json to_json(const Verdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back(to_json(c));
  return Json{{"holds", v.holds()}, {"checks", std::move(checks)}, {"notes", v.notes}};
}

Json to_json(const DiameterReport& r) {
  Json j;
  j["diameter"] = r.diameter;
  j["method"] = to_string(r.method);
  j["connected"] = r.connected;
  j["vertex_count"] = r.vertex_count;
  j["degree"] = r.degree;
  j["source"] = str(r.source);
  j["ball_sizes"] = r.ball_sizes;
  j["counting_bound"] = num(r.counting_bound);
  j["counting_bound_holds"] = r.counting_bound_holds;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const GammaReport& r) {
  Json j;
  j["p"] = r.p;
  j["lambda"] = r.lambda;
  j["lambda_order"] = r.lambda_order;
  j["log_exponent"] = num(r.log_exponent);
  j["diameter"] = to_json(r.diameter);
  return j;
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["sizes"] = r.sizes;
  j["tripling"] = num(r.tripling);
  j["delta"] = num(r.delta);
  j["saturated_at"] = r.saturated_at ? Json(*r.saturated_at) : Json(nullptr);
  j["step_deltas"] = nums(r.step_deltas);
  j["flagged_steps"] = r.flagged_steps;
  return j;
}

Json to_json(const SpectrumReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["dimension"] = r.dimension;
  j["degree"] = r.degree;
  j["gap"] = num(r.gap);
  j["nu1"] = r.eigenvalues.size() > 1 ? num(r.eigenvalues[1]) : Json(nullptr);
  if (r.method == SpectrumMethod::Dense) {
    Json clusters = Json::array();
    for (const auto& c : r.multiplicities) clusters.push_back(Json{{"value", num(c.value)}, {"multiplicity", c.multiplicity}});
    j["clusters"] = std::move(clusters);
    j["eigenvalues"] = nums(r.eigenvalues);
  } else {
    j["residual"] = num(r.residual);
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
  }
  return j;
}

Json to_json(const IterativeEstimate& e) {
  return Json{{"nu1_lazy", num(e.nu1_lazy)},
              {"nu1", num(e.nu1)},
              {"residual", num(e.residual)},
              {"iterations", e.iterations},
              {"converged", e.converged}};
}

Json to_json(const MixingReport& r) {
  Json j;
  j["lazy_gap"] = num(r.gap);
  j["C"] = num(r.C);
  j["predicted_threshold"] = num(r.predicted_threshold);
  j["steps"] = r.steps;
  j["l2_squared_at_threshold"] = num(r.l2_squared_at_threshold);
  j["l2_display_holds"] = r.l2_display_holds;
  j["l2_norm_holds"] = r.l2_norm_holds;
  j["linf_display_holds"] = r.linf_display_holds;
  j["monotone"] = r.monotone;
  j["l2_dist"] = nums(r.l2_dist);
  j["linf_dist"] = nums(r.linf_dist);
  return j;
}

Json to_json(const ScanRow& r) {
  Json j;
  j["p"] = r.p;
  j["group_order"] = r.group_order;
  j["generated"] = r.generated;
  j["gap"] = r.generated ? num(r.gap) : Json(nullptr);
  j["mixing_k"] = r.mixing_k ? Json(*r.mixing_k) : Json(nullptr);
  if (!r.flag.empty()) j["flag"] = r.flag;
  return j;
}

Json to_json(const KonyaginReport& r) {
  Json j;
  j["p"] = r.p;
  j["lambda"] = r.lambda;
  j["alpha"] = r.alpha;
  j["lambda_order"] = r.lambda_order;
  j["J"] = r.J;
  j["numerator"] = str(r.numerator);
  j["denominator"] = str(std::uint64_t{r.p} * r.p);
  j["energy"] = num(r.energy);
  j["threshold"] = num(r.threshold);
  j["meets_threshold"] = r.meets_threshold;
  return j;
}

Json to_json(const PivotReport& r) {
  Json j;
  j["case"] = to_string(r.case_label);
  j["kappa_min"] = r.kappa_min;
  j["kappa_max"] = r.kappa_max;
  j["kappa_mean"] = num(r.kappa_mean);
  j["pivots_in_u"] = r.pivots_in_u;
  j["product_size"] = r.product_size;
  j["bound"] = r.bound;
  j["holds"] = r.holds;
  return j;
}

Json to_json(const SumProductReport& r) {
  Json j = to_json(r.verdict);
  j["six_fold_size"] = r.six_fold_size;
  j["bound"] = r.bound;
  j["diagnostic"] = Json{{"size", r.diag_set_size},
                         {"product_size", r.diag_product},
                         {"sum_size", r.diag_sum},
                         {"ratio", num(r.diag_ratio)}};
  return j;
}

Json to_json(const SliceProfile& r, const Group& group) {
  Json j;
  j["set_size"] = r.set_size;
  j["counts"] = r.counts;
  j["argmax_regular"] = r.argmax_regular ? Json(*r.argmax_regular) : Json(nullptr);
  j["max_regular"] = r.max_regular;
  j["exponent"] = num(r.exponent);
  if (r.torus_center) {
    j["torus_center"] = element_json(group, *r.torus_center);
    j["torus_count"] = r.torus_count;
    j["torus_exponent"] = num(r.torus_exponent);
  }
  return j;
}

Json to_json(const EscapeResult& r, const Group& group) {
  Json j;
  j["found"] = r.found;
  j["k_max"] = r.k_max;
  if (r.found) {
    j["k"] = r.k;
    j["witness"] = element_json(group, r.witness);
    j["count_at_k"] = r.count_at_k;
    j["size_at_k"] = r.size_at_k;
  } else {
    j["size_at_k_max"] = r.size_at_k;
  }
  return j;
}

Json to_json(const PyberSpigaReport& r) {
  return Json{{"n", r.n},           {"m", r.m},         {"set_size", r.set_size},
              {"cube_size", r.cube_size}, {"bound", r.bound}, {"holds", r.holds}};
}

Json to_json(const NikolovPyberReport& r) {
  Json j;
  j["q"] = r.q;
  j["group_order"] = r.group_order;
  j["threshold"] = r.threshold;
  j["vacuous"] = r.vacuous;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["set_sizes"] = r.set_sizes;
  j["cube_sizes"] = r.cube_sizes;
  return j;
}

Json to_json(const MultiplicityVerdict& v) {
  return Json{{"holds", v.holds}, {"required", v.required}, {"min_multiplicity", v.min_multiplicity}};
}

Json to_json(const HimultVerdict& v) {
  return Json{{"holds", v.holds}, {"bound", num(v.bound)}, {"max_abs", num(v.max_abs)}};
}

Json to_json(const TraceIdentity& t) {
  return Json{{"holds", t.holds},
              {"sum_squares", num(t.sum_squares)},
              {"expected", num(t.expected)},
              {"relative_error", num(t.relative_error)}};
}

Json to_json(const ExpansionReport& r) {
  return Json{{"vertices", r.vertices}, {"degree", r.degree}, {"vertex_h", num(r.vertex_h)}, {"edge_h", num(r.edge_h)}};
}

Json to_json(const CheegerCheck& c) {
  return Json{{"edge_h", num(c.edge_h)},
              {"gap", num(c.gap)},
              {"spectral_implies_edge", c.spectral_implies_edge},
              {"edge_implies_spectral", c.edge_implies_spectral}};
}

Json to_json(const NonexpansionWitness& w) {
  Json j;
  j["found"] = w.found;
  if (w.found) {
    j["set_size"] = w.set.size();
    j["ratio"] = num(w.ratio);
    j["layers"] = w.layers;
    j["interval_length"] = w.interval_length;
  }
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

// ---------------------------------------------------------------------------

void write_csv(std::ostream& out, const Table& table) {
  const auto cell = [&out](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      out << s;
      return;
    }
    out << '"';
    for (char c : s) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  };
  const auto row = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ',';
      cell(r[i]);
    }
    out << '\n';
  };
  row(table.header);
  for (const auto& r : table.rows) row(r);
}

Table to_table(const DiameterReport& r) {
  Table t{{"k", "ball_size", "diameter", "method"}, {}};
  for (std::size_t k = 0; k < r.ball_sizes.size(); ++k) {
    t.rows.push_back({str(k), str(r.ball_sizes[k]), str(r.diameter), to_string(r.method)});
  }
  return t;
}

Table to_table(const GrowthReport& r) {
  Table t{{"k", "size", "step_delta"}, {}};
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    t.rows.push_back({str(i + 1), str(r.sizes[i]), i < r.step_deltas.size() ? format_double(r.step_deltas[i]) : ""});
  }
  return t;
}

Table to_table(const SpectrumReport& r) {
  Table t{{"index", "eigenvalue"}, {}};
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) t.rows.push_back({str(i), format_double(r.eigenvalues[i])});
  return t;
}

Table to_table(const MixingReport& r) {
  Table t{{"k", "l2_dist", "linf_dist"}, {}};
  for (std::size_t k = 0; k < r.l2_dist.size(); ++k) {
    t.rows.push_back({str(k), format_double(r.l2_dist[k]), format_double(r.linf_dist[k])});
  }
  return t;
}

Table to_table(const std::vector<ScanRow>& rows) {
  Table t{{"p", "group_order", "gap", "mixing_k", "generated"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({str(r.p), str(r.group_order), r.generated ? format_double(r.gap) : "",
                      r.mixing_k ? str(*r.mixing_k) : "", r.generated ? "true" : "false"});
  }
  return t;
}

Table to_table(const KonyaginReport& r) {
  return Table{{"p", "lambda", "alpha", "lambda_order", "J", "numerator", "energy", "threshold", "meets_threshold"},
               {{str(r.p), str(r.lambda), str(r.alpha), str(r.lambda_order), str(r.J), str(r.numerator),
                 format_double(r.energy), format_double(r.threshold), r.meets_threshold ? "true" : "false"}}};
}

Table to_table(const SliceProfile& r) {
  Table t{{"trace", "count"}, {}};
  for (std::size_t i = 0; i < r.counts.size(); ++i) t.rows.push_back({str(i), str(r.counts[i])});
  return t;
}

Table to_table(const EscapeResult& r) {
  return Table{{"found", "k", "witness_key", "count_at_k", "size_at_k", "k_max"},
               {{r.found ? "true" : "false", r.found ? str(r.k) : "", r.found ? str(r.witness) : "",
                 str(r.count_at_k), str(r.size_at_k), str(r.k_max)}}};
}

Table to_table(const Verdict& v) {
  Table t{{"check", "relation", "lhs", "rhs", "holds"}, {}};
  for (const auto& c : v.checks) {
    t.rows.push_back({c.name, c.relation, format_double(c.lhs), format_double(c.rhs), c.holds ? "true" : "false"});
  }
  return t;
}

}  // namespace growthlab
