#include "isoprofile/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "isoprofile/coupling.hpp"
#include "isoprofile/curvature.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/generators.hpp"
#include "isoprofile/graph_spec.hpp"
#include "isoprofile/green.hpp"
#include "isoprofile/isoperimetry.hpp"
#include "isoprofile/metric.hpp"
#include "isoprofile/partition.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/rng.hpp"
#include "isoprofile/scaling.hpp"
#include "isoprofile/tail.hpp"

namespace isoprofile {

ExperimentConfig ExperimentConfig::from(const Config& cfg) {
  ExperimentConfig out;
  out.graph = cfg.get_or("graph", "");
  if (auto v = cfg.get_int("n")) out.n = static_cast<int>(*v);
  out.lambda = cfg.get_double("lambda");
  out.calib_c = cfg.get_double("calib-c");
  if (auto v = cfg.get_int("seeds")) out.seeds = static_cast<int>(*v);
  if (auto v = cfg.get_u64("seed")) out.seed = *v;
  out.out = cfg.get_or("out", "");
  out.format = cfg.get_or("format", "");
  out.transitive_pair = cfg.get_or("transitive-pair", "auto");
  out.budget = cfg.get_u64("budget");
  if (out.graph.empty()) throw UsageError("missing --graph");
  if (out.n < 1) throw UsageError("--n must be at least 1");
  if (out.seeds < 1) throw UsageError("--seeds must be at least 1");
  if (!out.format.empty() && out.format != "csv" && out.format != "json")
    throw UsageError("--format must be csv or json");
  return out;
}

namespace {

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void emit(const ExperimentConfig& ec, const std::string& text, std::ostream& out) {
  if (ec.out.empty()) {
    out << text;
  } else {
    write_file_atomic(ec.out, text);
  }
}

std::vector<Edge> hint_pairs(const ExperimentConfig& ec, const GraphInstance& gi) {
  if (ec.transitive_pair == "auto") return gi.orbit_pairs;
  if (ec.transitive_pair == "none" || ec.transitive_pair.empty()) return {};
  std::vector<Edge> pairs;
  for (const auto& item : split_list(ec.transitive_pair, ';')) pairs.push_back(parse_pair(item));
  return pairs;
}

Json header(const ExperimentConfig& ec, const std::string& command) {
  return Json{{"command", command}, {"graph", ec.graph}, {"n", ec.n}, {"seed", ec.seed}};
}

/// "section.key" first, then the plain key.
std::optional<std::string> lookup(const Config& cfg, const std::string& section, const std::string& key) {
  if (auto v = cfg.get(section + "." + key)) return v;
  return cfg.get(key);
}

std::vector<double> lookup_doubles(const Config& cfg, const std::string& section, const std::string& key,
                                   std::vector<double> fallback) {
  const auto v = lookup(cfg, section, key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : split_list(*v)) {
    Config one;
    one.set("v", item);
    out.push_back(*one.get_double("v"));
  }
  return out;
}

MetricTable build_metric(const Graph& g, const std::string& spec) {
  if (spec == "graph") return MetricTable::graph_distance(g);
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    Config one;
    one.set("t", spec.substr(colon + 1));
    const double t = *one.get_double("t");
    const auto kind = spec.substr(0, colon);
    if (kind == "green") return MetricTable::green_metric(g, t, false);
    if (kind == "green-sym") return MetricTable::green_metric(g, t, true);
  }
  throw UsageError("unknown metric '" + spec + "'");
}

int cmd_gen(const ExperimentConfig& ec, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  std::ostringstream text;
  text << "# graph=" << ec.graph << " seed=" << ec.seed << "\n" << to_edge_list(gi.graph);
  emit(ec, text.str(), out);
  log << "gen: " << gi.graph.vertex_count() << " vertices, " << gi.graph.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_profile(const ExperimentConfig& ec, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  ProfileOptions options;
  options.transitive_pairs = hint_pairs(ec, gi);
  if (ec.budget) options.max_dense_sources = *ec.budget;
  const auto table = compute_profiles(gi.graph, ec.n, options);
  const std::string scope = table.scope() == TvScope::HintedPairs ? "hinted-pairs" : "all-neighbor-pairs";
  if (ec.format == "json") {
    Json j = header(ec, "profile");
    j["tv_scope"] = scope;
    Json rows = Json::array();
    for (const auto& e : table.entries())
      rows.push_back({{"m", e.m}, {"tv", e.tv}, {"dstar", e.dstar}, {"hstar", e.hstar}});
    j["profile"] = rows;
    emit(ec, json_text(j), out);
  } else {
    std::ostringstream text;
    text << "# graph=" << ec.graph << " n=" << ec.n << " seed=" << ec.seed << " tv_scope=" << scope << "\n"
         << table.to_csv();
    emit(ec, text.str(), out);
  }
  const auto& last = table.at(ec.n);
  log << "profile: n=" << ec.n << " tv=" << last.tv << " dstar=" << last.dstar << " hstar=" << last.hstar << "\n";
  return kExitOk;
}

int cmd_curvature(const ExperimentConfig& ec, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  const auto report = curvature_report(gi.graph, ec.budget ? *ec.budget : kDefaultCurvatureEdgeBudget);
  if (ec.format == "csv") {
    std::ostringstream text;
    text << "# graph=" << ec.graph << " seed=" << ec.seed << "\nu,v,ric_num,ric_den\n";
    for (const auto& e : report.edges)
      text << gi.graph.label(e.u) << "," << gi.graph.label(e.v) << "," << numerator(e.ricci) << ","
           << denominator(e.ricci) << "\n";
    emit(ec, text.str(), out);
  } else {
    Json j = header(ec, "curvature");
    j.erase("n");
    j.update(report.to_json(gi.graph));
    emit(ec, json_text(j), out);
  }
  log << "curvature: " << report.edges.size() << " edges, min " << to_string(report.min) << ", nonneg "
      << (report.nonneg ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_partition(const ExperimentConfig& ec, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  CertificateOptions options;
  options.calibration = ec.calib_c;
  options.lambda = ec.lambda;
  options.seeds = ec.seeds;
  options.root_seed = ec.seed;
  options.transitive_pairs = hint_pairs(ec, gi);
  const auto cert = theorem1_certificate(gi.graph, ec.n, options);
  Json j = header(ec, "partition");
  j["certificate"] = cert.to_json(gi.graph);
  emit(ec, json_text(j), out);
  log << "partition: n=" << ec.n << " tv=" << cert.tv_n << " "
      << (cert.cell ? "ratio=" + std::to_string(cert.cell->ratio) : std::string("no cell")) << " "
      << (cert.pass() ? "pass" : "FAIL") << "\n";
  return cert.pass() ? kExitOk : kExitAssertion;
}

struct AuditOutcome {
  Json detail;
  bool pass = true;
};

using AuditFn = std::function<AuditOutcome(const GraphInstance&, const ExperimentConfig&, const Config&)>;

AuditOutcome audit_tv_monotone(const GraphInstance& gi, const ExperimentConfig& ec, const Config&) {
  ProfileOptions options;
  options.transitive_pairs = hint_pairs(ec, gi);
  options.displacement = options.entropy = false;
  const auto table = compute_profiles(gi.graph, ec.n, options);
  AuditOutcome out;
  double worst = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < ec.n; ++m) {
    const double step = table.at(m + 1).tv - table.at(m).tv;
    worst = std::max(worst, step);
    if (step > 1e-12) out.pass = false;
  }
  out.detail = {{"largest_increase", worst}, {"tolerance", 1e-12}};
  return out;
}

AuditOutcome audit_ms(const GraphInstance& gi, const ExperimentConfig& ec, const Config&) {
  const auto report = curvature_report(gi.graph);
  const auto table = report.nonneg ? compute_profiles(gi.graph, ec.n, {hint_pairs(ec, gi), true, false, false})
                                   : ProfileTable({}, TvScope::AllNeighborPairs);
  const auto audit = audit_ms_tv_bound(gi.graph, table, report.nonneg);
  return {audit.to_json(), audit.pass()};
}

AuditOutcome audit_curv_iso(const GraphInstance& gi, const ExperimentConfig& ec, const Config&) {
  const auto& g = gi.graph;
  if (g.vertex_count() > kExhaustiveVertexLimit) throw BudgetError("exact isoperimetric profile needs <= 22 vertices");
  const auto report = curvature_report(g);
  const auto profile = isoperimetric_profile_exhaustive(g, g.total_volume() / 2);
  std::vector<IsoperimetricPoint> points;
  for (const auto& s : profile.steps()) points.push_back({s.volume, to_double(s.ratio), "exhaustive"});
  const double c = ec.calib_c.value_or(std::numeric_limits<double>::infinity());
  const auto audit = audit_curvature_isoperimetry(g, std::move(points), c, report.nonneg);
  Json detail = audit.to_json();
  if (!ec.calib_c) detail["calibration"] = nullptr;
  return {detail, audit.pass};
}

AuditOutcome audit_super(const GraphInstance& gi, const ExperimentConfig&, const Config& cfg) {
  AuditOutcome out;
  out.detail = Json::array();
  for (double t : lookup_doubles(cfg, "audit", "t", {2, 4, 8})) {
    const auto check = audit_supermultiplicativity(green_kernel(gi.graph, t));
    out.detail.push_back({{"t", t}, {"check", check.to_json()}});
    out.pass = out.pass && check.pass;
  }
  return out;
}

AuditOutcome audit_info(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  AuditOutcome out;
  double worst_expectation = std::numeric_limits<double>::infinity(), worst_pointwise = worst_expectation;
  const auto& g = gi.graph;
  for (double t : lookup_doubles(cfg, "audit", "t", {2, 4, 8})) {
    const auto kernel = green_kernel(g, t);
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      const auto rows = distribution(g, static_cast<Vertex>(x), ec.n);
      for (const auto& row : rows) {
        const auto a = audit_info_green(kernel, row);
        worst_expectation = std::min(worst_expectation, a.expectation.margin);
        worst_pointwise = std::min(worst_pointwise, a.pointwise.margin);
        out.pass = out.pass && a.pass();
      }
    }
  }
  out.detail = {{"worst_expectation_margin", worst_expectation}, {"worst_pointwise_margin", worst_pointwise}};
  return out;
}

AuditOutcome audit_tail_info(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  AuditOutcome out;
  const auto& g = gi.graph;
  const auto kernel = green_kernel(g, static_cast<double>(ec.n));
  double worst = std::numeric_limits<double>::infinity();
  for (double mu : lookup_doubles(cfg, "audit", "mu", {0.5, 1, 2, 4}))
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
      for (const auto& row : distribution(g, static_cast<Vertex>(x), ec.n)) {
        const auto check = audit_tail_info_vs_green(kernel, row, ec.n, mu);
        worst = std::min(worst, check.margin);
        out.pass = out.pass && check.pass;
      }
  out.detail = {{"worst_margin", worst}};
  return out;
}

std::vector<std::string> metric_specs(const Config& cfg) {
  const auto v = lookup(cfg, "audit", "metrics");
  return v ? split_list(*v) : std::vector<std::string>{"graph", "green:4"};
}

AuditOutcome audit_lemma(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  AuditOutcome out;
  out.detail = Json::array();
  const auto lambdas = lookup_doubles(cfg, "audit", "lambdas", {1, 3, 6, 10, 15});
  for (const auto& spec : metric_specs(cfg)) {
    const auto d = build_metric(gi.graph, spec);
    const auto records = audit_lemma_tail(gi.graph, d, ec.n, lambdas);
    out.pass = out.pass && all_pass(records);
    out.detail.push_back({{"metric", spec}, {"records", to_json(records)}});
  }
  return out;
}

AuditOutcome audit_triangle(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  AuditOutcome out;
  out.detail = Json::array();
  const auto radii = lookup_doubles(cfg, "audit", "radii", {1, 2, 3});
  for (const auto& spec : metric_specs(cfg)) {
    const auto d = build_metric(gi.graph, spec);
    if (d.kind() == MetricKind::GreenMetric && spec.rfind("green-sym", 0) != 0) {
      out.detail.push_back({{"metric", spec}, {"skipped", "triangle lemma needs a symmetric metric"}});
      continue;
    }
    const auto records = audit_triangle_lemma(gi.graph, d, ec.n, radii);
    out.pass = out.pass && all_pass(records);
    out.detail.push_back({{"metric", spec}, {"records", to_json(records)}});
  }
  return out;
}

AuditOutcome audit_median(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  AuditOutcome out;
  out.detail = Json::array();
  for (const auto& spec : metric_specs(cfg)) {
    const auto rec = audit_expectation_median(gi.graph, build_metric(gi.graph, spec), ec.n);
    out.pass = out.pass && rec.pass.value_or(true);
    out.detail.push_back({{"metric", spec}, {"record", rec.to_json()}});
  }
  return out;
}

AuditOutcome audit_upper(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  const auto lambdas = lookup_doubles(cfg, "audit", "lambdas", {1, 3, 6, 10, 15});
  const auto profile = compute_profiles(gi.graph, ec.n, {hint_pairs(ec, gi), false, true, true});
  const auto audit = audit_theorem_upper_tail(gi.graph, 0, ec.n, lambdas, profile);
  return {audit.to_json(), audit.pass()};
}

AuditOutcome audit_conditioning(const GraphInstance& gi, const ExperimentConfig& ec, const Config& cfg) {
  const auto& g = gi.graph;
  if (g.vertex_count() > kExactRowVertexLimit) throw BudgetError("exact rows need <= 64 vertices");
  const auto trials = std::stoll(lookup(cfg, "audit", "trials").value_or("100"));
  AuditOutcome out;
  long long failures = 0;
  for (long long k = 0; k < trials; ++k) {
    Engine eng(derive_seed(ec.seed, static_cast<std::uint64_t>(k)));
    const auto v = g.vertex_count();
    const auto x = static_cast<Vertex>(uniform_below(eng, v)), y = static_cast<Vertex>(uniform_below(eng, v));
    const int m1 = static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(ec.n) + 1));
    const int m2 = static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(ec.n) + 1));
    const auto p = distribution_exact(g, x, m1).back(), q = distribution_exact(g, y, m2).back();
    auto random_set = [&](Vertex anchor) {
      std::vector<Vertex> members{anchor};
      for (std::size_t z = 0; z < v; ++z)
        if (static_cast<Vertex>(z) != anchor && (eng() & 1)) members.push_back(static_cast<Vertex>(z));
      return VertexSet(g, members);
    };
    // The source keeps positive mass at every step of the lazy walk.
    const auto a = random_set(x), b = random_set(y);
    if (!tv_conditioning_audit(p, q, a, b).pass) ++failures;
  }
  out.pass = failures == 0;
  out.detail = {{"trials", trials}, {"failures", failures}};
  return out;
}

AuditOutcome audit_tvtilde(const GraphInstance& gi, const ExperimentConfig& ec, const Config&) {
  const auto& g = gi.graph;
  const auto profile = compute_profiles(g, ec.n, {hint_pairs(ec, gi)});
  const double c = ec.calib_c ? *ec.calib_c : default_calibration(g, ec.n, profile);
  const double lambda = ec.lambda ? *ec.lambda : certificate_lambda(c, profile.at(ec.n).tv);
  const auto laws = good_event_laws(g, ec.n, lambda, profile);
  const auto audit = tvtilde_exact(g, laws, profile.at(ec.n).tv);
  Json detail = audit.to_json();
  detail["lambda"] = std::isfinite(lambda) ? Json(lambda) : Json(nullptr);
  return {detail, audit.pass};
}

const std::map<std::string, AuditFn>& audit_table() {
  static const std::map<std::string, AuditFn> table{
      {"curvature-isoperimetry", audit_curv_iso},
      {"expectation-median", audit_median},
      {"info-green", audit_info},
      {"lemma-tail", audit_lemma},
      {"ms-tv-bound", audit_ms},
      {"supermultiplicativity", audit_super},
      {"tail-info-green", audit_tail_info},
      {"triangle-lemma", audit_triangle},
      {"tv-conditioning", audit_conditioning},
      {"tv-monotone", audit_tv_monotone},
      {"tvtilde", audit_tvtilde},
      {"upper-tail", audit_upper},
  };
  return table;
}

int cmd_audit(const ExperimentConfig& ec, const Config& cfg, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  std::vector<std::string> ids =
      cfg.has("audits") || cfg.has("audit.audits") ? split_list(*lookup(cfg, "audit", "audits")) : default_audit_suite();
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const auto& id : ids)
    if (!audit_table().count(id)) throw UsageError("unknown audit '" + id + "'");

  Json results = Json::array();
  bool all = true;
  int failed = 0, skipped = 0;
  for (const auto& id : ids) {
    Json entry{{"id", id}};
    try {
      const auto outcome = audit_table().at(id)(gi, ec, cfg);
      entry["status"] = outcome.pass ? "pass" : "fail";
      entry["detail"] = outcome.detail;
      if (!outcome.pass) {
        all = false;
        ++failed;
      }
    } catch (const BudgetError& e) {
      entry["status"] = "skipped";
      entry["reason"] = e.what();
      ++skipped;
    }
    results.push_back(std::move(entry));
  }
  Json j = header(ec, "audit");
  j["audits"] = results;
  j["pass"] = all;
  emit(ec, json_text(j), out);
  log << "audit: " << ids.size() << " audits, " << failed << " failed, " << skipped << " skipped\n";
  return all ? kExitOk : kExitAssertion;
}

int cmd_scaling(const ExperimentConfig& ec, const Config& cfg, std::ostream& out, std::ostream& log) {
  const auto gi = build_graph(ec.graph);
  const std::string quantity = lookup(cfg, "scaling", "quantity").value_or("tv");
  if (quantity != "tv" && quantity != "dstar" && quantity != "hstar")
    throw UsageError("scaling quantity must be tv, dstar or hstar");
  auto horizons = lookup_doubles(cfg, "scaling", "ns", {});
  if (horizons.empty())
    for (int m = 4; m <= ec.n; m *= 2) horizons.push_back(m);
  if (horizons.empty()) throw UsageError("no horizons to fit");
  const int top = static_cast<int>(*std::max_element(horizons.begin(), horizons.end()));
  ProfileOptions options;
  options.transitive_pairs = hint_pairs(ec, gi);
  options.tv = quantity == "tv";
  options.displacement = quantity == "dstar";
  options.entropy = quantity == "hstar";
  const auto table = compute_profiles(gi.graph, top, options);
  std::vector<std::pair<double, double>> series;
  for (double h : horizons) {
    const auto& e = table.at(static_cast<int>(h));
    series.emplace_back(h, quantity == "tv" ? e.tv : quantity == "dstar" ? e.dstar : e.hstar);
  }
  const auto fit = fit_power_law(series);
  Json j = header(ec, "scaling");
  j["n"] = top;
  j["quantity"] = quantity;
  j["fit"] = fit.to_json();
  int code = kExitOk;
  if (const auto expect = lookup(cfg, "scaling", "expect")) {
    Config one;
    one.set("e", *expect);
    one.set("tol", lookup(cfg, "scaling", "tolerance").value_or("0.1"));
    const double target = *one.get_double("e"), tol = *one.get_double("tol");
    const bool ok = std::abs(fit.exponent - target) <= tol;
    j["expected"] = {{"exponent", target}, {"tolerance", tol}, {"pass", ok}};
    if (!ok) code = kExitAssertion;
  }
  emit(ec, json_text(j), out);
  log << "scaling: " << quantity << " exponent " << fit.exponent << " residual " << fit.residual << "\n";
  return code;
}

}  // namespace

int run_command(const std::string& command, const Config& cfg, std::ostream& out, std::ostream& log) {
  try {
    const auto ec = ExperimentConfig::from(cfg);
    if (command == "gen") return cmd_gen(ec, out, log);
    if (command == "profile") return cmd_profile(ec, out, log);
    if (command == "curvature") return cmd_curvature(ec, out, log);
    if (command == "partition") return cmd_partition(ec, out, log);
    if (command == "audit") return cmd_audit(ec, cfg, out, log);
    if (command == "scaling") return cmd_scaling(ec, cfg, out, log);
    throw UsageError("unknown command '" + command + "'");
  } catch (const BudgetError& e) {
    log << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DegeneracyError& e) {
    log << "assertion failure: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const NumericError& e) {
    log << "assertion failure: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace isoprofile
