#include "eur/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "eur/parallel.hpp"
#include "eur/random.hpp"
#include "eur/states.hpp"

namespace eur {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kMaxRecordedFailures = 20;

// Maps library exceptions onto exit codes, reporting the message on `err`.
template <typename Body>
int guarded(std::ostream& err, const char* command, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "eur " << command << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "eur " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

int emit(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << payload;
  if (!file) throw IoError("cannot write " + path);
  return kExitOk;
}

ojson named_values(const std::vector<NamedValue>& values) {
  ojson out = ojson::object();
  for (const auto& v : values) out[v.name] = v.value;
  return out;
}

std::string memory_name(std::size_t memory) { return memory == kMemoryB ? "B" : "C"; }

ojson row_json(const SweepRow& r) {
  return ojson{{"param", r.param},         {"U", r.U},
               {"L1", r.L1},               {"L2", r.L2},
               {"delta", r.delta},         {"delta_prime", r.delta_prime},
               {"S_AB", r.S_AB},           {"S_AC", r.S_AC},
               {"I_AB", r.I_AB},           {"I_AC", r.I_AC},
               {"holevo_sum", r.holevo_sum}, {"slack_L1", r.slack_L1},
               {"slack_L2", r.slack_L2}};
}

}  // namespace

std::size_t threads_from_env() {
  const char* raw = std::getenv("EUR_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return 1;
  return static_cast<std::size_t>(value);
}

MeasurementScenario pauli_case_scenario(int case_id) {
  auto [x, y, z] = pauli_bases();
  switch (case_id) {
    case 1:
      return MeasurementScenario({x, y, z}, 2);
    case 2:
      return MeasurementScenario({x, y, z}, 1);
    default:
      throw ContractError("case must be 1 or 2, got " + std::to_string(case_id));
  }
}

SweepRow sweep_row(const std::string& family, double param, int case_id, double phi) {
  const auto scenario = pauli_case_scenario(case_id);
  DensityOperator rho = [&] {
    if (family == "werner") return make_werner(param);
    if (family == "wstate") return make_generalized_w(param, phi);
    throw ContractError("unknown family '" + family + "' (expected werner or wstate)");
  }();
  const auto report = case_quantities(rho, scenario);
  const auto& t = report.entropy_terms;
  return {param,
          report.uncertainty_U,
          report.theorem1_bound,
          report.coles_bound.value(),
          report.delta,
          report.delta_prime.value(),
          t.cond_A_given_B,
          t.cond_A_given_C,
          t.mutual_A_B,
          t.mutual_A_C,
          report.holevo_sum,
          report.slack_L1,
          report.slack_L2.value()};
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, "sweep", [&] {
    double start = 0.0;
    double end = 0.0;
    if (opts.family == "werner") {
      end = 1.0;
    } else if (opts.family == "wstate") {
      end = std::numbers::pi;
    } else {
      throw ContractError("unknown family '" + opts.family + "' (expected werner or wstate)");
    }
    start = opts.param_start.value_or(start);
    end = opts.param_end.value_or(end);
    if (opts.case_id != 1 && opts.case_id != 2) throw ContractError("--case must be 1 or 2");
    if (opts.format != "csv" && opts.format != "json") {
      throw ContractError("--format must be csv or json");
    }
    if (opts.steps == 0) throw ContractError("--steps must be >= 1");

    const auto grid = linear_grid(start, end, opts.steps);
    std::vector<SweepRow> rows(grid.size());
    parallel_for_index(grid.size(), opts.threads, [&](std::size_t k) {
      rows[k] = sweep_row(opts.family, grid[k], opts.case_id, opts.phi);
    });

    // Rows are emitted in parameter order up to the first violation.
    std::size_t valid = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].slack_L1 < -opts.tol || rows[k].slack_L2 < -opts.tol) {
        valid = k;
        break;
      }
    }
    std::vector<SweepRow> emitted(rows.begin(), rows.begin() + static_cast<long>(valid));

    std::ostringstream payload;
    if (opts.format == "csv") {
      write_csv(payload, emitted);
    } else {
      ojson doc{{"family", opts.family}, {"case", opts.case_id}};
      if (opts.family == "wstate") doc["phi"] = opts.phi;
      doc["rows"] = ojson::array();
      for (const auto& r : emitted) doc["rows"].push_back(row_json(r));
      payload << doc.dump(2) << '\n';
    }
    const int io = emit(opts.output, payload.str(), out);
    if (io != kExitOk) return io;

    double min_l1 = std::numeric_limits<double>::infinity();
    double max_l1 = -min_l1;
    double min_l2 = min_l1;
    double max_l2 = -min_l1;
    for (const auto& r : rows) {
      min_l1 = std::min(min_l1, r.slack_L1);
      max_l1 = std::max(max_l1, r.slack_L1);
      min_l2 = std::min(min_l2, r.slack_L2);
      max_l2 = std::max(max_l2, r.slack_L2);
    }
    auto saturated = [&](double lo, double hi) {
      return lo >= -opts.tol && hi <= opts.tol ? "yes" : "no";
    };
    err << "sweep " << opts.family << " case " << opts.case_id << ": " << rows.size()
        << " points, slack_L1 in [" << format_real(min_l1) << ", " << format_real(max_l1)
        << "], slack_L2 in [" << format_real(min_l2) << ", " << format_real(max_l2)
        << "], L1 saturated: " << saturated(min_l1, max_l1)
        << ", L2 saturated: " << saturated(min_l2, max_l2) << '\n';
    if (valid != rows.size()) {
      err << "sweep: inequality violated at param " << format_real(rows[valid].param)
          << " (slack_L1 " << format_real(rows[valid].slack_L1) << ", slack_L2 "
          << format_real(rows[valid].slack_L2) << ")\n";
      return static_cast<int>(kExitViolation);
    }
    return static_cast<int>(kExitOk);
  });
}

std::string bound_report_json(const BoundReport& r) {
  const auto& t = r.entropy_terms;
  ojson doc;
  doc["uncertainty_U"] = r.uncertainty_U;
  doc["theorem1_bound"] = r.theorem1_bound;
  doc["coles_bound"] = r.coles_bound ? ojson(*r.coles_bound) : ojson(nullptr);
  doc["generic_bounds"] = named_values(r.generic_bounds);
  doc["delta"] = r.delta;
  doc["delta_prime"] = r.delta_prime ? ojson(*r.delta_prime) : ojson(nullptr);
  doc["complementarity"] = named_values(r.complementarity);
  doc["entropy_terms"] = {{"S_A", t.entropy_A},
                          {"S_A_given_B", t.cond_A_given_B},
                          {"S_A_given_C", t.cond_A_given_C},
                          {"I_A_B", t.mutual_A_B},
                          {"I_A_C", t.mutual_A_C}};
  doc["measurements"] = ojson::array();
  for (const auto& m : r.measurements) {
    doc["measurements"].push_back({{"label", m.label},
                                   {"memory", memory_name(m.memory)},
                                   {"outcome_entropy", m.outcome_entropy},
                                   {"conditional_entropy", m.conditional_entropy},
                                   {"holevo", m.holevo}});
  }
  doc["holevo_sum"] = r.holevo_sum;
  doc["slack"] = r.slack;
  doc["slack_L1"] = r.slack_L1;
  doc["slack_L2"] = r.slack_L2 ? ojson(*r.slack_L2) : ojson(nullptr);
  doc["holds_L1"] = r.holds_L1;
  doc["holds_L2"] = r.holds_L2 ? ojson(*r.holds_L2) : ojson(nullptr);
  return doc.dump(2) + "\n";
}

int cmd_bound(const BoundOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, "bound", [&] {
    if (opts.state.empty()) throw ContractError("--state is required");
    if (opts.partition.empty()) throw ContractError("--partition is required");
    const auto rho = read_state_file(opts.state);
    const auto scenario = parse_partition(opts.partition, resolve_measurements(opts.measurements));
    auto report = case_quantities(rho, scenario);
    std::string payload = bound_report_json(report);
    if (opts.external_lb) {
      auto doc = ojson::parse(payload);
      doc["external_lb"] = *opts.external_lb;
      doc["external_converted"] = generic_tripartite_bound(*opts.external_lb, rho, scenario);
      payload = doc.dump(2) + "\n";
    }
    out << payload;
    const bool ok = report.holds_L1 && report.holds_L2.value_or(true) &&
                    report.slack >= -kInequalityTol;
    if (!ok) {
      err << "bound: inequality violated (slack " << format_real(report.slack) << ")\n";
      return static_cast<int>(kExitViolation);
    }
    return static_cast<int>(kExitOk);
  });
}

namespace {

struct ItemResult {
  std::size_t checked = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_identity = 0.0;
  std::vector<VerifyFailure> failures;
};

class Checker {
 public:
  Checker(std::size_t index, double tol, double identity_tol)
      : index_(index), tol_(tol), identity_tol_(identity_tol) {}

  // lhs >= rhs within tolerance.
  void at_least(const std::string& name, double lhs, double rhs, double tol) {
    ++result_.checked;
    const double margin = lhs - rhs;
    result_.worst_margin = std::min(result_.worst_margin, margin);
    if (!(margin >= -tol)) result_.failures.push_back({index_, name, margin});
  }
  void inequality(const std::string& name, double lhs, double rhs) {
    at_least(name, lhs, rhs, tol_);
  }
  void identity(const std::string& name, double lhs, double rhs) {
    ++result_.checked;
    const double error = std::abs(lhs - rhs);
    result_.worst_identity = std::max(result_.worst_identity, error);
    if (!(error <= identity_tol_)) result_.failures.push_back({index_, name, -error});
  }
  double identity_tol() const { return identity_tol_; }
  ItemResult take() { return std::move(result_); }

 private:
  std::size_t index_;
  double tol_;
  double identity_tol_;
  ItemResult result_;
};

void check_scenario(Checker& check, const DensityOperator& rho,
                    const MeasurementScenario& scenario, const std::string& tag) {
  const auto report = case_quantities(rho, scenario);
  const double u = report.uncertainty_U;
  check.inequality(tag + ":theorem1", u, report.theorem1_bound);
  for (const auto& g : report.generic_bounds) {
    if (g.name == "corollary1") {
      check.inequality(tag + ":corollary1", u, g.value);
      check.at_least(tag + ":corollary1>=theorem1", g.value, report.theorem1_bound,
                     check.identity_tol());
    }
  }
  if (report.coles_bound) {
    check.inequality(tag + ":coles", u, *report.coles_bound);
    if (report.delta > 1e-6) {
      check.identity(tag + ":L2-L1", *report.coles_bound - report.theorem1_bound,
                     1.0 - report.entropy_terms.entropy_A);
    }
  }

  double outcome_total = 0.0;
  double split_total = 0.0;
  for (const auto& m : report.measurements) {
    outcome_total += m.outcome_entropy;
    split_total += m.conditional_entropy + m.holevo;
    const double s_mem = von_neumann_entropy(rho.reduce(Subsystems{m.memory}));
    check.at_least(tag + ":holevo>=0(" + m.label + ")", m.holevo, 0.0, check.identity_tol());
    check.at_least(tag + ":holevo<=S(mem)(" + m.label + ")", s_mem, m.holevo,
                   check.identity_tol());
  }
  check.identity(tag + ":decomposition", outcome_total, split_total);

  // Two-measurement sub-case: first basis guessed by B, last by C.
  const auto& x = scenario.bases().front();
  const auto& z = scenario.bases().back();
  const MeasurementScenario pair({x, z}, 1);
  const double u2 = uncertainty(rho, pair);
  check.inequality(tag + ":tripartite_mu", u2, tripartite_mu_bound(x, z));
  check.inequality(tag + ":dolat", u2, dolat_two_measurement_bound(rho, pair).bound);
  for (std::size_t memory : {kMemoryB, kMemoryC}) {
    const double same_memory =
        measured_conditional_entropy(rho, x, kSubsystemA, {memory}) +
        measured_conditional_entropy(rho, z, kSubsystemA, {memory});
    check.inequality(tag + ":berta(" + memory_name(memory) + ")", same_memory,
                     berta_bound(rho, x, z, memory));
  }
}

ItemResult verify_item(const VerifyOptions& opts, std::size_t index, double identity_tol) {
  Checker check(index, opts.tol, identity_tol);
  const std::uint64_t item_seed = stream_seed(opts.seed, index);
  const auto rho = index % 4 == 3 ? random_pure(opts.dims, item_seed)
                                  : random_density(opts.dims, item_seed);

  const auto t = correlation_terms(rho);
  check.identity("entropy_split", t.entropy_A,
                 0.5 * (t.cond_A_given_B + t.cond_A_given_C) +
                     0.5 * (t.mutual_A_B + t.mutual_A_C));
  check.at_least("strong_subadditivity", t.cond_A_given_B + t.cond_A_given_C, 0.0,
                 identity_tol);

  const std::size_t dim_a = opts.dims[kSubsystemA];
  if (dim_a == 2) {
    check_scenario(check, rho, pauli_case_scenario(1), "case1");
    check_scenario(check, rho, pauli_case_scenario(2), "case2");
    const auto z = pauli_bases()[2];
    const double dephased =
        von_neumann_entropy(measure_subsystem(rho, z, kSubsystemA).post_state);
    check.at_least("dephasing", dephased, von_neumann_entropy(rho), identity_tol);
  }
  if (index < opts.random_triples || dim_a != 2) {
    std::vector<ProjectiveBasis> bases;
    for (std::uint64_t b = 0; b < 3; ++b) {
      bases.push_back(random_basis(dim_a, stream_seed(item_seed, b + 1),
                                   std::string(1, static_cast<char>('a' + b))));
    }
    check_scenario(check, rho, MeasurementScenario(std::move(bases), index % 4), "random");
  }
  return check.take();
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.count < 1) throw ContractError("--count must be >= 1");
  if (opts.dims.size() != 3) throw ContractError("--dims must list three subsystems");
  if (!(opts.tol >= 0.0)) throw ContractError("--tol must be non-negative");
  const double identity_tol = std::min(kDefaultIdentityTol, opts.tol);

  std::vector<ItemResult> items(opts.count);
  parallel_for_index(opts.count, opts.threads, [&](std::size_t k) {
    items[k] = verify_item(opts, k, identity_tol);
  });

  VerifyReport report;
  report.seed = opts.seed;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (auto& item : items) {
    report.checked += item.checked;
    report.violations += item.failures.size();
    report.worst_margin = std::min(report.worst_margin, item.worst_margin);
    report.worst_identity_error = std::max(report.worst_identity_error, item.worst_identity);
    for (auto& f : item.failures) {
      const auto colon = f.check.find(':');
      ++report.violations_by_check[colon == std::string::npos ? f.check
                                                              : f.check.substr(colon + 1)];
      if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back(std::move(f));
    }
  }
  return report;
}

std::string verify_report_json(const VerifyReport& report, const VerifyOptions& opts) {
  ojson doc;
  doc["checked"] = report.checked;
  doc["violations"] = report.violations;
  doc["worst_margin"] = report.worst_margin;
  doc["worst_identity_error"] = report.worst_identity_error;
  doc["seed"] = report.seed;
  doc["count"] = opts.count;
  doc["dims"] = opts.dims;
  doc["tol"] = opts.tol;
  doc["violations_by_check"] = report.violations_by_check;
  doc["failures"] = ojson::array();
  for (const auto& f : report.failures) {
    doc["failures"].push_back({{"index", f.index}, {"check", f.check}, {"margin", f.margin}});
  }
  return doc.dump(2) + "\n";
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, "verify", [&] {
    const auto report = run_verify(opts);
    out << verify_report_json(report, opts);
    err << "verify: " << report.checked - report.violations << " passed, "
        << report.violations << " failed, worst margin " << format_real(report.worst_margin)
        << ", worst identity error " << format_real(report.worst_identity_error) << '\n';
    for (const auto& f : report.failures) {
      err << "  replay: --seed " << report.seed << " index " << f.index << " check "
          << f.check << " margin " << format_real(f.margin) << '\n';
    }
    return static_cast<int>(report.violations == 0 ? kExitOk : kExitViolation);
  });
}

int cmd_constants(const ConstantsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, "constants", [&] {
    const auto bases = resolve_measurements(opts.measurements);
    if (bases.size() < 2) throw ContractError("constants need at least two bases");
    const std::size_t d = bases.front().dim();
    const auto rho_a = opts.state.empty()
                           ? make_maximally_mixed({d})
                           : read_state_file(opts.state).reduce(Subsystems{kSubsystemA});

    ojson doc;
    ojson labels = ojson::array();
    for (const auto& b : bases) labels.push_back(b.label());
    doc["bases"] = labels;
    doc["pairs"] = ojson::array();
    for (std::size_t a = 0; a < bases.size(); ++a) {
      for (std::size_t b = a + 1; b < bases.size(); ++b) {
        const auto mu = mu_constant(bases[a], bases[b]);
        doc["pairs"].push_back({{"pair", bases[a].label() + "," + bases[b].label()},
                                {"c", mu.c},
                                {"q_MU", mu.q_mu}});
      }
    }
    const auto liu = liu_constant(bases);
    doc["b"] = liu.b;
    doc["neg_log_b"] = liu.neg_log_b;
    doc["rho_A"] = opts.state.empty() ? "maximally_mixed" : opts.state;
    if (bases.size() <= kMaxZhangMeasurements) {
      ojson orderings = ojson::array();
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& o : zhang_orderings(bases, rho_a)) {
        std::string name;
        for (std::size_t k : o.order) name += (name.empty() ? "" : ",") + bases[k].label();
        orderings.push_back({{"order", name}, {"value", o.value}});
        best = std::max(best, o.value);
      }
      doc["zhang"] = {{"orderings", orderings}, {"max", best}};
    } else {
      doc["zhang"] = nullptr;
    }
    doc["majorization"] =
        "unsupported: supply the universal majorization bound externally via "
        "'bound --external-lb'";
    out << doc.dump(2) << '\n';
    return static_cast<int>(kExitOk);
  });
}

}  // namespace eur
