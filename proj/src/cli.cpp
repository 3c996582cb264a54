#include "gatesmith/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "gatesmith/angle.hpp"
#include "gatesmith/circuit_json.hpp"
#include "gatesmith/completeness.hpp"
#include "gatesmith/density.hpp"
#include "gatesmith/errors.hpp"
#include "gatesmith/spectrum.hpp"
#include "gatesmith/synthesis.hpp"

namespace gatesmith::cli {
namespace {

using synthesis::AncillaPolicy;
using synthesis::BasisSpec;

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return kIoFailure;
  }
  f << text;
  f.close();
  if (!f) {
    err << "error: failed writing " << path << "\n";
    return kIoFailure;
  }
  return kOk;
}

Json params_json(const synthesis::SynthesisParams& p) {
  Json j;
  j["k1"] = p.k1;
  j["k2"] = p.k2;
  j["gamma"] = p.gamma;
  j["grover_T"] = p.grover_T;
  j["policy"] = synthesis::to_string(p.policy);
  return j;
}

Json report_json(const Angle& alpha, const BasisSpec& basis, double eps,
                 const synthesis::SynthesisResult& result) {
  const auto& r = result.report;
  Json j;
  j["alpha"] = alpha.radians();
  j["theta"] = basis.s_theta.radians();
  j["s_is_reflection"] = basis.s_is_reflection;
  j["eps"] = eps;
  j["achieved_error"] = r.verified ? Json(r.achieved_error) : Json(nullptr);
  j["bound_error"] = r.bound_error;
  j["verified"] = r.verified;
  if (!r.verification_note.empty()) j["verification_note"] = r.verification_note;
  j["gate_counts"] = Json::object();
  for (const auto& [k, v] : r.gate_counts) j["gate_counts"][k] = v;
  j["size"] = r.size;
  j["ancilla_count"] = r.ancilla_count;
  j["total_qubits"] = r.total_qubits;
  j["sigma_z_uses"] = r.sigma_z_uses;
  j["split"] = r.split;
  j["params"] = params_json(r.params);
  return j;
}

// -- bench ----------------------------------------------------------------------

struct Grid {
  std::vector<Angle> theta, alpha;
  std::vector<double> eps;
};

Grid default_grid() {
  Grid g;
  g.theta = {Angle::parse("pi/6"), Angle::parse("pi/5"), Angle(1.0)};
  g.alpha = {Angle::parse("pi/3"), Angle(0.7), Angle(2.0)};
  g.eps = {0.2, 0.1, 0.05};
  return g;
}

Angle angle_from_json(const Json& v) {
  if (v.is_string()) return Angle::parse(v.get<std::string>());
  if (v.is_number()) return Angle(v.get<double>());
  throw PreconditionError("grid angles must be numbers or strings");
}

Grid parse_grid(const Json& j) {
  if (!j.is_object()) throw PreconditionError("grid must be a JSON object");
  Grid g;
  for (const char* key : {"theta", "alpha", "eps"}) {
    if (!j.contains(key) || !j[key].is_array()) {
      throw PreconditionError(std::string("grid needs an array '") + key + "'");
    }
  }
  for (const auto& v : j["theta"]) g.theta.push_back(angle_from_json(v));
  for (const auto& v : j["alpha"]) g.alpha.push_back(angle_from_json(v));
  for (const auto& v : j["eps"]) {
    if (!v.is_number()) throw PreconditionError("grid eps values must be numbers");
    g.eps.push_back(v.get<double>());
  }
  return g;
}

struct BenchRow {
  double theta = 0, alpha = 0, eps = 0;
  std::int64_t size = 0, ancillae = 0;
  double achieved = std::nan("");
  double bound = 0;
  bool verified = false;
  int k1 = 0, k2 = 0, T = 0;
  std::string note;
};

struct ScalingRow {
  double theta, alpha, eps_from, eps_to, ratio, model;
  bool within_envelope;
};

std::vector<ScalingRow> scaling_summary(const std::vector<BenchRow>& rows) {
  std::map<std::pair<double, double>, std::vector<const BenchRow*>> groups;
  for (const auto& r : rows) {
    if (r.note.empty() || r.size > 0) groups[{r.theta, r.alpha}].push_back(&r);
  }
  std::vector<ScalingRow> out;
  for (auto& [key, list] : groups) {
    std::sort(list.begin(), list.end(), [](auto* a, auto* b) { return a->eps > b->eps; });
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      const BenchRow& a = *list[i];
      const BenchRow& b = *list[i + 1];
      if (std::abs(a.eps / b.eps - 2.0) > 1e-9 || a.size <= 0) continue;
      const double ratio = static_cast<double>(b.size) / static_cast<double>(a.size);
      const double model = 2.0 * (1.0 + std::log(2.0) / std::log(1.0 / a.eps));
      out.push_back({key.first, key.second, a.eps, b.eps, ratio, model,
                     ratio <= 3.0 * model && ratio >= model / 3.0});
    }
  }
  return out;
}

// -- completeness ---------------------------------------------------------------

struct Check {
  std::string name;
  bool asserted;
  bool passed;
  Json value;
  Json expected;
};

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["asserted"] = c.asserted;
    j["passed"] = c.passed;
    j["value"] = c.value;
    if (!c.expected.is_null()) j["expected"] = c.expected;
    arr.push_back(j);
  }
  return arr;
}

Json escape_json(const completeness::EscapeCheck& c) {
  Json j;
  j["operator"] = c.operator_id;
  j["preserved"] = c.preserved;
  j["preservation_residuals"] = c.preservation_residuals;
  j["escaped_from"] = c.escaped_from;
  j["escape_margin"] = c.escape_margin;
  j["holds"] = c.holds();
  return j;
}

Json spectrum_json(const EigenSummary& s) {
  Json j;
  j["dim"] = s.dim;
  j["plus_one_multiplicity"] = s.plus_one_multiplicity;
  j["minus_one_multiplicity"] = s.minus_one_multiplicity;
  Json rot = Json::array();
  for (const auto& b : s.rotations) rot.push_back({{"angle", b.angle}, {"multiplicity", b.multiplicity}});
  j["rotations"] = rot;
  return j;
}

Json witness_json(const completeness::IrrationalityWitness& w) {
  Json j;
  j["value_over_pi"] = w.value_over_pi;
  j["q_max"] = w.q_max;
  if (w.best_rational) {
    j["rational"] = {w.best_rational->first, w.best_rational->second};
  } else {
    j["rational"] = nullptr;
  }
  j["best_convergent"] = {w.best_convergent.first, w.best_convergent.second};
  j["residual"] = w.residual;
  return j;
}

RealOperator single_gate(int n, GateKind kind, std::vector<int> qubits) {
  Circuit c(n);
  c.add(std::move(kind), std::move(qubits));
  return circuit_unitary(c);
}

}  // namespace

// -----------------------------------------------------------------------------

int effective_max_qubits(int flag_value) {
  if (const char* env = std::getenv("GATESMITH_MAX_QUBITS")) {
    int v = 0;
    const std::string s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size() && v > 0) return v;
  }
  return flag_value;
}

int cmd_synthesize(const SynthesizeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const Angle alpha = Angle::parse(args.alpha);
    const BasisSpec basis{Angle::parse(args.theta), args.reflection};
    synthesis::SynthesisOptions opt;
    opt.policy = synthesis::parse_policy(args.policy);
    opt.max_qubits = effective_max_qubits(args.max_qubits);
    opt.build_circuit = !args.circuit_out.empty();
    const auto result = synthesis::synthesize(alpha, basis, args.eps, opt);
    if (!args.circuit_out.empty()) {
      const std::string text = result.materialized ? circuit_to_json(result.circuit).dump(2) + "\n" : "null\n";
      if (int rc = emit(text, args.circuit_out, out, err); rc != kOk) return rc;
    }
    Json report = report_json(alpha, basis, args.eps, result);
    if (!result.ancilla_bits.empty()) report["ancilla_bits"] = result.ancilla_bits;
    if (int rc = emit(report.dump(2) + "\n", args.out, out, err); rc != kOk) return rc;
    const auto& r = result.report;
    if (r.verified) return r.achieved_error <= args.eps ? kOk : kCheckFailed;
    return r.bound_error <= args.eps ? kOk : kCheckFailed;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
}

int cmd_verify_completeness(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  using namespace completeness;
  std::vector<Check> checks;
  Json doc;
  doc["case"] = args.case_name;
  try {
    if (args.case_name == "toffoli") {
      const RealOperator u = build_theorem4_U();
      const EigenSummary s = rotation_spectrum(u);
      const double expected = theorem4_expected_angle();
      checks.push_back({"plus_one_multiplicity", true, s.plus_one_multiplicity == 6, s.plus_one_multiplicity, 6});
      const bool one_block = s.rotation_count() == 1;
      const double angle = one_block ? s.rotations.front().angle : std::nan("");
      checks.push_back({"rotation_angle", true, one_block && std::abs(angle - expected) < 1e-10,
                        one_block ? Json(angle) : Json(nullptr), expected});
      checks.push_back({"trace", true, std::abs(u.trace() - 4.5) < 1e-12, u.trace(), 4.5});
      checks.push_back({"exact_charpoly", true, check_theorem4_charpoly(), check_theorem4_charpoly(), true});
      const auto w = rational_witness(expected / M_PI, 1'000'000);
      checks.push_back({"no_small_rational_multiple_of_pi", true, !w.best_rational, witness_json(w), nullptr});
      doc["spectrum"] = spectrum_json(s);
      const Theorem4Escape esc = stabilizer_escape_suite_theorem4();
      Json e = Json::array();
      for (const auto& c : esc.checks) e.push_back(escape_json(c));
      doc["escape"] = e;
      doc["escape_chain_ordering"] = esc.chain_ordering ? Json(*esc.chain_ordering) : Json(nullptr);
      for (const auto& c : esc.checks) {
        checks.push_back({"escape_" + c.operator_id, false, c.holds(), c.escape_margin, nullptr});
      }
    } else if (args.case_name == "cnot") {
      if (!args.theta) {
        err << "precondition violated: --theta is required for case cnot\n";
        return kPrecondition;
      }
      const Angle theta = Angle::parse(*args.theta);
      if (theta.is_multiple_of_quarter_pi()) {
        err << "precondition violated: theta = " << theta.to_string()
            << " is a multiple of pi/4, so S is not basis-changing after squaring\n";
        return kPrecondition;
      }
      doc["theta"] = theta.radians();
      const RealOperator u = build_theorem3_U(theta);
      const EigenSummary s = rotation_spectrum(u);
      const double expected = theorem3_expected_angle(theta);
      checks.push_back({"plus_one_multiplicity", true, s.plus_one_multiplicity == 2, s.plus_one_multiplicity, 2});
      const bool one_block = s.rotation_count() == 1;
      const double angle = one_block ? s.rotations.front().angle : std::nan("");
      checks.push_back({"rotation_angle", true, one_block && std::abs(angle - expected) < 1e-9,
                        one_block ? Json(angle) : Json(nullptr), expected});
      const auto w = rational_witness(expected / M_PI, 1'000'000);
      checks.push_back({"no_small_rational_multiple_of_pi", false, !w.best_rational, witness_json(w), nullptr});
      doc["spectrum"] = spectrum_json(s);
      const Theorem3Escape esc = stabilizer_escape_suite_theorem3(theta);
      checks.push_back({"xi1_eigen_residual", true, esc.xi1_eigen_residual < 1e-10, esc.xi1_eigen_residual, nullptr});
      Json e = Json::array();
      for (const auto& c : esc.checks) {
        e.push_back(escape_json(c));
        checks.push_back({"escape_" + c.operator_id, true, c.holds(), c.escape_margin, nullptr});
      }
      doc["escape"] = e;
    } else {
      err << "precondition violated: --case must be cnot or toffoli\n";
      return kPrecondition;
    }
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DegeneracyError& e) {
    err << "degenerate spectrum: " << e.what() << "\n";
    return kCheckFailed;
  }
  bool passed = true;
  for (const auto& c : checks) passed = passed && (!c.asserted || c.passed);
  doc["checks"] = checks_json(checks);
  doc["passed"] = passed;
  if (int rc = emit(doc.dump(2) + "\n", args.out, out, err); rc != kOk) return rc;
  return passed ? kOk : kCheckFailed;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  Grid grid;
  AncillaPolicy policy;
  try {
    policy = synthesis::parse_policy(args.policy);
    if (args.format != "csv" && args.format != "json") throw PreconditionError("--format must be csv or json");
    if (args.grid.empty()) {
      grid = default_grid();
    } else {
      std::ifstream f(args.grid);
      if (!f) {
        err << "error: cannot read grid file " << args.grid << "\n";
        return kIoFailure;
      }
      Json j;
      try {
        j = Json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed grid: ") + e.what());
      }
      grid = parse_grid(j);
    }
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
  if (grid.theta.empty() || grid.alpha.empty() || grid.eps.empty()) {
    err << "precondition violated: empty grid\n";
    return kPrecondition;
  }

  struct Cell {
    Angle theta, alpha;
    double eps;
  };
  std::vector<Cell> cells;
  for (const auto& t : grid.theta)
    for (const auto& a : grid.alpha)
      for (double e : grid.eps) cells.push_back({t, a, e});

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  const int max_qubits = effective_max_qubits(args.max_qubits);
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      BenchRow& row = rows[i];
      row.theta = c.theta.radians();
      row.alpha = c.alpha.radians();
      row.eps = c.eps;
      try {
        synthesis::SynthesisOptions opt;
        opt.policy = policy;
        opt.max_qubits = max_qubits;
        opt.build_circuit = false;
        const auto res = synthesis::synthesize(c.alpha, BasisSpec{c.theta, false}, c.eps, opt);
        const auto& r = res.report;
        row.size = r.size;
        row.ancillae = r.ancilla_count;
        row.achieved = r.verified ? r.achieved_error : std::nan("");
        row.verified = r.verified;
        row.bound = r.bound_error;
        row.k1 = r.params.k1;
        row.k2 = r.params.k2;
        row.T = r.params.grover_T;
        row.note = r.verification_note;
      } catch (const std::exception& e) {
        row.note = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads =
      std::min<unsigned>(args.threads > 0 ? static_cast<unsigned>(args.threads) : hw,
                         static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.theta, a.alpha, a.eps) < std::tie(b.theta, b.alpha, b.eps);
  });
  const auto scaling = scaling_summary(rows);

  bool errors = false, violations = false;
  for (const auto& r : rows) {
    errors = errors || r.note.rfind("error:", 0) == 0;
    violations = violations || (r.verified && r.achieved > r.eps);
  }

  std::ostringstream text;
  if (args.format == "csv") {
    text << "theta,alpha,eps,size,ancillae,achieved_error,bound_error,verified,k1,k2,T,note\n";
    for (const auto& r : rows) {
      text << fmt(r.theta) << ',' << fmt(r.alpha) << ',' << fmt(r.eps) << ',' << r.size << ','
           << r.ancillae << ',' << fmt(r.achieved) << ',' << fmt(r.bound) << ','
           << (r.verified ? "true" : "false") << ',' << r.k1 << ',' << r.k2 << ',' << r.T << ",\""
           << r.note << "\"\n";
    }
    for (const auto& s : scaling) {
      text << "# scaling theta=" << fmt(s.theta) << " alpha=" << fmt(s.alpha) << " eps=" << fmt(s.eps_from)
           << "->" << fmt(s.eps_to) << " size_ratio=" << fmt(s.ratio) << " model_ratio=" << fmt(s.model)
           << " within_factor_3=" << (s.within_envelope ? "true" : "false") << "\n";
    }
  } else {
    Json doc;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["theta"] = r.theta;
      j["alpha"] = r.alpha;
      j["eps"] = r.eps;
      j["size"] = r.size;
      j["ancillae"] = r.ancillae;
      j["achieved_error"] = r.verified ? Json(r.achieved) : Json(nullptr);
      j["bound_error"] = r.bound;
      j["verified"] = r.verified;
      j["k1"] = r.k1;
      j["k2"] = r.k2;
      j["T"] = r.T;
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(j);
    }
    doc["rows"] = arr;
    Json sc = Json::array();
    for (const auto& s : scaling) {
      sc.push_back({{"theta", s.theta},
                    {"alpha", s.alpha},
                    {"eps_from", s.eps_from},
                    {"eps_to", s.eps_to},
                    {"size_ratio", s.ratio},
                    {"model_ratio", s.model},
                    {"within_factor_3", s.within_envelope}});
    }
    doc["scaling"] = sc;
    text << doc.dump(2) << "\n";
  }
  if (int rc = emit(text.str(), args.out, out, err); rc != kOk) return rc;
  if (errors) return kPrecondition;
  return violations ? kCheckFailed : kOk;
}

int cmd_density_probe(const DensityArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<RealOperator> gens;
  try {
    if (args.format != "csv" && args.format != "json") throw PreconditionError("--format must be csv or json");
    if (args.case_name == "toffoli") {
      for (int q = 0; q < 3; ++q) gens.push_back(single_gate(3, gates::H{}, {q}));
      gens.push_back(single_gate(3, gates::Toffoli{}, {0, 1, 2}));
      gens.push_back(single_gate(3, gates::Toffoli{}, {0, 2, 1}));
      gens.push_back(single_gate(3, gates::Toffoli{}, {1, 2, 0}));
    } else if (args.case_name == "cnot") {
      if (!args.theta) throw PreconditionError("--theta is required for case cnot");
      const Angle theta = Angle::parse(*args.theta);
      if (theta.is_multiple_of_quarter_pi()) {
        throw PreconditionError("theta is a multiple of pi/4, so S is not basis-changing after squaring");
      }
      gens.push_back(single_gate(2, gates::STheta{theta}, {0}));
      gens.push_back(single_gate(2, gates::STheta{theta}, {1}));
      gens.push_back(single_gate(2, gates::Cnot{}, {0, 1}));
      gens.push_back(single_gate(2, gates::Cnot{}, {1, 0}));
    } else {
      throw PreconditionError("--case must be cnot or toffoli");
    }
    completeness::DensityProbeOptions opt;
    opt.max_word_len = args.max_word_len;
    opt.n_targets = args.targets;
    opt.seed = args.seed;
    const auto report = completeness::density_probe(gens, opt);

    std::ostringstream text;
    if (args.format == "csv") {
      text << "word_len,words,min_distance,median_distance,max_distance\n";
      for (const auto& r : report.rows) {
        text << r.word_len << ',' << r.words << ',' << fmt(r.min_distance) << ','
             << fmt(r.median_distance) << ',' << fmt(r.max_distance) << "\n";
      }
    } else {
      Json doc;
      doc["case"] = args.case_name;
      doc["dim"] = report.dim;
      doc["seed"] = args.seed;
      doc["truncated"] = report.truncated;
      Json rows = Json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"word_len", r.word_len},
                        {"words", r.words},
                        {"min_distance", r.min_distance},
                        {"median_distance", r.median_distance},
                        {"max_distance", r.max_distance}});
      }
      doc["rows"] = rows;
      text << doc.dump(2) << "\n";
    }
    return emit(text.str(), args.out, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gatesmith: compile and verify circuits over {Toffoli, S}"};
  app.require_subcommand(1);

  SynthesizeArgs syn;
  auto* s = app.add_subcommand("synthesize", "compile U_alpha over {Toffoli, S}");
  s->add_option("--alpha", syn.alpha, "target rotation angle");
  s->add_option("--theta", syn.theta, "angle of the basis gate S");
  s->add_flag("--reflection", syn.reflection, "S is the reflection [[c, s], [s, -c]]");
  s->add_option("--eps", syn.eps, "error budget");
  s->add_option("--policy", syn.policy, "phase ancilla policy")->check(CLI::IsMember({"shared", "fresh"}));
  s->add_option("--out", syn.out, "report path");
  s->add_option("--circuit", syn.circuit_out, "circuit JSON path");
  s->add_option("--max-qubits", syn.max_qubits, "dense verification cap");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify-completeness", "certify the completeness constructions");
  v->add_option("--case", ver.case_name, "cnot or toffoli")->required();
  v->add_option("--theta", ver.theta, "angle of S (case cnot)");
  v->add_option("--out", ver.out, "report path");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "synthesis sweep over a (theta, alpha, eps) grid");
  b->add_option("--grid", bench.grid, "JSON file with arrays theta, alpha, eps");
  b->add_option("--out", bench.out, "output path");
  b->add_option("--format", bench.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  b->add_option("--policy", bench.policy, "phase ancilla policy")->check(CLI::IsMember({"shared", "fresh"}));
  b->add_option("--max-qubits", bench.max_qubits, "dense verification cap");
  b->add_option("--threads", bench.threads, "worker threads (0: all cores)");

  DensityArgs dens;
  auto* d = app.add_subcommand("density-probe", "word-enumeration coverage of random targets");
  d->add_option("--case", dens.case_name, "cnot or toffoli");
  d->add_option("--theta", dens.theta, "angle of S (case cnot)");
  d->add_option("--max-word-len", dens.max_word_len, "longest word");
  d->add_option("--targets", dens.targets, "number of random targets");
  d->add_option("--seed", dens.seed, "target RNG seed");
  d->add_option("--out", dens.out, "output path");
  d->add_option("--format", dens.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }
  if (s->parsed()) return cmd_synthesize(syn, out, err);
  if (v->parsed()) return cmd_verify_completeness(ver, out, err);
  if (b->parsed()) return cmd_bench(bench, out, err);
  return cmd_density_probe(dens, out, err);
}

}  // namespace gatesmith::cli
