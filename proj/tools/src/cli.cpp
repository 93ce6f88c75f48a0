#include "aluthge/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/experiments.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/regions.hpp"
#include "aluthge/serialization.hpp"
#include "aluthge/transforms.hpp"

namespace aluthge::cli {

namespace {

struct Common {
  std::string input;
  std::string out;
  std::size_t window = kDefaultWindow;
  std::size_t level = 12;
  double tol = kPsdTolerance;
  std::uint64_t seed = kDefaultSeed;
};

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write to " + path + " failed");
}

WeightDiagram load_diagram(const std::string& path) {
  if (path.empty()) throw DomainError("--input is required");
  return diagram_from_json(read_json_file(path));
}

void require_positive_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("--tol must be positive");
}

/// Weights of w on [0,window]^2 without commutativity validation.
TableData sample(const WeightDiagram& w, std::size_t window) {
  TableData t;
  t.rows = t.cols = window + 1;
  t.tail = TailRule::None;
  for (std::size_t k2 = 0; k2 <= window; ++k2) {
    for (std::size_t k1 = 0; k1 <= window; ++k1) {
      t.alpha.push_back(w.alpha(k1, k2));
      t.beta.push_back(w.beta(k1, k2));
    }
  }
  return t;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void add_io(CLI::App* sub, Common& c, bool input) {
  if (input) sub->add_option("-i,--input", c.input, "diagram JSON file")->required();
  sub->add_option("-o,--out", c.out, "write the result here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toral and spherical Aluthge transforms of 2-variable weighted shifts", "aluthge_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;

  // build
  auto* build = app.add_subcommand("build", "write a diagram JSON (prop2, theta, thm1, completion)");
  std::string build_kind;
  double x = 0.5, y = 0.5, constant = 0.0;
  std::string omega_text;
  build->add_option("kind", build_kind, "prop2 | theta | thm1 | completion")->required()
      ->check(CLI::IsMember({"prop2", "theta", "thm1", "completion"}));
  build->add_option("--x", x, "prop2 x in (0,1)");
  build->add_option("--y", y, "prop2 / thm1 y");
  build->add_option("--omega,--row", omega_text, "weight sequence, e.g. flat:0.5,1 or stampfli:1,2,3");
  build->add_option("--constant", constant, "completion constant C");
  build->add_option("-w,--window", c.window, "completion window (default 40)");
  add_io(build, c, false);

  // transform
  auto* transform = app.add_subcommand("transform", "toral or spherical transform of a diagram");
  std::string transform_kind = "spherical";
  transform->add_option("--kind", transform_kind, "toral | spherical")
      ->check(CLI::IsMember({"toral", "spherical"}));
  transform->add_option("-w,--window", c.window, "weights written on [0,window]^2")
      ->capture_default_str();
  add_io(transform, c, true);

  // hypo
  auto* hypo = app.add_subcommand("hypo", "componentwise, joint and k-hyponormality report");
  int max_k = 1;
  hypo->add_option("--k", max_k, "largest k for k-hyponormality (0 skips)")->capture_default_str();
  hypo->add_option("-N,--level", c.level, "truncation level")->capture_default_str();
  hypo->add_option("--tol", c.tol, "PSD tolerance")->capture_default_str();
  hypo->add_option("-i,--input", c.input, "diagram JSON file")->required();
  hypo->add_option("-o,--out,--report", c.out, "report JSON path");

  // khypo
  auto* khypo = app.add_subcommand("khypo", "k-hyponormality block test on a truncation");
  int k_order = 2;
  khypo->add_option("--k", k_order, "order k >= 1")->capture_default_str();
  khypo->add_option("-N,--level", c.level, "truncation level, >= 4k + 2")->capture_default_str();
  khypo->add_option("--tol", c.tol, "PSD tolerance")->capture_default_str();
  add_io(khypo, c, true);

  // quasinormal
  auto* quasi = app.add_subcommand("quasinormal", "spherically quasinormal completion and check");
  quasi->require_subcommand(1);
  auto* complete = quasi->add_subcommand("complete", "complete a zero-th row with constant C");
  std::string row_text;
  complete->add_option("--row", row_text, "zero-th row, e.g. stampfli:1,2,3")->required();
  complete->add_option("--constant", constant, "C = alpha^2 + beta^2")->required();
  complete->add_option("-w,--window", c.window, "materialised window (default 40)");
  add_io(complete, c, false);
  auto* check = quasi->add_subcommand("check", "fixed point / constant C / constant diagonal flags");
  check->add_option("-w,--window", c.window, "checked window")->capture_default_str();
  add_io(check, c, true);

  // stampfli
  auto* stampfli_cmd = app.add_subcommand("stampfli", "Stampfli completion data for 0 < a < b < c");
  std::vector<double> abc;
  stampfli_cmd->add_option("abc", abc, "a b c")->required()->expected(3);
  add_io(stampfli_cmd, c, false);

  // berger
  auto* berger = app.add_subcommand("berger", "atomic Berger measures");
  berger->require_subcommand(1);
  auto* verify = berger->add_subcommand("verify", "max relative moment error against a measure");
  std::string measure_path;
  std::size_t maxdeg = 10;
  verify->add_option("--measure", measure_path, "measure JSON")->required();
  verify->add_option("--maxdeg", maxdeg, "largest total degree")->capture_default_str();
  add_io(verify, c, true);
  auto* measure = berger->add_subcommand("measure", "Berger measure of the C = phi1 completion of stampfli(a,b,c)");
  measure->add_option("abc", abc, "a b c")->required()->expected(3);
  add_io(measure, c, false);

  // regions
  auto* regions = app.add_subcommand("regions", "threshold curves of the (x, y) family");
  regions->require_subcommand(1);
  auto* scan = regions->add_subcommand("scan", "CSV scan of closed-form curves and numeric verdicts");
  ScanOptions scan_opts;
  scan->add_option("--grid", scan_opts.grid, "y_i = i/(grid+1)")->capture_default_str();
  scan->add_option("--ladder", scan_opts.ladder, "x values per y")->capture_default_str();
  scan->add_option("-N,--level", scan_opts.level, "truncation level")->capture_default_str();
  scan->add_option("-o,--out", c.out, "CSV path (stdout if omitted)");
  auto* classify_cmd = regions->add_subcommand("classify", "closed-form and numeric verdicts at (x, y)");
  classify_cmd->add_option("--x", x, "x in (0,1)")->required();
  classify_cmd->add_option("--y", y, "y in (0,1)")->required();
  classify_cmd->add_option("-N,--level", c.level, "truncation level")->capture_default_str();
  classify_cmd->add_option("-o,--out", c.out, "JSON path");
  auto* q_cmd = regions->add_subcommand("q", "crossing point of CA and s");
  auto* curves_cmd = regions->add_subcommand("curves", "s, h, CA, PA at y");
  curves_cmd->add_option("--y", y, "y in (0,1)")->required();

  // probe-continuity
  auto* probe = app.add_subcommand("probe-continuity", "norm estimates for A_n = f_n(P)");
  std::vector<unsigned long> ns{1, 10, 100, 10000};
  probe->add_option("--n", ns, "cutoff parameters n")->capture_default_str();
  probe->add_option("-N,--level", c.level, "truncation level")->capture_default_str();
  add_io(probe, c, true);

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run the experiments behind one result");
  std::string target;
  reproduce->add_option("target", target, "prop1 | prop2 | thm1 | prehypo | quasinormal2 | re4 | propscaling2")
      ->required()
      ->check(CLI::IsMember(reproduce_targets()));
  reproduce->add_option("--seed", c.seed, "seed of the randomised suites")->capture_default_str();
  reproduce->add_option("-o,--out", c.out, "table path (stdout if omitted)");

  std::vector<const char*> argv{"aluthge_lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) err << app.help();
    return kUsage;
  }

  try {
    if (build->parsed()) {
      std::optional<WeightDiagram> w;
      if (build_kind == "prop2") {
        w = build_prop2(x, y);
      } else if (build_kind == "theta") {
        w = build_theta(OneVarWeights::parse(omega_text));
      } else if (build_kind == "thm1") {
        w = build_thm1(OneVarWeights::parse(omega_text), y);
      } else {
        const std::size_t window = build->count("--window") ? c.window : kDefaultCompletionWindow;
        w = quasinormal_completion(OneVarWeights::parse(omega_text), constant, window);
      }
      emit(diagram_to_json(*w, c.window), c.out, out);
    } else if (transform->parsed()) {
      const WeightDiagram w = load_diagram(c.input);
      Json j;
      if (transform_kind == "toral") {
        const ToralResult r = toral_transform(w, c.window);
        if (r.commuting) {
          j = diagram_to_json(r.candidate, c.window);
        } else {
          j = {{"kind", "table"}, {"params", Json::object()}, {"table", table_to_json(sample(r.candidate, c.window))}};
        }
        j["transform"] = {{"kind", "toral"}, {"commuting", r.commuting}, {"condition", to_json(r.condition)}};
      } else {
        j = diagram_to_json(spherical_transform(w, c.window), c.window);
        j["transform"] = {{"kind", "spherical"}, {"commuting", true}};
      }
      emit(j, c.out, out);
    } else if (hypo->parsed()) {
      require_positive_tol(c.tol);
      const WeightDiagram w = load_diagram(c.input);
      const HypoReport r = max_k >= 1 ? hypo_report(w, max_k, c.level, c.tol)
                                      : joint_hyponormal(w, c.level, CrossCheck::Operator, c.tol);
      Json j = to_json(r);
      j["level"] = c.level;
      emit(j, c.out, out);
    } else if (khypo->parsed()) {
      require_positive_tol(c.tol);
      const KHypoResult r = k_hyponormal(load_diagram(c.input), k_order, c.level, c.tol);
      Json j = to_json(r);
      j["k"] = k_order;
      j["level"] = c.level;
      emit(j, c.out, out);
    } else if (complete->parsed()) {
      const std::size_t window = complete->count("--window") ? c.window : kDefaultCompletionWindow;
      const WeightDiagram w = quasinormal_completion(OneVarWeights::parse(row_text), constant, window);
      emit(diagram_to_json(w, window), c.out, out);
    } else if (check->parsed()) {
      emit(to_json(is_spherically_quasinormal(load_diagram(c.input), c.window)), c.out, out);
    } else if (stampfli_cmd->parsed()) {
      emit(to_json(stampfli_data(abc[0], abc[1], abc[2])), c.out, out);
    } else if (verify->parsed()) {
      const WeightDiagram w = load_diagram(c.input);
      const AtomicMeasure2D mu = measure_from_json(read_json_file(measure_path));
      const double e = berger_atomic_verify(w, mu, maxdeg);
      emit(Json{{"maxdeg", maxdeg}, {"max_relative_error", e}}, c.out, out);
    } else if (measure->parsed()) {
      emit(measure_to_json(quasinormal2_measure(abc[0], abc[1], abc[2])), c.out, out);
    } else if (scan->parsed()) {
      if (c.out.empty()) {
        region_scan(scan_opts, out);
      } else {
        region_scan(scan_opts, c.out);
      }
    } else if (classify_cmd->parsed()) {
      emit(to_json(classify(x, y, c.level)), c.out, out);
    } else if (q_cmd->parsed()) {
      out << fmt(crossing_q()) << '\n';
    } else if (curves_cmd->parsed()) {
      const Thresholds t = thresholds(y);
      out << "y,s,h,CA,PA\n"
          << fmt(y) << ',' << fmt(t.s) << ',' << fmt(t.h) << ',' << fmt(t.ca) << ',' << fmt(t.pa)
          << '\n';
    } else if (probe->parsed()) {
      const WeightDiagram w = load_diagram(c.input);
      Json probes = Json::array();
      for (unsigned long n : ns) probes.push_back(to_json(continuity_probe(w, c.level, n)));
      emit(Json{{"probes", probes}}, c.out, out);
    } else if (reproduce->parsed()) {
      std::ostringstream table;
      bool all = true;
      table << "target " << target << ", seed " << c.seed << '\n';
      if (target == "prop2") table << "q = " << fmt(crossing_q()) << '\n';
      for (int id : criteria_for_target(target)) {
        const CriterionResult r = run_criterion(id, c.seed);
        all = all && r.passed;
        table << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.name << ": "
              << r.detail << '\n';
        err << "criterion " << r.id << ": " << fmt(r.seconds) << " s\n";
      }
      table << (all ? "all criteria passed" : "some criteria failed") << '\n';
      emit_text(table.str(), c.out, out);
    }
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kOk;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace aluthge::cli
