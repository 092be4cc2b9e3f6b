#include "heatinv/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>

#include "heatinv/curvature.hpp"
#include "heatinv/heat_invariant.hpp"
#include "heatinv/metric_spec.hpp"
#include "heatinv/render.hpp"
#include "heatinv/verification.hpp"

namespace heatinv::cli {

namespace {

using nlohmann::json;

struct ComputeArgs {
  std::string metric;
  std::vector<int> n;
  std::string mode = "numeric";
  std::string path = "eq311";
  std::string format = "plain";
  std::optional<int> approx;
  std::optional<int> jetOrder;
  unsigned threads = 1;
};

struct CurvatureArgs {
  std::string metric;
  std::string format = "plain";
  std::optional<int> jetOrder;
};

struct VerifyArgs {
  std::string level = "quick";
  std::string format = "plain";
};

struct Evaluated {
  int n = 0;
  std::variant<ClosedForm, PiScaled> value;
  int truncationOrder = 0;
  double seconds = 0;
};

int defaultOrder(EvaluationPath path, int n) {
  return path == EvaluationPath::Curvature ? curvatureOrderFor(n) : workingOrderFor(n);
}

Evaluated evaluate(int n, const ComputeArgs& args, const std::optional<MetricSpec>& spec, EvaluationPath path,
                   bool symbolic) {
  const auto start = std::chrono::steady_clock::now();
  Evaluated out;
  out.n = n;
  if (n == 0) {
    out.value = weylLeadingTerm();
  } else {
    const int order = args.jetOrder.value_or(defaultOrder(path, n));
    const EvaluationOptions options{args.threads};
    if (symbolic) {
      if (path == EvaluationPath::Curvature) {
        raise(ErrorCode::InvalidMetric, "the curvature path evaluates numeric jets only");
      }
      const Jet2D<RhoPoly> rho = spec ? expandSymbolic(*spec, order) : symbolicRhoJet(order);
      out.truncationOrder = rho.order();
      RhoPoly poly = path == EvaluationPath::Direct ? heatInvariantCoefficient(n, rho, options)
                                                    : heatInvariantResolventCoefficient(n, rho, options);
      out.value = ClosedForm{std::move(poly), 1};
    } else {
      const Jet2D<Rational> rho = expandNumeric(*spec, order);
      out.truncationOrder = rho.order();
      switch (path) {
        case EvaluationPath::Direct: out.value = PiScaled{heatInvariantCoefficient(n, rho, options), 1}; break;
        case EvaluationPath::Resolvent:
          out.value = PiScaled{heatInvariantResolventCoefficient(n, rho, options), 1};
          break;
        case EvaluationPath::Curvature: out.value = heatInvariantCurvatureForm(n, rho).numeric(); break;
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int runCompute(const ComputeArgs& args, std::ostream& out) {
  const Format format = *parseFormat(args.format);
  const EvaluationPath path = *parsePath(args.path);
  const bool symbolic = args.mode == "symbolic";
  for (int n : args.n) {
    if (n < 0) raise(ErrorCode::IndexOutOfRange, "--n must be nonnegative");
  }
  if (args.jetOrder && *args.jetOrder < 0) raise(ErrorCode::SchemaError, "--jet-order must be nonnegative");
  if (args.approx && (*args.approx < 1 || *args.approx > 1000)) {
    raise(ErrorCode::SchemaError, "--approx takes 1..1000 digits");
  }
  std::optional<MetricSpec> spec;
  if (!args.metric.empty()) spec = loadMetricSpec(args.metric);
  if (!symbolic && !spec) raise(ErrorCode::SchemaError, "numeric mode needs --metric");

  std::vector<Evaluated> results;
  for (int n : args.n) results.push_back(evaluate(n, args, spec, path, symbolic));

  if (format == Format::Json) {
    json report{{"mode", args.mode}, {"path", std::string(pathName(path))},
                {"metric", spec ? std::string(kindName(spec->kind)) : std::string("generic")}};
    json list = json::array();
    for (const auto& r : results) {
      json entry{{"n", r.n}, {"truncationOrder", r.truncationOrder}, {"seconds", r.seconds}};
      if (r.n == 0) entry["weylLeadingTerm"] = true;
      if (const auto* form = std::get_if<ClosedForm>(&r.value)) {
        entry["closedForm"] = closedFormToJson(*form);
        entry["text"] = renderClosedForm(*form, Format::Plain);
      } else {
        const auto& value = std::get<PiScaled>(r.value);
        entry["value"] = {{"q", toString(value.q)}, {"piPower", value.piPower}};
        entry["text"] = toString(value);
        if (args.approx) entry["approx"] = toDecimal(value, *args.approx);
      }
      list.push_back(std::move(entry));
    }
    report["results"] = std::move(list);
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  for (const auto& r : results) {
    if (const auto* form = std::get_if<ClosedForm>(&r.value)) {
      out << renderClosedForm(*form, format);
    } else {
      const auto& value = std::get<PiScaled>(r.value);
      out << renderNumeric(value, format);
      if (args.approx) out << (format == Format::Latex ? " \\approx " : " ~ ") << toDecimal(value, *args.approx);
    }
    if (r.n == 0) out << (format == Format::Latex ? "  % " : "  # ") << "leading Weyl term";
    out << "\n";
  }
  return kExitOk;
}

int runCurvature(const CurvatureArgs& args, std::ostream& out) {
  const MetricSpec spec = loadMetricSpec(args.metric);
  const CurvatureFrame frame = curvatureFrame(expandNumeric(spec, args.jetOrder.value_or(kFrameOrder)));
  const std::pair<const char*, const Rational*> fields[] = {
      {"K0", &frame.K0}, {"DeltaK0", &frame.laplacianK0}, {"Delta2K0", &frame.laplacian2K0},
      {"E", &frame.E},   {"F", &frame.F},                 {"G", &frame.G},
      {"jacobian", &frame.jacobian}};
  if (args.format == "json") {
    json j;
    for (const auto& [name, value] : fields) j[name] = toString(*value);
    j["degenerate"] = frame.degenerate;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [name, value] : fields) out << name << " = " << toString(*value) << "\n";
  out << "degenerate = " << (frame.degenerate ? "true" : "false") << "\n";
  return kExitOk;
}

int runVerify(const VerifyArgs& args, std::ostream& out) {
  const verify::Level level = *verify::parseLevel(args.level);
  const bool asJson = args.format == "json";
  const auto results = verify::runAll(level, asJson ? nullptr : &out);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (asJson) {
    json list = json::array();
    for (const auto& r : results) {
      list.push_back({{"id", r.id}, {"title", r.title}, {"status", r.skipped ? "skip" : r.passed ? "pass" : "fail"},
                      {"detail", r.detail}, {"seconds", r.seconds}});
    }
    out << json{{"level", args.level}, {"passed", ok}, {"criteria", list}}.dump(2) << "\n";
  } else {
    out << (ok ? "all criteria passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerification;
}

void reportError(ErrorCode code, const std::string& message, bool asJson, std::ostream& out, std::ostream& err) {
  if (asJson) {
    out << json{{"error", {{"code", std::string(codeName(code))}, {"message", message}}}}.dump(2) << "\n";
  } else {
    err << "heatinv: " << message << "\n";
  }
}

}  // namespace

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaError:
    case ErrorCode::InvalidMetric:
    case ErrorCode::OrderExhausted: return kExitInput;
    case ErrorCode::NonInvertibleConstantTerm:
    case ErrorCode::DegenerateCurvatureCoordinates:
    case ErrorCode::SingularFrame:
    case ErrorCode::IndexOutOfRange: return kExitMath;
    case ErrorCode::TailNotConverged:
    case ErrorCode::IllConditionedFit: return kExitVerification;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heat invariants of surfaces in conformal charts", "heatinv"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* computeCmd = app.add_subcommand("compute", "Compute heat invariants a_n at the chart origin");
  computeCmd->add_option("--metric", compute.metric, "Metric spec (JSON)")->check(CLI::ExistingFile);
  computeCmd->add_option("--n", compute.n, "Invariant index (repeatable)")->required();
  computeCmd->add_option("--mode", compute.mode)->check(CLI::IsMember({"symbolic", "numeric"}))->capture_default_str();
  computeCmd->add_option("--path", compute.path)
      ->check(CLI::IsMember({"eq311", "eq310", "curvature"}))
      ->capture_default_str();
  computeCmd->add_option("--format", compute.format)
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  computeCmd->add_option("--approx", compute.approx, "Also print a decimal expansion with this many digits");
  computeCmd->add_option("--jet-order", compute.jetOrder, "Override the jet order fed to the evaluator");
  computeCmd->add_option("--threads", compute.threads, "Worker threads per invariant")->capture_default_str();

  CurvatureArgs curvature;
  auto* curvatureCmd = app.add_subcommand("curvature", "Print the curvature-coordinate frame at the origin");
  curvatureCmd->add_option("--metric", curvature.metric, "Metric spec (JSON)")->required()->check(CLI::ExistingFile);
  curvatureCmd->add_option("--format", curvature.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  curvatureCmd->add_option("--jet-order", curvature.jetOrder, "Jet order (at least 8)");

  VerifyArgs verifyArgs;
  auto* verifyCmd = app.add_subcommand("verify", "Run the acceptance suite");
  verifyCmd->add_option("--level", verifyArgs.level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verifyCmd->add_option("--format", verifyArgs.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  bool asJson = false;
  try {
    if (computeCmd->parsed()) {
      asJson = compute.format == "json";
      return runCompute(compute, out);
    }
    if (curvatureCmd->parsed()) {
      asJson = curvature.format == "json";
      return runCurvature(curvature, out);
    }
    asJson = verifyArgs.format == "json";
    return runVerify(verifyArgs, out);
  } catch (const heatinv::Error& e) {
    reportError(e.code(), e.what(), asJson, out, err);
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    reportError(ErrorCode::SchemaError, std::string("internal error: ") + e.what(), asJson, out, err);
    return kExitInternal;
  }
}

}  // namespace heatinv::cli
