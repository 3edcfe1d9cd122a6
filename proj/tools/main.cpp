#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "symcc/report/report.hpp"

using namespace symcc;

namespace {

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out + " for writing");
  f << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested polyhedra central configurations: decomposition and certified signs"};
  app.require_subcommand(1);
  unsigned workers = std::thread::hardware_concurrency();
  app.add_option("--workers", workers, "Worker threads for certification (default: hardware)");

  std::string kind_text, out, block, file;
  int max_depth = 16, digits = 4, samples = 0, curve_digits = 12;
  bool no_timing = false;

  auto* decompose = app.add_subcommand("decompose", "Multiplicities and block inventory");
  decompose->add_option("case", kind_text, "tetrahedron | octahedron | cube")->required();
  decompose->add_option("--out", out, "Write JSON here instead of stdout");

  auto* certify = app.add_subcommand("certify", "Certify every block and the threshold");
  certify->add_option("case", kind_text)->required();
  certify->add_option("--block", block, "Only this block (e.g. t4, O9, C8)");
  certify->add_option("--max-depth", max_depth, "Covering bisection depth limit")->check(CLI::Range(1, 40));
  certify->add_option("--digits", digits, "Decimal digits for delta")->check(CLI::Range(1, 30));
  certify->add_option("--out", out, "Write the report here instead of stdout");
  certify->add_flag("--no-timing", no_timing, "Omit timing fields");

  auto* delta = app.add_subcommand("delta", "Isolate the threshold delta");
  delta->add_option("case", kind_text)->required();
  delta->add_option("--digits", digits)->check(CLI::Range(1, 30));
  delta->add_option("--max-depth", max_depth)->check(CLI::Range(1, 40));
  delta->add_option("--out", out);

  auto* curve = app.add_subcommand("curve", "Mass ratio on an equispaced grid as CSV");
  curve->add_option("case", kind_text)->required();
  curve->add_option("--samples", samples)->required()->check(CLI::Range(2, 1000000));
  curve->add_option("--out", out)->required();
  curve->add_option("--digits", curve_digits, "Decimal digits of the enclosures")->check(CLI::Range(1, 60));

  auto* replay_cmd = app.add_subcommand("replay", "Re-check a certificate or report file");
  replay_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<WorkerPool> pool;
    if (workers > 1) pool = std::make_unique<WorkerPool>(workers);

    if (*decompose) {
      emit(decomposition_json(analyze_case(parse_kind(kind_text))), out);
      return 0;
    }
    if (*certify) {
      CaseOptions opt;
      opt.max_depth = max_depth;
      opt.digits = digits;
      opt.pool = pool.get();
      if (!block.empty()) {
        opt.blocks = {block};
        opt.threshold = false;
      }
      CaseReport r = run_case(parse_kind(kind_text), opt);
      emit(r.to_json(!no_timing), out);
      for (const auto& f : r.failures) std::cerr << "failed at " << f.stage << ": " << f.message << "\n";
      return r.ok() ? 0 : 1;
    }
    if (*delta) {
      CurveOptions c;
      c.max_depth = max_depth;
      c.pool = pool.get();
      CaseAnalysis a = analyze_case(parse_kind(kind_text));
      DeltaResult d = find_delta(a, digits, c);
      Json j = {{"case", kind_name(a.kind)},
                {"lo", d.lo.get_str()},
                {"hi", d.hi.get_str()},
                {"decimal", {d.delta_decimal.first, d.delta_decimal.second}},
                {"inverse_decimal", {d.inverse_decimal.first, d.inverse_decimal.second}},
                {"certificate", d.certificate.to_json()}};
      emit(j, out);
      std::cerr << "1/delta in [" << d.inverse_decimal.first << ", " << d.inverse_decimal.second << "]\n";
      return d.certificate.verified ? 0 : 1;
    }
    if (*curve) {
      export_curve(parse_kind(kind_text), samples, out, curve_digits, pool.get());
      return 0;
    }
    if (*replay_cmd) {
      std::ifstream f(file);
      std::stringstream ss;
      ss << f.rdbuf();
      return replay_document(Json::parse(ss.str()), &std::cout) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
