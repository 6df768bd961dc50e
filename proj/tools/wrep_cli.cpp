#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wrep/errors.hpp"
#include "wrep/harness.hpp"
#include "wrep/io.hpp"

using namespace wrep;

namespace {

struct Options {
  std::string file, kind, from, to, output, pipeline, format = "text";
  int trials = 100;
  std::uint64_t seed = 1;
  RandomBounds bounds{4, 12, 3};
};

int emit(const Json& report, const std::string& format, std::ostream& os = std::cout) {
  if (format == "json") os << report.dump(2) << "\n";
  else os << render_text(report);
  return report_passed(report) ? kExitPass : kExitFail;
}

int run_validate(const Options& o) {
  const Instance inst = read_instance(o.file);
  if (!o.kind.empty() && o.kind != inst.kind) throw UsageError("file holds kind '" + inst.kind + "', not '" + o.kind + "'");
  return emit(validate_json(inst, validate_instance(inst)), o.format);
}

int run_convert(const Options& o) {
  const Conversion c = convert_instance(read_instance(o.file), o.from, o.to);
  const Json report = convert_json(o.from, o.to, c);
  if (!c.output) return emit(report, o.format);
  if (o.output.empty()) {
    std::cout << dump_instance(*c.output);
    if (!report_passed(report)) emit(report, o.format, std::cerr);
    return report_passed(report) ? kExitPass : kExitFail;
  }
  write_instance(o.output, *c.output);
  return emit(report, o.format);
}

int run_roundtrip(const Options& o) {
  std::optional<Instance> input;
  if (!o.file.empty()) input = read_instance(o.file);
  return emit(roundtrip_json(o.pipeline, o.seed, run_roundtrip(o.pipeline, o.trials, o.seed, o.bounds, input)), o.format);
}

int run_fuzz(const Options& o) { return emit(fuzz_json(o.seed, run_fuzz(o.trials, o.seed, o.bounds)), o.format); }

int run_report(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw ParseError("cannot read " + o.file);
  std::stringstream ss;
  ss << in.rdbuf();
  Json report;
  try {
    report = Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return emit(report, o.format);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_generation(CLI::App* cmd, Options& o) {
  cmd->add_option("--trials", o.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--max-objects", o.bounds.max_objects, "Objects per random groupoid")->check(CLI::Range(1, 4));
  cmd->add_option("--max-arrows", o.bounds.max_arrows, "Arrows per random groupoid")->check(CLI::Range(1, 12));
  cmd->add_option("--max-dim", o.bounds.max_dim, "Fiber dimension bound")->check(CLI::Range(0, 3));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations up to homotopy, weak representations and VB-groupoids over finite groupoids"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("file", o.file, "Instance file")->required();
  validate->add_option("--kind", o.kind, "Expected kind");
  add_format(validate, o);

  auto* convert = app.add_subcommand("convert", "Convert an instance to another kind");
  convert->add_option("file", o.file, "Instance file")->required();
  convert->add_option("--from", o.from, "Input kind")->required();
  convert->add_option("--to", o.to, "Output kind")->required();
  convert->add_option("-o,--output", o.output, "Output file (stdout when absent)");
  add_format(convert, o);

  auto* roundtrip = app.add_subcommand("roundtrip", "Run a round-trip pipeline with witness checks");
  roundtrip->add_option("file", o.file, "Optional seed instance");
  roundtrip->add_option("--pipeline", o.pipeline, "Pipeline")->required()->check(CLI::IsMember(pipeline_names()));
  add_generation(roundtrip, o);
  add_format(roundtrip, o);

  auto* fuzz = app.add_subcommand("fuzz", "Mutate random instances and check that validators catch them");
  add_generation(fuzz, o);
  add_format(fuzz, o);

  auto* report = app.add_subcommand("report", "Render a JSON report");
  report->add_option("file", o.file, "Report file")->required();
  add_format(report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(o);
    if (*convert) return run_convert(o);
    if (*roundtrip) return run_roundtrip(o);
    if (*fuzz) return run_fuzz(o);
    return run_report(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
