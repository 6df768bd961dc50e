#pragma once

// The verbs behind the command-line tool. Every verb produces a JSON report
// {"verb", "verdict", ..., "violations"}; text output is rendered from it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrep/generate.hpp"
#include "wrep/io.hpp"
#include "wrep/report.hpp"

namespace wrep {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the validator of inst.kind. Throws ParseError for malformed payloads
/// and UsageError for an unknown kind.
Report validate_instance(const Instance& inst);

struct Conversion {
  Report report;  // input validation, then output and witness validation
  std::optional<Instance> output;
};

/// Edges: ruth->vb, ruth->wrep, wrep->ruth, wrep->vb, vb->wrep. Throws
/// UsageError for any other edge or when from does not match inst.kind.
/// No output is produced when the input fails validation.
Conversion convert_instance(const Instance& inst, const std::string& from, const std::string& to);

const std::vector<std::string>& pipeline_names();

struct TrialReport {
  int trials = 0;
  int passed = 0;
  Report report;  // locations are prefixed with the trial index
};

/// Runs `trials` laps of the pipeline on random instances, or on `input`
/// when given (the random parts of each lap still vary with the trial).
/// Throws UsageError for an unknown pipeline or an input of the wrong kind.
TrialReport run_roundtrip(const std::string& pipeline, int trials, std::uint64_t seed, const RandomBounds& bounds,
                          const std::optional<Instance>& input = std::nullopt);

struct FuzzStats {
  int instances = 0;
  int generator_failures = 0;
  int mutations = 0;      // non-control mutations applied
  int killed = 0;         // invalid per the oracle and flagged by the validator
  int equivalent = 0;     // still valid per the oracle and accepted by the validator
  int missed = 0;         // invalid per the oracle but accepted
  int false_alarms = 0;   // valid per the oracle but flagged
  int controls = 0;       // no-op mutations
  int control_failures = 0;
};

struct FuzzReport {
  FuzzStats total;
  std::vector<std::pair<std::string, FuzzStats>> by_kind;
  std::vector<std::string> equivalent;  // locations of mutants the oracle still accepts
  Report report;
};

/// Cycles through the kinds groupoid, ruth, vb, wrep; every tenth trial
/// applies a no-op mutation as a control.
FuzzReport run_fuzz(int trials, std::uint64_t seed, const RandomBounds& bounds);

Json validate_json(const Instance& inst, const Report& r);
Json convert_json(const std::string& from, const std::string& to, const Conversion& c);
Json roundtrip_json(const std::string& pipeline, std::uint64_t seed, const TrialReport& t);
Json fuzz_json(std::uint64_t seed, const FuzzReport& f);

/// "pass" or "fail" from a report JSON; throws ParseError if absent.
bool report_passed(const Json& report);
std::string render_text(const Json& report);

}  // namespace wrep
