#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realcurves/curve.hpp"
#include "realcurves/eta.hpp"
#include "realcurves/serialize.hpp"

namespace realcurves::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitHypothesis = 3,
  kExitInternal = 4,
};

// ---- analyze ----------------------------------------------------------------

struct AnalyzeOptions {
  std::string expression;
  std::optional<std::string> coeffs;
  std::vector<int> units{2};
  bool json = false;
};

/// Full report for one curve. Throws on hypothesis violations and on failed
/// cross-module checks (InternalError).
Json analyze_report(const CurveSpec& spec, std::string_view input, const std::vector<int>& units);

/// Human-readable rendering of analyze_report's output.
std::string render_analyze_text(const Json& report);

int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

// ---- sample -----------------------------------------------------------------

enum class Pin { None, BZero, AEqualsC };

struct SampleOptions {
  long count = 1000;
  std::uint64_t seed = 1;
  std::optional<int> k;  // 0, 2 or 4; drawn uniformly when empty
  int amax = 50;
  int bmax = 50;
  int cmax = 50;
  Pin pin = Pin::None;
  bool json = false;
};

struct SampleRecord {
  long index = 0;
  QuarticParams params;
  EtaResult eta;
  TorsionSearchStats stats;
};

struct SampleSummary {
  long known0 = 0;
  long known1 = 0;
  long undetermined = 0;
  std::vector<SampleRecord> records;

  double known1_frequency() const;
};

/// Deterministic draw of sample `index` for the given options: the random
/// stream depends only on (seed, index).
QuarticParams draw_sample(const SampleOptions& options, long index);

SampleSummary run_sampling(const SampleOptions& options);
Json sample_report(const SampleOptions& options, const SampleSummary& summary);
int run_sample(const SampleOptions& options, std::ostream& out, std::ostream& err);

// ---- ec ---------------------------------------------------------------------

struct EcOptions {
  std::string curve;
  std::vector<std::string> args;  // op followed by its operands
  int bound = kMazurBound;
  bool json = false;
};

WeierstrassCurve parse_weierstrass(std::string_view text);
ECPoint parse_point(std::string_view text);
int run_ec(const EcOptions& options, std::ostream& out, std::ostream& err);

// ---- entry point ------------------------------------------------------------

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realcurves::cli
