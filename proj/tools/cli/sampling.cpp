#include <map>
#include <random>

#include "cli/commands.hpp"
#include "realcurves/poly.hpp"

namespace realcurves::cli {

namespace {

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream, so the
// draw is identical on every standard library.
long bounded(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<long>(x % span);
}

std::mt19937_64 stream_for(std::uint64_t seed, long index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  return std::mt19937_64(seq);
}

bool acceptable(const QuarticParams& p, Pin pin) {
  if (pin == Pin::None && (p.b.is_zero() || p.a == p.c)) return false;
  if (p.k == 4 && BigRational(4) * p.b * p.b == (p.c - p.a) * (p.c - p.a)) return false;
  return is_square_free(quartic_from_params(p));
}

std::string_view pin_name(Pin pin) {
  switch (pin) {
    case Pin::BZero: return "b=0";
    case Pin::AEqualsC: return "a=c";
    case Pin::None: break;
  }
  return "none";
}

}  // namespace

double SampleSummary::known1_frequency() const {
  const long n = known0 + known1 + undetermined;
  return n == 0 ? 0.0 : static_cast<double>(known1) / static_cast<double>(n);
}

QuarticParams draw_sample(const SampleOptions& options, long index) {
  std::mt19937_64 rng = stream_for(options.seed, index);
  static constexpr int kKs[] = {0, 2, 4};
  for (;;) {
    QuarticParams p;
    p.k = options.k ? *options.k : kKs[bounded(rng, 0, 2)];
    p.a = BigRational(bounded(rng, 1, options.amax));
    p.b = BigRational(bounded(rng, -options.bmax, options.bmax));
    p.c = BigRational(bounded(rng, 1, options.cmax));
    if (options.pin == Pin::BZero) p.b = BigRational(0);
    if (options.pin == Pin::AEqualsC) p.c = p.a;
    if (acceptable(p, options.pin)) return p;
  }
}

SampleSummary run_sampling(const SampleOptions& options) {
  SampleSummary summary;
  summary.records.reserve(static_cast<std::size_t>(options.count));
  for (long i = 0; i < options.count; ++i) {
    SampleRecord rec;
    rec.index = i;
    rec.params = draw_sample(options, i);
    rec.eta = quartic_eta(quartic_from_params(rec.params), &rec.stats);
    if (!rec.eta.value) {
      ++summary.undetermined;
    } else if (*rec.eta.value == 1) {
      ++summary.known1;
    } else {
      ++summary.known0;
    }
    summary.records.push_back(std::move(rec));
  }
  return summary;
}

Json sample_report(const SampleOptions& options, const SampleSummary& summary) {
  Json report;
  report["command"] = "sample";
  report["count"] = options.count;
  report["seed"] = options.seed;
  report["k"] = options.k ? Json(*options.k) : Json(nullptr);
  report["box"] = Json{{"amax", options.amax}, {"bmax", options.bmax}, {"cmax", options.cmax}};
  report["pin"] = std::string(pin_name(options.pin));
  report["known0"] = summary.known0;
  report["known1"] = summary.known1;
  report["undetermined"] = summary.undetermined;
  report["known1_frequency"] = summary.known1_frequency();

  struct PerK {
    long samples = 0;
    int cases = 0;
    long max_multiplier = 0;
  };
  std::map<int, PerK> per_k;
  Json hits = Json::array();
  for (const auto& rec : summary.records) {
    PerK& pk = per_k[rec.params.k];
    ++pk.samples;
    pk.cases = rec.stats.cases_evaluated;
    pk.max_multiplier = std::max(pk.max_multiplier, rec.stats.max_multiplier);
    if (rec.eta.value == 1) {
      hits.push_back(Json{{"index", rec.index}, {"params", to_json(rec.params)}, {"eta", to_json(rec.eta)}});
    }
  }
  Json cases = Json::array();
  for (const auto& [k, pk] : per_k) {
    cases.push_back(
        Json{{"k", k}, {"samples", pk.samples}, {"cases_per_sample", pk.cases}, {"max_multiplier", pk.max_multiplier}});
  }
  report["torsion_cases"] = std::move(cases);
  report["known1_samples"] = std::move(hits);
  return report;
}

}  // namespace realcurves::cli
