#include "oscusec/interpolation/speciality.hpp"

#include <algorithm>

#include "oscusec/error.hpp"

namespace oscusec {

std::string to_string(SpecialityVerdict::Kind kind) {
  switch (kind) {
    case SpecialityVerdict::Kind::CertifiedNonSpecial:
      return "CertifiedNonSpecial";
    case SpecialityVerdict::Kind::ObservedSpecial:
      return "ObservedSpecial";
    case SpecialityVerdict::Kind::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

std::string SpecialityVerdict::name() const { return to_string(kind); }

RankReport rank_report(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                       const ComputeContext& ctx) {
  if (ctx.trials < 1) throw InputError("at least one trial is required");
  RankReport report;
  report.trials = ctx.trials;
  for (int t = 0; t < ctx.trials; ++t) {
    RandomStream rng = ctx.trial_stream(t);
    report.seeds.push_back(rng.seed().value);
    const ExactMatrix m = build_matrix(spec, scheme, ctx.field, rng);
    report.rows = m.rows();
    report.cols = m.cols();
    report.trial_ranks.push_back(rank(m));
  }
  report.observed_rank = *std::max_element(report.trial_ranks.begin(), report.trial_ranks.end());
  return report;
}

SpecialityVerdict verdict_for(const RankReport& report) {
  const std::size_t expected = report.expected_rank();
  if (report.observed_rank > expected) throw InvariantBreach("rank exceeds min(rows, cols)");
  if (report.observed_rank == expected) {
    return {SpecialityVerdict::Kind::CertifiedNonSpecial, 0};
  }
  const bool consistent = std::all_of(report.trial_ranks.begin(), report.trial_ranks.end(),
                                      [&](std::size_t r) { return r == report.observed_rank; });
  return {consistent ? SpecialityVerdict::Kind::ObservedSpecial
                     : SpecialityVerdict::Kind::Undetermined,
          expected - report.observed_rank};
}

SpecialityResult speciality(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                            const ComputeContext& ctx) {
  RankReport report = rank_report(spec, scheme, ctx);
  SpecialityVerdict verdict = verdict_for(report);
  return {std::move(report), verdict};
}

std::int64_t system_dimension(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                              const ComputeContext& ctx) {
  const RankReport r = rank_report(spec, scheme, ctx);
  return static_cast<std::int64_t>(r.cols) - static_cast<std::int64_t>(r.observed_rank) - 1;
}

}  // namespace oscusec
