#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oscusec/algebra/context.hpp"
#include "oscusec/interpolation/fat_points.hpp"
#include "oscusec/interpolation/linear_system.hpp"

namespace oscusec {

struct RankReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t observed_rank = 0;  // max over trials
  int trials = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> trial_ranks;

  std::size_t expected_rank() const noexcept { return rows < cols ? rows : cols; }
};

// CertifiedNonSpecial is a proof (semicontinuity). ObservedSpecial only
// records that every trial hit the same deficient rank; it is evidence, not a
// proof. Undetermined: deficient in every trial, but the trials disagree.
struct SpecialityVerdict {
  enum class Kind { CertifiedNonSpecial, ObservedSpecial, Undetermined };

  Kind kind = Kind::Undetermined;
  std::size_t deficiency = 0;

  std::string name() const;
  friend bool operator==(const SpecialityVerdict&, const SpecialityVerdict&) = default;
};

std::string to_string(SpecialityVerdict::Kind kind);

struct SpecialityResult {
  RankReport report;
  SpecialityVerdict verdict;
};

// Runs ctx.trials independent realizations of the scheme and reports the best rank.
RankReport rank_report(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                       const ComputeContext& ctx);

SpecialityVerdict verdict_for(const RankReport& report);

SpecialityResult speciality(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                            const ComputeContext& ctx);

// Projective dimension cols - rank - 1; -1 means the system is empty.
std::int64_t system_dimension(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                              const ComputeContext& ctx);

}  // namespace oscusec
