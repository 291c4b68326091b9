#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscusec/algebra/context.hpp"

namespace oscusec::cli {

enum class OutputFormat { Json, Csv, Pretty };

OutputFormat parse_format(const std::string& name);

// Exit-code contract of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInvariantBreach = 3,
  kExitCertificateFailure = 4,
};

struct RunConfig {
  std::uint64_t prime = PrimeField::kDefaultModulus;
  std::uint64_t seed = kDefaultSeed.value;
  int trials = 3;
  OutputFormat format = OutputFormat::Pretty;
  std::string out;  // empty: stdout
  unsigned threads = 0;  // 0: hardware concurrency

  // Throws InputError for a non-prime modulus or trials < 1.
  ComputeContext context() const;
  unsigned worker_count() const;
};

// Defaults overridden by OSCUSEC_PRIME / OSCUSEC_SEED when set.
RunConfig config_from_environment();

// Inclusive integer range written "4..8", a single value "5", or a comma list "1,2,4".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace oscusec::cli
