#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscusec/algebra/context.hpp"
#include "oscusec/interpolation/fat_points.hpp"

namespace oscusec {

// A zero-dimensional scheme of P^3 during the descent. Points already moved
// onto the fixed plane H = {last affine coordinate = 0} stay there.
struct SchemeTally {
  std::int64_t triples = 0;        // general triple points
  std::int64_t doubles = 0;        // general double points
  std::int64_t plane_doubles = 0;  // double points supported on H
  std::int64_t plane_simples = 0;  // simple points on H

  std::int64_t conditions() const noexcept {
    return 10 * triples + 4 * doubles + 4 * plane_doubles + plane_simples;
  }
  bool empty() const noexcept {
    return triples == 0 && doubles == 0 && plane_doubles == 0 && plane_simples == 0;
  }
  FatPointScheme to_scheme() const;

  friend bool operator==(const SchemeTally&, const SchemeTally&) = default;
};

// General union of fat points of H = P^2.
struct TraceScheme {
  std::int64_t triples = 0;
  std::int64_t doubles = 0;
  std::int64_t simples = 0;

  std::int64_t length() const noexcept { return 6 * triples + 3 * doubles + simples; }
  FatPointScheme to_scheme() const;

  friend bool operator==(const TraceScheme&, const TraceScheme&) = default;
};

// Which branch of the descent a step took: b_{t,2} in 0..2 places simple
// points only, b_{t,2} in 3..5 also places a double point 2P on H.
enum class SubCase { SmallRemainder, DoublePoint };

std::string to_string(SubCase s);

struct DescentStep {
  int degree = 0;
  SchemeTally parent;
  std::int64_t triples_specialized = 0;
  std::int64_t doubles_specialized = 0;
  std::int64_t simples_added = 0;  // fresh simple points placed on H
  std::int64_t remainder = 0;      // b_{t,2}
  SubCase sub_case = SubCase::SmallRemainder;
  bool extra_double = false;  // at least one 2P placed on H
  // Slots left after the triples, b_{t,2} + 6(a_{t,2} - a') less the traces
  // forced by points already on H.
  std::int64_t padded_remainder = 0;
  TraceScheme trace;
  SchemeTally residual;

  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

struct TerminalCase {
  int degree = 0;
  SchemeTally scheme;
  friend bool operator==(const TerminalCase&, const TerminalCase&) = default;
};

inline constexpr int kCertificateFormatVersion = 1;

struct HoraceCertificate {
  int version = kCertificateFormatVersion;
  int degree = 0;
  std::int64_t triples = 0;
  std::int64_t doubles = 0;
  std::vector<DescentStep> steps;
  TerminalCase terminal;

  friend bool operator==(const HoraceCertificate&, const HoraceCertificate&) = default;
};

// Deterministic greedy descent certifying surjectivity of the restriction map
// for a general union of a triple and b double points in degree k. At each
// degree t: as many triples as fit on H, then as many double points as fit,
// then fresh simple points up to length C(t+2, 2). If that trace is a special
// plane configuration, doubles are traded for simple points one at a time.
// Stops at degree 3, on an empty scheme, or when no trade avoids the list.
// Throws ConditionNotMet unless check_A(k, a, b) certifies.
HoraceCertificate build_certificate(int k, std::int64_t a, std::int64_t b);

struct StepCheck {
  std::size_t index = 0;
  int degree = 0;
  bool trace_ok = false;
  std::string trace_method;  // "classification" or "direct-rank"
  bool bookkeeping_ok = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<StepCheck> steps;
  bool terminal_ok = false;
  std::size_t terminal_rows = 0;
  std::size_t terminal_rank = 0;
  std::string terminal_detail;

  // First failure, if any.
  std::optional<std::size_t> failed_step;
  std::string failed_check;  // "trace", "bookkeeping" or "terminal"
  std::string failure_detail;

  bool passed() const noexcept { return !failed_step.has_value(); }
  // Throws StepFailed describing the first failure.
  void require_passed() const;
};

struct VerifyOptions {
  // Check every trace by direct plane rank even where the classification
  // settles it.
  bool direct_traces = false;
};

// Checks each step (trace maximal rank, conservation of conditions, chain
// consistency) and the terminal scheme by direct P^3 rank.
VerificationReport verify_certificate(const HoraceCertificate& cert, const ComputeContext& ctx,
                                      VerifyOptions options = {});

nlohmann::ordered_json certificate_to_json(const HoraceCertificate& cert);
// Throws InputError on malformed documents.
HoraceCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace oscusec
