#include "oscusec/horace/certificate.hpp"

#include <algorithm>

#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"
#include "oscusec/horace/conditions.hpp"
#include "oscusec/interpolation/speciality.hpp"

namespace oscusec {

FatPointScheme SchemeTally::to_scheme() const {
  FatPointScheme s;
  s.add(FatPoint::generic(3), static_cast<int>(triples));
  s.add(FatPoint::generic(2), static_cast<int>(doubles));
  s.add(FatPoint::on_hyperplane(2), static_cast<int>(plane_doubles));
  s.add(FatPoint::on_hyperplane(1), static_cast<int>(plane_simples));
  return s;
}

FatPointScheme TraceScheme::to_scheme() const {
  FatPointScheme s;
  s.add(FatPoint::generic(3), static_cast<int>(triples));
  s.add(FatPoint::generic(2), static_cast<int>(doubles));
  s.add(FatPoint::generic(1), static_cast<int>(simples));
  return s;
}

std::string to_string(SubCase s) {
  return s == SubCase::SmallRemainder ? "small-remainder" : "double-point";
}

HoraceCertificate build_certificate(int k, std::int64_t a, std::int64_t b) {
  if (!check_A(k, a, b).certified()) {
    throw ConditionNotMet("check_A(" + std::to_string(k) + "," + std::to_string(a) + "," +
                          std::to_string(b) + ") does not hold");
  }
  HoraceCertificate cert;
  cert.degree = k;
  cert.triples = a;
  cert.doubles = b;

  SchemeTally scheme{a, b, 0, 0};
  int t = k;
  while (t > 3 && !scheme.empty()) {
    const std::int64_t capacity = binomial(t + 2, 2);
    const std::int64_t free = capacity - 3 * scheme.plane_doubles - scheme.plane_simples;
    if (free < 0) break;

    DescentStep step;
    step.degree = t;
    step.parent = scheme;
    step.remainder = split(t, 2).b;
    step.sub_case = step.remainder <= 2 ? SubCase::SmallRemainder : SubCase::DoublePoint;
    step.triples_specialized = std::min(scheme.triples, free / 6);
    step.padded_remainder = free - 6 * step.triples_specialized;
    step.doubles_specialized = std::min(scheme.doubles, step.padded_remainder / 3);
    // A special plane trace is avoided by moving fewer doubles onto H and
    // filling with simple points instead.
    while (step.doubles_specialized > 0 &&
           p2_exceptional(t, step.triples_specialized,
                          scheme.plane_doubles + step.doubles_specialized)) {
      --step.doubles_specialized;
    }
    step.simples_added = step.padded_remainder - 3 * step.doubles_specialized;
    step.extra_double = step.doubles_specialized > 0;

    step.trace = {step.triples_specialized, scheme.plane_doubles + step.doubles_specialized,
                  scheme.plane_simples + step.simples_added};
    if (p2_exceptional(t, step.trace.triples, step.trace.doubles)) break;

    step.residual = {scheme.triples - step.triples_specialized,
                     scheme.doubles - step.doubles_specialized, step.triples_specialized,
                     scheme.plane_doubles + step.doubles_specialized};
    scheme = step.residual;
    cert.steps.push_back(step);
    --t;
  }
  cert.terminal = {t, scheme};
  return cert;
}

void VerificationReport::require_passed() const {
  if (!failed_step) return;
  throw StepFailed(*failed_step, failed_check, failure_detail);
}

namespace {

bool nonnegative(const SchemeTally& s) {
  return s.triples >= 0 && s.doubles >= 0 && s.plane_doubles >= 0 && s.plane_simples >= 0;
}

// Empty string when the bookkeeping of one step is consistent.
std::string bookkeeping_problem(const DescentStep& step, const SchemeTally& expected_parent,
                                int expected_degree) {
  if (step.degree != expected_degree) return "degree does not descend by one";
  if (!(step.parent == expected_parent)) return "parent scheme differs from the previous residual";
  if (!nonnegative(step.parent) || !nonnegative(step.residual)) return "negative point count";
  if (step.triples_specialized < 0 || step.doubles_specialized < 0 || step.simples_added < 0) {
    return "negative specialization count";
  }
  if (step.triples_specialized > step.parent.triples ||
      step.doubles_specialized > step.parent.doubles) {
    return "specializes more points than the parent scheme has";
  }
  const TraceScheme trace{step.triples_specialized,
                          step.parent.plane_doubles + step.doubles_specialized,
                          step.parent.plane_simples + step.simples_added};
  if (!(step.trace == trace)) return "trace does not match the specialized points";
  const SchemeTally residual{step.parent.triples - step.triples_specialized,
                             step.parent.doubles - step.doubles_specialized,
                             step.triples_specialized,
                             step.parent.plane_doubles + step.doubles_specialized};
  if (!(step.residual == residual)) return "residual does not match the specialized points";
  if (step.parent.conditions() + step.simples_added !=
      step.trace.length() + step.residual.conditions()) {
    return "trace and residual conditions do not add up to the parent conditions";
  }
  if (step.degree >= 2) {
    const std::int64_t b = split(step.degree, 2).b;
    if (step.remainder != b) return "recorded b_{t,2} is wrong";
    if (step.sub_case != (b <= 2 ? SubCase::SmallRemainder : SubCase::DoublePoint)) {
      return "sub-case tag does not match b_{t,2}";
    }
  }
  if (step.extra_double != (step.doubles_specialized > 0)) return "2P flag is inconsistent";
  return {};
}

std::size_t max_rank(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                     const ComputeContext& ctx) {
  return rank_report(spec, scheme, ctx).observed_rank;
}

}  // namespace

VerificationReport verify_certificate(const HoraceCertificate& cert, const ComputeContext& ctx,
                                      VerifyOptions options) {
  VerificationReport report;
  auto fail = [&](std::size_t index, const char* check, std::string detail) {
    if (!report.failed_step) {
      report.failed_step = index;
      report.failed_check = check;
      report.failure_detail = std::move(detail);
    }
  };

  if (cert.version != kCertificateFormatVersion) {
    fail(0, "bookkeeping", "unsupported certificate version");
    return report;
  }

  SchemeTally expected{cert.triples, cert.doubles, 0, 0};
  int degree = cert.degree;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const DescentStep& step = cert.steps[i];
    StepCheck check;
    check.index = i;
    check.degree = step.degree;

    const std::int64_t capacity = binomial(step.degree + 2, 2);
    if (step.trace.triples < 0 || step.trace.doubles < 0 || step.trace.simples < 0) {
      check.trace_ok = false;
      check.detail = "negative trace count";
    } else if (step.trace.length() > capacity) {
      check.trace_ok = false;
      check.detail = "trace length " + std::to_string(step.trace.length()) + " exceeds C(t+2,2) = " +
                     std::to_string(capacity);
    } else if (step.degree >= 3 && p2_exceptional(step.degree, step.trace.triples, step.trace.doubles)) {
      check.trace_ok = false;
      check.trace_method = "classification";
      check.detail = "trace is the special plane system (" + std::to_string(step.degree) + "," +
                     std::to_string(step.trace.triples) + "," +
                     std::to_string(step.trace.doubles) + ")";
    } else if (step.degree >= 3 && !options.direct_traces) {
      // Not listed, so the fat part has maximal rank; general simple points
      // keep a subabundant system surjective.
      check.trace_ok = true;
      check.trace_method = "classification";
    } else {
      const auto plane = LinearSystemSpec::projective(2, step.degree);
      const auto scheme = step.trace.to_scheme();
      const auto r = max_rank(plane, scheme, ctx);
      check.trace_method = "direct-rank";
      check.trace_ok = r == static_cast<std::size_t>(step.trace.length());
      if (!check.trace_ok) {
        check.detail = "trace rank " + std::to_string(r) + " < length " +
                       std::to_string(step.trace.length());
      }
    }
    if (!check.trace_ok) fail(i, "trace", check.detail);

    const std::string problem = bookkeeping_problem(step, expected, degree);
    check.bookkeeping_ok = problem.empty();
    if (!check.bookkeeping_ok) {
      if (!check.detail.empty()) check.detail += "; ";
      check.detail += problem;
      fail(i, "bookkeeping", problem);
    }
    report.steps.push_back(check);
    expected = step.residual;
    --degree;
  }

  const std::size_t terminal_index = cert.steps.size();
  if (cert.terminal.degree != degree || !(cert.terminal.scheme == expected) ||
      !nonnegative(cert.terminal.scheme)) {
    report.terminal_detail = "terminal case does not continue the descent";
    fail(terminal_index, "bookkeeping", report.terminal_detail);
    return report;
  }
  if (cert.terminal.degree < 0) {
    report.terminal_detail = "negative terminal degree";
    fail(terminal_index, "terminal", report.terminal_detail);
    return report;
  }

  const auto space = LinearSystemSpec::projective(3, cert.terminal.degree);
  report.terminal_rows = static_cast<std::size_t>(cert.terminal.scheme.conditions());
  if (cert.terminal.scheme.empty()) {
    report.terminal_ok = true;
  } else if (cert.terminal.scheme.conditions() > space.basis_size()) {
    report.terminal_detail = "terminal scheme imposes more conditions than there are sections";
  } else {
    report.terminal_rank = max_rank(space, cert.terminal.scheme.to_scheme(), ctx);
    report.terminal_ok = report.terminal_rank == report.terminal_rows;
    if (!report.terminal_ok) {
      report.terminal_detail = "terminal rank " + std::to_string(report.terminal_rank) + " < " +
                               std::to_string(report.terminal_rows) + " conditions";
    }
  }
  if (!report.terminal_ok) fail(terminal_index, "terminal", report.terminal_detail);
  return report;
}

namespace {

nlohmann::ordered_json tally_to_json(const SchemeTally& s) {
  nlohmann::ordered_json j;
  j["triples"] = s.triples;
  j["doubles"] = s.doubles;
  j["plane_doubles"] = s.plane_doubles;
  j["plane_simples"] = s.plane_simples;
  return j;
}

std::int64_t get_count(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("certificate: missing integer field \"") + key + "\"");
  }
  return j.at(key).get<std::int64_t>();
}

const nlohmann::json& get_object(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_object()) {
    throw InputError(std::string("certificate: missing object \"") + key + "\"");
  }
  return j.at(key);
}

SchemeTally tally_from_json(const nlohmann::json& j) {
  return {get_count(j, "triples"), get_count(j, "doubles"), get_count(j, "plane_doubles"),
          get_count(j, "plane_simples")};
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const HoraceCertificate& cert) {
  nlohmann::ordered_json j;
  j["format"] = "oscusec-horace-certificate";
  j["version"] = cert.version;
  j["degree"] = cert.degree;
  j["triples"] = cert.triples;
  j["doubles"] = cert.doubles;
  j["plane"] = "last affine coordinate = 0";
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : cert.steps) {
    nlohmann::ordered_json step;
    step["degree"] = s.degree;
    step["parent"] = tally_to_json(s.parent);
    step["specialized"] = {{"triples", s.triples_specialized},
                           {"doubles", s.doubles_specialized},
                           {"simples", s.simples_added}};
    nlohmann::ordered_json sub;
    sub["b_t2"] = s.remainder;
    sub["kind"] = to_string(s.sub_case);
    sub["double_point"] = s.extra_double;
    sub["padded_remainder"] = s.padded_remainder;
    step["sub_case"] = sub;
    nlohmann::ordered_json trace;
    trace["triples"] = s.trace.triples;
    trace["doubles"] = s.trace.doubles;
    trace["simples"] = s.trace.simples;
    step["trace"] = trace;
    step["residual"] = tally_to_json(s.residual);
    j["steps"].push_back(step);
  }
  nlohmann::ordered_json terminal;
  terminal["degree"] = cert.terminal.degree;
  terminal["scheme"] = tally_to_json(cert.terminal.scheme);
  j["terminal"] = terminal;
  return j;
}

HoraceCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("certificate must be a JSON object");
  if (j.value("format", std::string()) != "oscusec-horace-certificate") {
    throw InputError("not a Horace certificate document");
  }
  HoraceCertificate cert;
  cert.version = static_cast<int>(get_count(j, "version"));
  if (cert.version != kCertificateFormatVersion) {
    throw InputError("unsupported certificate version " + std::to_string(cert.version));
  }
  cert.degree = static_cast<int>(get_count(j, "degree"));
  cert.triples = get_count(j, "triples");
  cert.doubles = get_count(j, "doubles");
  if (!j.contains("steps") || !j.at("steps").is_array()) {
    throw InputError("certificate: missing array \"steps\"");
  }
  for (const auto& s : j.at("steps")) {
    DescentStep step;
    step.degree = static_cast<int>(get_count(s, "degree"));
    step.parent = tally_from_json(get_object(s, "parent"));
    const auto& spec = get_object(s, "specialized");
    step.triples_specialized = get_count(spec, "triples");
    step.doubles_specialized = get_count(spec, "doubles");
    step.simples_added = get_count(spec, "simples");
    const auto& sub = get_object(s, "sub_case");
    step.remainder = get_count(sub, "b_t2");
    const std::string kind = sub.value("kind", std::string());
    if (kind == "small-remainder") {
      step.sub_case = SubCase::SmallRemainder;
    } else if (kind == "double-point") {
      step.sub_case = SubCase::DoublePoint;
    } else {
      throw InputError("certificate: unknown sub-case \"" + kind + "\"");
    }
    if (!sub.contains("double_point") || !sub.at("double_point").is_boolean()) {
      throw InputError("certificate: missing boolean \"double_point\"");
    }
    step.extra_double = sub.at("double_point").get<bool>();
    step.padded_remainder = get_count(sub, "padded_remainder");
    const auto& trace = get_object(s, "trace");
    step.trace = {get_count(trace, "triples"), get_count(trace, "doubles"),
                  get_count(trace, "simples")};
    step.residual = tally_from_json(get_object(s, "residual"));
    cert.steps.push_back(step);
  }
  const auto& terminal = get_object(j, "terminal");
  cert.terminal.degree = static_cast<int>(get_count(terminal, "degree"));
  cert.terminal.scheme = tally_from_json(get_object(terminal, "scheme"));
  return cert;
}

}  // namespace oscusec
