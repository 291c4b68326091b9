#include "oscusec/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "oscusec/cli/config.hpp"
#include "oscusec/cli/tables.hpp"
#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"
#include "oscusec/horace/certificate.hpp"
#include "oscusec/horace/conditions.hpp"
#include "oscusec/interpolation/scheme_io.hpp"
#include "oscusec/interpolation/speciality.hpp"
#include "oscusec/terracini/osculating.hpp"

namespace oscusec::cli {

namespace {

using Json = nlohmann::ordered_json;

// Which linear system a command works on, from --pn/--d or --hirzebruch/--a/--b.
struct SpecFlags {
  std::optional<int> pn;
  std::optional<int> d;
  std::optional<int> hirzebruch;
  std::optional<int> a;
  std::optional<int> b;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pn", pn, "projective space P^n");
    cmd->add_option("--d", d, "degree of the forms on P^n");
    cmd->add_option("--hirzebruch", hirzebruch, "Hirzebruch surface F_n");
    cmd->add_option("--a", a, "coefficient of H");
    cmd->add_option("--b", b, "coefficient of F");
  }

  bool given() const { return pn || d || hirzebruch || a || b; }

  LinearSystemSpec resolve() const {
    if (pn && d && !hirzebruch && !a && !b) return LinearSystemSpec::projective(*pn, *d);
    if (hirzebruch && a && b && !pn && !d) return LinearSystemSpec::hirzebruch(*hirzebruch, *a, *b);
    throw InputError("give either --pn N --d D or --hirzebruch N --a A --b B");
  }
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render_record(const Json& record, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json:
      out << record.dump(2) << '\n';
      break;
    case OutputFormat::Csv: {
      bool first = true;
      for (const auto& [key, _] : record.items()) {
        out << (first ? "" : ",") << csv_cell(key);
        first = false;
      }
      out << '\n';
      first = true;
      for (const auto& [_, value] : record.items()) {
        out << (first ? "" : ",") << csv_cell(scalar_text(value));
        first = false;
      }
      out << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      std::size_t width = 0;
      for (const auto& [key, _] : record.items()) width = std::max(width, key.size());
      for (const auto& [key, value] : record.items()) {
        out << key << std::string(width - key.size() + 2, ' ') << scalar_text(value) << '\n';
      }
      break;
    }
  }
  return out.str();
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void write(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + cfg_.out);
    file << text;
  }

  void record(const Json& j) { write(render_record(j, cfg_.format)); }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

Json rank_fields(const RankReport& report) {
  Json j;
  j["sections"] = report.cols;
  j["conditions"] = report.rows;
  j["rank"] = report.observed_rank;
  j["trial_ranks"] = report.trial_ranks;
  j["expected_rank"] = report.expected_rank();
  return j;
}

// Common multiplicity of an all-generic scheme, if there is one.
std::optional<int> uniform_generic_multiplicity(const FatPointScheme& scheme) {
  if (scheme.points.empty()) return std::nullopt;
  const int m = scheme.points.front().multiplicity;
  for (const auto& p : scheme.points) {
    if (p.multiplicity != m || !std::holds_alternative<GenericLocation>(p.location)) {
      return std::nullopt;
    }
  }
  return m;
}

// Which tabulated condition predicts the osculating dimension of this case.
std::string prediction_source(const LinearSystemSpec& spec, int m, int points) {
  const int h = points - 1;
  if (h < 1) return "single point";
  if (spec.is_projective()) {
    const auto& p = spec.projective_system();
    if (p.ambient_dim == 3 && m == 3 && p.degree >= 4) {
      return "theorem2 " + to_string(theorem2_verdict(p.degree, h).kind);
    }
    if (p.ambient_dim == 2 && p.degree >= 1 && m <= 20) {
      if (h == 1 || h == 2 || h == 4 || h == 5 || h == 6 || h == 7) {
        return std::string("corollary1 ") +
               (corollary1_verdict(p.degree, m, h) ? "Certified" : "NotCertified");
      }
      return "corollary1 not tabulated for h=" + std::to_string(h);
    }
  } else if (m <= 3) {
    const auto& s = spec.hirzebruch_system();
    const auto match = hirzebruch_class_exceptional(s.twist, s.h_coeff, s.f_coeff, m, points);
    return std::string("corollary2 ") + (match.exceptional ? "NotCertified" : "Certified");
  }
  return "expected count";
}

// --- dim --------------------------------------------------------------------

struct DimOptions {
  SpecFlags spec;
  int triple = 0;
  int dbl = 0;
  int simple = 0;
  std::vector<std::string> points;
  std::string scheme_file;
};

SchemeDocument dim_document(const DimOptions& opt) {
  if (!opt.scheme_file.empty()) {
    if (opt.spec.given() || opt.triple || opt.dbl || opt.simple || !opt.points.empty()) {
      throw InputError("--scheme cannot be combined with spec or point flags");
    }
    std::ifstream in(opt.scheme_file);
    if (!in) throw InputError("cannot read " + opt.scheme_file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return scheme_document_from_json(j);
  }
  SchemeDocument doc{opt.spec.resolve(), {}};
  if (opt.triple < 0 || opt.dbl < 0 || opt.simple < 0) throw InputError("point counts must be >= 0");
  doc.scheme.add(FatPoint::generic(3), opt.triple);
  doc.scheme.add(FatPoint::generic(2), opt.dbl);
  doc.scheme.add(FatPoint::generic(1), opt.simple);
  for (const auto& text : opt.points) {
    const auto colon = text.find(':');
    const auto values = parse_int_list(colon == std::string::npos
                                           ? text
                                           : text.substr(0, colon));
    const int count = colon == std::string::npos ? 1 : parse_int_list(text.substr(colon + 1)).front();
    if (values.size() != 1 || values.front() < 1 || count < 0) {
      throw InputError("--point expects MULT[:COUNT], got \"" + text + "\"");
    }
    doc.scheme.add(FatPoint::generic(values.front()), count);
  }
  return doc;
}

int cmd_dim(const DimOptions& opt, const RunConfig& cfg, Output& out) {
  const SchemeDocument doc = dim_document(opt);
  const ComputeContext ctx = cfg.context();
  const SpecialityResult result = speciality(doc.spec, doc.scheme, ctx);
  const RankReport& r = result.report;

  Json j;
  j["command"] = "dim";
  j["spec"] = doc.spec.describe();
  j["points"] = doc.scheme.points.size();
  j.update(rank_fields(r));
  j["system_dimension"] =
      static_cast<std::int64_t>(r.cols) - static_cast<std::int64_t>(r.observed_rank) - 1;
  j["expected_system_dimension"] =
      std::max<std::int64_t>(-1, static_cast<std::int64_t>(r.cols) -
                                     static_cast<std::int64_t>(r.rows) - 1);
  j["verdict"] = result.verdict.name();
  j["deficiency"] = result.verdict.deficiency;
  if (const auto m = uniform_generic_multiplicity(doc.scheme)) {
    const int points = static_cast<int>(doc.scheme.points.size());
    j["osculating_order"] = *m - 1;
    j["secant_index"] = points - 1;
    j["osculating_dimension"] = static_cast<std::int64_t>(r.observed_rank) - 1;
    j["predicted_osculating_dimension"] = static_cast<std::int64_t>(r.expected_rank()) - 1;
    j["prediction_source"] = prediction_source(doc.spec, *m, points);
  }
  out.record(j);
  return kExitOk;
}

// --- terracini ---------------------------------------------------------------

struct TerraciniOptions {
  SpecFlags spec;
  int m = 1;
  int h = 1;
};

int cmd_terracini(const TerraciniOptions& opt, const RunConfig& cfg, Output& out) {
  const LinearSystemSpec spec = opt.spec.resolve();
  if (opt.m < 0 || opt.h < 0) throw InputError("--m and --h must be >= 0");
  const ComputeContext ctx = cfg.context();
  const std::int64_t secant = secant_osculating_dim(spec, opt.m, opt.h, ctx);
  const std::int64_t interpolation = interpolation_osculating_dim(spec, opt.m, opt.h, ctx);
  const std::int64_t join = join_osculating_dim(secant_join(spec, opt.h, opt.m), ctx);
  const bool agree = secant == join && join == interpolation;

  Json j;
  j["command"] = "terracini";
  j["spec"] = spec.describe();
  j["order"] = opt.m;
  j["h"] = opt.h;
  j["secant_osculating_dim"] = secant;
  j["join_osculating_dim"] = join;
  j["interpolation_dim"] = interpolation;
  j["agree"] = agree;
  out.record(j);
  return agree ? kExitOk : kExitInvariantBreach;
}

// --- horace ------------------------------------------------------------------

struct HoraceOptions {
  std::vector<std::int64_t> kab;
  std::string file;
  bool direct_traces = false;
};

Json inequality_json(const ConditionVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  const auto& q = v.evaluated.front();
  j["inequality"] = q.label;
  j["left"] = q.left;
  j["right"] = q.right;
  return j;
}

std::tuple<int, std::int64_t, std::int64_t> kab_of(const HoraceOptions& opt) {
  if (opt.kab.size() != 3) throw InputError("expected three integers K A B");
  return {static_cast<int>(opt.kab[0]), opt.kab[1], opt.kab[2]};
}

int cmd_horace_check(const HoraceOptions& opt, const RunConfig& cfg, Output& out) {
  const auto [k, a, b] = kab_of(opt);
  const ConditionVerdict va = check_A(k, a, b);
  const ConditionVerdict vb = check_B(k, a, b);
  Json j;
  j["command"] = "horace check";
  j["k"] = k;
  j["a"] = a;
  j["b"] = b;
  j["gamma"] = va.gamma;
  j["conditions"] = 10 * a + 4 * b;
  j["sections"] = binomial(k + 3, 3);
  if (cfg.format == OutputFormat::Json) {
    j["A"] = inequality_json(va);
    j["B"] = inequality_json(vb);
  } else {
    const auto& qa = va.evaluated.front();
    const auto& qb = vb.evaluated.front();
    j["A"] = to_string(va.kind) + "  (" + std::to_string(qa.left) + " <= " +
             std::to_string(qa.right) + ")";
    j["B"] = to_string(vb.kind) + "  (" + std::to_string(qb.left) + " >= " +
             std::to_string(qb.right) + ")";
  }
  const bool either = va.certified() || vb.certified();
  j["verdict"] = va.certified() ? "CertifiedByA" : vb.certified() ? "CertifiedByB" : "NotCertified";
  (void)either;
  out.record(j);
  return kExitOk;
}

int cmd_horace_build(const HoraceOptions& opt, const RunConfig&, Output& out) {
  const auto [k, a, b] = kab_of(opt);
  const HoraceCertificate cert = build_certificate(k, a, b);
  out.write(certificate_to_json(cert).dump(2) + "\n");
  return kExitOk;
}

int cmd_horace_verify(const HoraceOptions& opt, const RunConfig& cfg, Output& out) {
  std::ifstream in(opt.file);
  if (!in) throw InputError("cannot read " + opt.file);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const HoraceCertificate cert = certificate_from_json(doc);
  const VerificationReport report =
      verify_certificate(cert, cfg.context(), VerifyOptions{opt.direct_traces});

  Json j;
  j["command"] = "horace verify";
  j["degree"] = cert.degree;
  j["triples"] = cert.triples;
  j["doubles"] = cert.doubles;
  j["steps"] = cert.steps.size();
  if (cfg.format == OutputFormat::Json) {
    Json steps = Json::array();
    for (const auto& s : report.steps) {
      Json sj;
      sj["index"] = s.index;
      sj["degree"] = s.degree;
      sj["trace_ok"] = s.trace_ok;
      sj["trace_method"] = s.trace_method;
      sj["bookkeeping_ok"] = s.bookkeeping_ok;
      sj["detail"] = s.detail;
      steps.push_back(sj);
    }
    j["step_checks"] = steps;
  } else {
    std::string summary;
    for (const auto& s : report.steps) {
      if (!summary.empty()) summary += "; ";
      summary += "t=" + std::to_string(s.degree) + (s.trace_ok && s.bookkeeping_ok ? " ok" : " FAIL");
    }
    j["step_checks"] = summary;
  }
  j["terminal_degree"] = cert.terminal.degree;
  j["terminal_conditions"] = report.terminal_rows;
  j["terminal_rank"] = report.terminal_rank;
  j["terminal_ok"] = report.terminal_ok;
  j["passed"] = report.passed();
  if (!report.passed()) {
    j["failed_step"] = *report.failed_step;
    j["failed_check"] = report.failed_check;
    j["failure"] = report.failure_detail;
  }
  out.record(j);
  return report.passed() ? kExitOk : kExitCertificateFailure;
}

// --- tables ------------------------------------------------------------------

struct TablesOptions {
  std::string which;
  std::string d, h, m, n, a, b;
};

int cmd_tables(const TablesOptions& opt, const RunConfig& cfg, Output& out) {
  TableRequest req;
  req.which = opt.which;
  auto list = [](const std::string& s) { return s.empty() ? std::vector<int>{} : parse_int_list(s); };
  req.d = list(opt.d);
  req.h = list(opt.h);
  req.m = list(opt.m);
  req.n = list(opt.n);
  req.a = list(opt.a);
  req.b = list(opt.b);
  const auto rows = make_table(req, cfg.context(), cfg.worker_count());
  switch (cfg.format) {
    case OutputFormat::Json:
      out.write(table_to_json(req.which, rows).dump(2) + "\n");
      break;
    case OutputFormat::Csv:
      out.write(table_to_csv(req.which, rows));
      break;
    case OutputFormat::Pretty:
      out.write(table_to_pretty(req.which, rows));
      break;
  }
  return kExitOk;
}

// --- special -----------------------------------------------------------------

struct SpecialOptions {
  std::vector<std::int64_t> args;
};

int cmd_special_p2(const SpecialOptions& opt, const RunConfig& cfg, Output& out) {
  if (opt.args.size() != 3) throw InputError("special p2 expects K A B");
  const int k = static_cast<int>(opt.args[0]);
  const std::int64_t a = opt.args[1];
  const std::int64_t b = opt.args[2];
  if (k < 0 || a < 0 || b < 0 || a > 10000 || b > 10000) throw InputError("K A B out of range");
  FatPointScheme scheme;
  scheme.add(FatPoint::generic(3), static_cast<int>(a));
  scheme.add(FatPoint::generic(2), static_cast<int>(b));
  const auto result = speciality(LinearSystemSpec::projective(2, k), scheme, cfg.context());
  const bool listed = p2_exceptional(k, a, b);
  Json j;
  j["command"] = "special p2";
  j["k"] = k;
  j["a"] = a;
  j["b"] = b;
  j["listed"] = listed;
  j.update(rank_fields(result.report));
  j["verdict"] = result.verdict.name();
  j["deficiency"] = result.verdict.deficiency;
  j["consistent"] = listed == (result.verdict.kind != SpecialityVerdict::Kind::CertifiedNonSpecial);
  out.record(j);
  return kExitOk;
}

int cmd_special_hirzebruch(const SpecialOptions& opt, const RunConfig& cfg, Output& out) {
  if (opt.args.size() != 5) throw InputError("special hirzebruch expects N A B M S");
  const int n = static_cast<int>(opt.args[0]);
  const int a = static_cast<int>(opt.args[1]);
  const int b = static_cast<int>(opt.args[2]);
  const int m = static_cast<int>(opt.args[3]);
  const std::int64_t s = opt.args[4];
  if (m < 1 || s < 0 || s > 10000) throw InputError("M must be >= 1 and S in 0..10000");
  const auto spec = LinearSystemSpec::hirzebruch(n, a, b);
  const auto match = hirzebruch_class_exceptional(n, a, b, m, s);
  const auto result = speciality(spec, FatPointScheme::uniform(m, static_cast<int>(s)), cfg.context());
  Json j;
  j["command"] = "special hirzebruch";
  j["spec"] = spec.describe();
  j["multiplicity"] = m;
  j["points"] = s;
  j["listed"] = match.exceptional;
  j["family"] = match.family;
  j["interpretation_dependent"] = match.interpretation_dependent;
  j.update(rank_fields(result.report));
  j["verdict"] = result.verdict.name();
  j["deficiency"] = result.verdict.deficiency;
  out.record(j);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Osculating spaces to secant varieties: exact fat-point ranks and Horace certificates",
               "oscusec"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  try {
    cfg = config_from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  std::string format = "pretty";
  app.add_option("--prime", cfg.prime, "prime modulus (env OSCUSEC_PRIME)");
  app.add_option("--seed", cfg.seed, "master seed (env OSCUSEC_SEED)");
  app.add_option("--trials", cfg.trials, "independent random trials");
  app.add_option("--format", format, "json | csv | pretty");
  app.add_option("-o,--out", cfg.out, "write output to a file");
  app.add_option("--threads", cfg.threads, "worker threads for tables (0: all cores)");

  DimOptions dim;
  auto* dim_cmd = app.add_subcommand("dim", "dimension and speciality of a fat-point system");
  dim.spec.attach(dim_cmd);
  dim_cmd->add_option("--triple", dim.triple, "generic triple points");
  dim_cmd->add_option("--double", dim.dbl, "generic double points");
  dim_cmd->add_option("--simple", dim.simple, "generic simple points");
  dim_cmd->add_option("--point", dim.points, "generic points MULT[:COUNT]");
  dim_cmd->add_option("--scheme", dim.scheme_file, "scheme JSON document");

  TerraciniOptions terracini;
  auto* terracini_cmd =
      app.add_subcommand("terracini", "osculating dimension of S^h(X) by three independent routes");
  // --h is the secant index here, so help is long-form only.
  terracini_cmd->set_help_flag("--help", "print this help and exit");
  terracini.spec.attach(terracini_cmd);
  terracini_cmd->add_option("--m", terracini.m, "osculating order")->required();
  terracini_cmd->add_option("--h", terracini.h, "secant index")->required();

  HoraceOptions horace;
  auto* horace_cmd = app.add_subcommand("horace", "A/B conditions and Horace certificates");
  horace_cmd->require_subcommand(1);
  auto* check_cmd = horace_cmd->add_subcommand("check", "evaluate both conditions for K A B");
  check_cmd->add_option("kab", horace.kab, "K A B")->expected(3)->required();
  auto* build_cmd = horace_cmd->add_subcommand("build", "build a certificate for K A B");
  build_cmd->add_option("kab", horace.kab, "K A B")->expected(3)->required();
  auto* verify_cmd = horace_cmd->add_subcommand("verify", "verify a certificate file");
  verify_cmd->add_option("file", horace.file, "certificate JSON")->required();
  verify_cmd->add_flag("--direct-traces", horace.direct_traces,
                       "check every trace by direct rank");

  TablesOptions tables;
  auto* tables_cmd = app.add_subcommand("tables", "condition tables with rank-oracle columns");
  tables_cmd->set_help_flag("--help", "print this help and exit");
  tables_cmd->add_option("which", tables.which, "corollary1 | corollary2 | theorem2 | laplace")
      ->required();
  tables_cmd->add_option("--d", tables.d, "degrees, e.g. 4..8");
  tables_cmd->add_option("--h", tables.h, "secant indices");
  tables_cmd->add_option("--m", tables.m, "multiplicities");
  tables_cmd->add_option("--n", tables.n, "dimension or Hirzebruch twist");
  tables_cmd->add_option("--a", tables.a, "coefficients of H");
  tables_cmd->add_option("--b", tables.b, "coefficients of F");

  SpecialOptions special;
  auto* special_cmd = app.add_subcommand("special", "exceptional-list membership vs direct rank");
  special_cmd->require_subcommand(1);
  auto* p2_cmd = special_cmd->add_subcommand("p2", "plane systems with triple and double points");
  p2_cmd->add_option("args", special.args, "K A B")->expected(3)->required();
  auto* hz_cmd = special_cmd->add_subcommand("hirzebruch", "Hirzebruch systems with s points");
  hz_cmd->add_option("args", special.args, "N A B M S")->expected(5)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    cfg.format = parse_format(format);
    Output sink(cfg, out);
    if (dim_cmd->parsed()) return cmd_dim(dim, cfg, sink);
    if (terracini_cmd->parsed()) return cmd_terracini(terracini, cfg, sink);
    if (check_cmd->parsed()) return cmd_horace_check(horace, cfg, sink);
    if (build_cmd->parsed()) return cmd_horace_build(horace, cfg, sink);
    if (verify_cmd->parsed()) return cmd_horace_verify(horace, cfg, sink);
    if (tables_cmd->parsed()) return cmd_tables(tables, cfg, sink);
    if (p2_cmd->parsed()) return cmd_special_p2(special, cfg, sink);
    if (hz_cmd->parsed()) return cmd_special_hirzebruch(special, cfg, sink);
    err << "error: no command\n";
    return kExitInputError;
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariantBreach;
  } catch (const StepFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitCertificateFailure;
  } catch (const ConditionNotMet& e) {
    err << "error: " << e.what() << '\n';
    return kExitCertificateFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace oscusec::cli
