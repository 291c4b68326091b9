#include "oscusec/cli/tables.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"
#include "oscusec/horace/certificate.hpp"
#include "oscusec/horace/conditions.hpp"
#include "oscusec/interpolation/speciality.hpp"
#include "oscusec/terracini/laplace.hpp"

namespace oscusec::cli {

namespace {

using Task = std::function<TableRow()>;

std::vector<int> or_default(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// Rank-oracle columns shared by the interpolation tables.
void fill_observed(TableRow& row, const LinearSystemSpec& spec, int multiplicity, int points,
                   const ComputeContext& ctx) {
  const RankReport report = rank_report(spec, FatPointScheme::uniform(multiplicity, points), ctx);
  row.observed = static_cast<std::int64_t>(report.observed_rank) - 1;
  row.verdict = verdict_for(report).name();
}

std::vector<Task> corollary1_tasks(const TableRequest& req, const ComputeContext& ctx) {
  std::vector<Task> tasks;
  for (int h : or_default(req.h, {1, 2, 4, 5, 6, 7})) {
    if (h != 1 && h != 2 && h != 4 && h != 5 && h != 6 && h != 7) {
      tasks.push_back([h] {
        TableRow row;
        row.parameters = {{"h", h}};
        row.condition = "Unsupported";
        row.note = "h=" + std::to_string(h) + " is not covered by the condition table";
        return row;
      });
      continue;
    }
    for (int m : or_default(req.m, range(1, 5))) {
      if (m < 1 || m > 20) throw InputError("corollary1 needs 1 <= m <= 20");
      for (int d : or_default(req.d, range(1, 12))) {
        if (d < 1 || d > kMaxDegreeP2) throw InputError("corollary1 needs 1 <= d <= 25");
        tasks.push_back([h, m, d, &ctx] {
          TableRow row;
          row.parameters = {{"h", h}, {"m", m}, {"d", d}};
          row.condition = corollary1_verdict(d, m, h) ? "Certified" : "NotCertified";
          const std::int64_t conditions = (std::int64_t{h} + 1) * binomial(m + 1, 2);
          const std::int64_t sections = binomial(d + 2, 2);
          row.predicted = std::min(conditions, sections) - 1;
          if (conditions > sections) row.note = "superabundant";
          fill_observed(row, LinearSystemSpec::projective(2, d), m, h + 1, ctx);
          return row;
        });
      }
    }
  }
  return tasks;
}

std::vector<Task> corollary2_tasks(const TableRequest& req, const ComputeContext& ctx) {
  std::vector<Task> tasks;
  for (int n : or_default(req.n, range(0, 2))) {
    for (int a : or_default(req.a, range(0, 3))) {
      for (int b : or_default(req.b, range(0, 3))) {
        for (int m : or_default(req.m, range(1, 3))) {
          for (int h : or_default(req.h, range(1, 5))) {
            if (n < 0 || a < 0 || b < 0 || m < 1 || h < 1) {
              throw InputError("corollary2 needs n, a, b >= 0 and m, h >= 1");
            }
            tasks.push_back([=, &ctx] {
              TableRow row;
              row.parameters = {{"n", n}, {"a", a}, {"b", b}, {"m", m}, {"h", h}};
              const auto spec = LinearSystemSpec::hirzebruch(n, a, b);
              const std::int64_t conditions = (std::int64_t{h} + 1) * binomial(m + 1, 2);
              row.predicted = std::min(conditions, spec.basis_size()) - 1;
              if (m > 3) {
                row.condition = "Unsupported";
                row.note = "the exceptional list covers m <= 3";
              } else {
                const HirzebruchMatch match = hirzebruch_class_exceptional(n, a, b, m, h + 1);
                row.condition = match.exceptional ? "NotCertified" : "Certified";
                if (match.exceptional) {
                  row.note = "listed " + match.family;
                  if (match.interpretation_dependent) row.note += " (interpretation-dependent)";
                }
              }
              fill_observed(row, spec, m, h + 1, ctx);
              return row;
            });
          }
        }
      }
    }
  }
  return tasks;
}

// Default h range for a degree: up to one past the first superabundant certification.
std::vector<int> theorem2_h_range(int d) {
  std::vector<int> hs;
  for (int h = 1;; ++h) {
    hs.push_back(h);
    if (theorem2_verdict(d, h).kind == ConditionVerdict::Kind::CertifiedByB) {
      hs.push_back(h + 1);
      return hs;
    }
  }
}

std::string certificate_status(int d, int h, const ComputeContext& ctx) {
  const HoraceCertificate cert = build_certificate(d, h + 1, 0);
  const VerificationReport report = verify_certificate(cert, ctx);
  std::string status = "horace " + std::to_string(d) + " " + std::to_string(h + 1) + " 0: ";
  if (report.passed()) return status + "verified (" + std::to_string(cert.steps.size()) + " steps)";
  return status + "failed at step " + std::to_string(*report.failed_step) + " (" +
         report.failed_check + ")";
}

std::vector<Task> theorem2_tasks(const TableRequest& req, const ComputeContext& ctx) {
  std::vector<Task> tasks;
  for (int d : or_default(req.d, range(4, 8))) {
    if (d < 4 || d > kMaxDegreeP3) throw InputError("theorem2 needs 4 <= d <= 15");
    for (int h : or_default(req.h, theorem2_h_range(d))) {
      if (h < 1) throw InputError("theorem2 needs h >= 1");
      tasks.push_back([d, h, &ctx] {
        TableRow row;
        row.parameters = {{"d", d}, {"h", h}};
        const ConditionVerdict v = theorem2_verdict(d, h);
        row.condition = to_string(v.kind);
        row.predicted = theorem2_predicted_dimension(d, h);
        fill_observed(row, LinearSystemSpec::projective(3, d), 3, h + 1, ctx);
        if (v.kind == ConditionVerdict::Kind::CertifiedByA) {
          row.certificate = certificate_status(d, h, ctx);
        } else if (v.kind == ConditionVerdict::Kind::NotCertified) {
          row.note = "gap interval";
        }
        return row;
      });
    }
  }
  return tasks;
}

std::vector<Task> laplace_tasks(const TableRequest& req) {
  std::vector<Task> tasks;
  for (int n : or_default(req.n, range(1, 4))) {
    for (int h : or_default(req.h, range(1, 4))) {
      if (n < 1 || h < 1) throw InputError("laplace needs n >= 1 and h >= 1");
      tasks.push_back([n, h] {
        const LaplaceCount c = laplace_count(n, h);
        TableRow row;
        row.parameters = {{"n", n}, {"h", h}, {"K", c.secant_dim}};
        row.condition = "Identity";
        row.predicted = c.equations;
        row.observed = c.rewritten;
        row.verdict = c.forms_agree() ? "IdentityHolds" : "IdentityFails";
        if (n == 1) {
          row.note = c.curve_bound_holds() ? "T >= C(K,2)+h" : "T >= C(K,2)+h violated";
        } else {
          row.note = c.surface_bound_holds() ? "T <= C(K,2)" : "T <= C(K,2) violated";
        }
        return row;
      });
    }
  }
  return tasks;
}

std::vector<TableRow> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<TableRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string optional_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> row_cells(const std::string& which, const TableRow& row) {
  return {which,        parameters_text(row),       row.condition, optional_text(row.predicted),
          optional_text(row.observed), row.verdict, row.certificate, row.note};
}

}  // namespace

std::string parameters_text(const TableRow& row) {
  std::string text;
  for (const auto& [name, value] : row.parameters) {
    if (!text.empty()) text += ' ';
    text += name + "=" + std::to_string(value);
  }
  return text;
}

std::vector<TableRow> make_table(const TableRequest& request, const ComputeContext& ctx,
                                 unsigned threads) {
  std::vector<Task> tasks;
  if (request.which == "corollary1") {
    tasks = corollary1_tasks(request, ctx);
  } else if (request.which == "corollary2") {
    tasks = corollary2_tasks(request, ctx);
  } else if (request.which == "theorem2") {
    tasks = theorem2_tasks(request, ctx);
  } else if (request.which == "laplace") {
    tasks = laplace_tasks(request);
  } else {
    throw InputError("unknown table \"" + request.which +
                     "\" (corollary1, corollary2, theorem2, laplace)");
  }
  auto rows = run_tasks(tasks, threads);
  for (auto& row : rows) {
    const bool certified = row.condition.rfind("Certified", 0) == 0;
    if (certified && !row.verdict.empty() && row.verdict.rfind("CertifiedNonSpecial", 0) != 0) {
      if (!row.note.empty()) row.note += "; ";
      row.note += "observed rank contradicts the condition";
    }
  }
  return rows;
}

nlohmann::ordered_json table_to_json(const std::string& which, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["version"] = kTableFormatVersion;
  j["table"] = which;
  j["columns"] = table_columns();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : row.parameters) params[name] = value;
    r["parameters"] = params;
    r["condition"] = row.condition;
    r["predicted"] = row.predicted ? nlohmann::ordered_json(*row.predicted) : nullptr;
    r["observed"] = row.observed ? nlohmann::ordered_json(*row.observed) : nullptr;
    r["verdict"] = row.verdict;
    r["certificate"] = row.certificate.empty() ? nlohmann::ordered_json(nullptr)
                                               : nlohmann::ordered_json(row.certificate);
    r["note"] = row.note;
    j["rows"].push_back(r);
  }
  return j;
}

std::string table_to_csv(const std::string& which, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  const auto& cols = table_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    const auto cells = row_cells(which, row);
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  }
  return out.str();
}

std::string table_to_pretty(const std::string& which, const std::vector<TableRow>& rows) {
  const auto& cols = table_columns();
  std::vector<std::vector<std::string>> grid{cols};
  for (const auto& row : rows) grid.push_back(row_cells(which, row));
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::string cell = line[i];
      if (i + 1 < line.size()) cell.resize(width[i] + 2, ' ');
      text += cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return out.str();
}

}  // namespace oscusec::cli
