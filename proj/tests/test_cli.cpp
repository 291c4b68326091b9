#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oscusec/cli/app.hpp"
#include "oscusec/cli/config.hpp"
#include "oscusec/cli/tables.hpp"
#include "oscusec/error.hpp"

using namespace oscusec;
using namespace oscusec::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("oscusec_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Config, IntLists) {
  EXPECT_EQ(parse_int_list("4..8"), (std::vector<int>{4, 5, 6, 7, 8}));
  EXPECT_EQ(parse_int_list("5"), (std::vector<int>{5}));
  EXPECT_EQ(parse_int_list("1,2,4"), (std::vector<int>{1, 2, 4}));
  EXPECT_THROW(parse_int_list("8..4"), InputError);
  EXPECT_THROW(parse_int_list("x"), InputError);
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_THROW(parse_format("xml"), InputError);
}

TEST(Cli, DimJson) {
  const auto r = call({"--format", "json", "dim", "--pn", "3", "--d", "4", "--double", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 34);
  EXPECT_EQ(j["sections"], 35);
  EXPECT_EQ(j["verdict"], "ObservedSpecial");
  EXPECT_EQ(j["deficiency"], 1);
}

TEST(Cli, DimOsculatingFields) {
  const auto r = call({"--format", "json", "dim", "--pn", "2", "--d", "5", "--triple", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["osculating_dimension"], 11);
  EXPECT_EQ(j["predicted_osculating_dimension"], 11);
  EXPECT_EQ(j["system_dimension"], 8);
}

TEST(Cli, DimFromSchemeFile) {
  const auto path = temp_path("scheme.json");
  std::ofstream(path) << R"({"version":1,"spec":{"type":"hirzebruch","n":1,"a":2,"b":3},)"
                      << R"("points":[{"m":2,"loc":"generic","count":3}]})";
  const auto r = call({"--format", "json", "dim", "--scheme", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["rank"], 9);
  EXPECT_EQ(call({"dim", "--scheme", path, "--pn", "2"}).code, kExitInputError);
}

TEST(Cli, Terracini) {
  const auto r = call({"--format", "json", "terracini", "--pn", "2", "--d", "5", "--m", "2", "--h", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["secant_osculating_dim"], 11);
  EXPECT_EQ(j["join_osculating_dim"], 11);
  EXPECT_EQ(j["interpolation_dim"], 11);
  EXPECT_EQ(j["agree"], true);
  const auto zero = nlohmann::json::parse(
      call({"--format", "json", "terracini", "--pn", "3", "--d", "4", "--m", "0", "--h", "2"}).out);
  EXPECT_EQ(zero["join_osculating_dim"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, kExitInputError);
  EXPECT_EQ(call({"bogus"}).code, kExitInputError);
  EXPECT_EQ(call({"dim", "--pn", "3"}).code, kExitInputError);
  EXPECT_EQ(call({"--prime", "1000001", "dim", "--pn", "2", "--d", "2"}).code, kExitInputError);
  EXPECT_EQ(call({"--trials", "0", "dim", "--pn", "2", "--d", "2"}).code, kExitInputError);
  EXPECT_EQ(call({"horace", "check", "3", "0", "0"}).code, kExitInputError);
  EXPECT_EQ(call({"horace", "build", "4", "0", "9"}).code, kExitCertificateFailure);
  EXPECT_EQ(call({"horace", "verify", temp_path("missing.json")}).code, kExitInputError);
  EXPECT_EQ(call({"tables", "theorem2", "--d", "16"}).code, kExitInputError);
  EXPECT_EQ(call({"tables", "nothing"}).code, kExitInputError);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, HoraceCheck) {
  const auto j = nlohmann::json::parse(call({"--format", "json", "horace", "check", "4", "0", "9"}).out);
  EXPECT_EQ(j["A"]["verdict"], "NotCertified");
  EXPECT_EQ(j["B"]["verdict"], "NotCertified");
  EXPECT_EQ(nlohmann::json::parse(call({"--format", "json", "horace", "check", "4", "5", "0"}).out)["verdict"],
            "CertifiedByB");
}

TEST(Cli, CertificateRoundTrip) {
  const auto path = temp_path("cert.json");
  ASSERT_EQ(call({"horace", "build", "5", "2", "5", "-o", path}).code, 0);
  const auto r = call({"--format", "json", "horace", "verify", path});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);

  // Failing certificate: exit code 4.
  const auto bad = temp_path("cert_bad.json");
  ASSERT_EQ(call({"horace", "build", "4", "2", "0", "-o", bad}).code, 0);
  EXPECT_EQ(call({"horace", "verify", bad}).code, kExitCertificateFailure);

  // Tampered trace: exit code 4 and the step is named.
  auto j = nlohmann::json::parse(slurp(path));
  j["steps"][0]["trace"]["simples"] = 100;
  std::ofstream(bad) << j.dump();
  const auto t = call({"--format", "json", "horace", "verify", bad});
  EXPECT_EQ(t.code, kExitCertificateFailure);
  EXPECT_EQ(nlohmann::json::parse(t.out)["failed_check"], "trace");

  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(call({"horace", "verify", bad}).code, kExitInputError);
}

TEST(Cli, ByteIdenticalOutputAcrossThreadCounts) {
  const std::vector<std::string> base{"--format", "json", "tables", "theorem2", "--d", "4..5"};
  auto with_threads = [&](const char* n) {
    std::vector<std::string> args{"--threads", n};
    args.insert(args.end(), base.begin(), base.end());
    return call(args);
  };
  const auto one = with_threads("1");
  const auto four = with_threads("4");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, with_threads("1").out);
}

TEST(Cli, TablesTheorem2MarksGaps) {
  const auto r = call({"--format", "json", "tables", "theorem2", "--d", "4"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["version"], kTableFormatVersion);
  EXPECT_EQ(j["columns"].get<std::vector<std::string>>(), table_columns());
  bool saw_gap = false;
  for (const auto& row : j["rows"]) {
    if (row["parameters"]["h"] == 2) {
      saw_gap = true;
      EXPECT_EQ(row["condition"], "NotCertified");
      EXPECT_EQ(row["observed"], 26);
    }
  }
  EXPECT_TRUE(saw_gap);
}

TEST(Cli, TablesCsvHeaderAndUnsupportedH) {
  const auto r = call({"--format", "csv", "tables", "corollary1", "--h", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "table,parameters,condition,predicted,observed,verdict,certificate,note");
  EXPECT_NE(r.out.find("Unsupported"), std::string::npos);
}

TEST(Cli, TablesLaplace) {
  const auto j = nlohmann::json::parse(
      call({"--format", "json", "tables", "laplace", "--n", "1..4", "--h", "1..4"}).out);
  ASSERT_EQ(j["rows"].size(), 16u);
  EXPECT_EQ(j["rows"][0]["observed"], 4);
  EXPECT_EQ(j["rows"][0]["note"], "T >= C(K,2)+h");
}

TEST(Cli, Special) {
  const auto p2 = nlohmann::json::parse(call({"--format", "json", "special", "p2", "4", "0", "5"}).out);
  EXPECT_EQ(p2["listed"], true);
  EXPECT_EQ(p2["verdict"], "ObservedSpecial");
  EXPECT_EQ(p2["consistent"], true);
  const auto hz = nlohmann::json::parse(
      call({"--format", "json", "special", "hirzebruch", "1", "4", "0", "2", "5"}).out);
  EXPECT_EQ(hz["listed"], true);
  EXPECT_EQ(hz["verdict"], "ObservedSpecial");
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = temp_path("dim.json");
  const std::vector<std::string> args{"--format", "json", "dim", "--pn", "2", "--d", "4", "--double", "5"};
  const auto direct = call(args);
  auto with_out = args;
  with_out.insert(with_out.begin(), {"-o", path});
  ASSERT_EQ(call(with_out).code, 0);
  EXPECT_EQ(slurp(path), direct.out);
}

TEST(Schemas, MatchEmittedDocuments) {
  const std::string dir = OSCUSEC_SCHEMA_DIR;
  const auto table = nlohmann::json::parse(slurp(dir + "/table.schema.json"));
  EXPECT_EQ(table["properties"]["columns"]["const"].get<std::vector<std::string>>(), table_columns());

  const auto cert_schema = nlohmann::json::parse(slurp(dir + "/certificate.schema.json"));
  const auto cert = nlohmann::json::parse(call({"horace", "build", "6", "3", "4"}).out);
  for (const auto& key : cert_schema["required"]) EXPECT_TRUE(cert.contains(key.get<std::string>()));
  for (const auto& key : cert_schema["$defs"]["step"]["required"])
    EXPECT_TRUE(cert["steps"][0].contains(key.get<std::string>()));

  const auto scheme_schema = nlohmann::json::parse(slurp(dir + "/scheme.schema.json"));
  EXPECT_EQ(scheme_schema["properties"]["version"]["const"], 1);
}
