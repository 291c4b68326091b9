#include "oscusec/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "oscusec/error.hpp"

namespace oscusec::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "pretty") return OutputFormat::Pretty;
  throw InputError("unknown output format \"" + name + "\" (json, csv, pretty)");
}

ComputeContext RunConfig::context() const {
  if (trials < 1) throw InputError("--trials must be >= 1");
  return ComputeContext{PrimeField(prime), Seed{seed}, trials};
}

unsigned RunConfig::worker_count() const {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    first += 2;
    base = 16;
  }
  auto [ptr, ec] = std::from_chars(first, last, v, base);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError(std::string(what) + ": \"" + text + "\" is not an unsigned integer");
  }
  return v;
}

int parse_int(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("\"" + text + "\" is not an integer");
  }
  return v;
}

}  // namespace

RunConfig config_from_environment() {
  RunConfig cfg;
  if (const char* p = std::getenv("OSCUSEC_PRIME"); p != nullptr && *p != '\0') {
    cfg.prime = parse_u64(p, "OSCUSEC_PRIME");
  }
  if (const char* s = std::getenv("OSCUSEC_SEED"); s != nullptr && *s != '\0') {
    cfg.seed = parse_u64(s, "OSCUSEC_SEED");
  }
  return cfg;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (lo > hi) throw InputError("empty range \"" + item + "\"");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

}  // namespace oscusec::cli
