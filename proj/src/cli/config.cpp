#include "soplab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "soplab/error.hpp"

namespace soplab::cli {

std::string_view to_string(Format f) {
  return f == Format::JsonLines ? "json-lines" : "summary-text";
}

Format format_from_string(std::string_view text) {
  if (text == "json-lines") return Format::JsonLines;
  if (text == "summary-text") return Format::SummaryText;
  fail(ErrorKind::Usage, "unknown format '" + std::string(text) + "'");
}

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = {
      "verify banach",  "verify amalgam",    "verify sop-type",   "groups enumerate",
      "groups britton", "groups amalgamate", "groups chain-check"};
  return names;
}

bool is_suite(std::string_view name) {
  auto const& s = suite_names();
  return std::find(s.begin(), s.end(), name) != s.end();
}

namespace {

void need(bool ok, std::string const& what) {
  if (!ok) fail(ErrorKind::Usage, what);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  need(ec == std::errc{} && ptr == text.data() + text.size(),
       "bad value '" + std::string(text) + "' for " + std::string(key));
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  fail(ErrorKind::Usage, "bad boolean '" + std::string(text) + "' for " + std::string(key));
}

struct Field {
  char const* key;
  std::function<void(SuiteConfig&, std::string_view)> set;
  std::function<std::string(SuiteConfig const&)> get;
};

template <typename T>
Field number(char const* key, T SuiteConfig::* member) {
  return {
      key,
      [key, member](SuiteConfig& c, std::string_view v) { c.*member = parse_number<T>(key, v); },
      [member](SuiteConfig const& c) { return std::to_string(c.*member); }};
}

Field text(char const* key, std::string SuiteConfig::* member) {
  return {key, [member](SuiteConfig& c, std::string_view v) { c.*member = std::string(v); },
          [member](SuiteConfig const& c) { return c.*member; }};
}

std::vector<Field> const& fields() {
  static std::vector<Field> const f = {
      {"suite",
       [](SuiteConfig& c, std::string_view v) {
         need(is_suite(v), "unknown suite '" + std::string(v) + "'");
         c.suite = std::string(v);
       },
       [](SuiteConfig const& c) { return c.suite; }},
      number("n", &SuiteConfig::n),
      number("range", &SuiteConfig::range),
      number("chain", &SuiteConfig::chain),
      number("type-n", &SuiteConfig::type_n),
      number("n-max", &SuiteConfig::n_max),
      number("trials", &SuiteConfig::trials),
      number("samples", &SuiteConfig::samples),
      number("seed", &SuiteConfig::seed),
      text("provider", &SuiteConfig::provider),
      number("j", &SuiteConfig::j),
      number("jmax", &SuiteConfig::j_max),
      number("window", &SuiteConfig::window),
      number("max-cosets", &SuiteConfig::max_cosets),
      text("preset", &SuiteConfig::preset),
      text("presentation", &SuiteConfig::presentation),
      text("word", &SuiteConfig::word),
      text("adjacency", &SuiteConfig::adjacency),
      {"relabel", [](SuiteConfig& c, std::string_view v) { c.relabel = parse_bool("relabel", v); },
       [](SuiteConfig const& c) { return std::string(c.relabel ? "true" : "false"); }},
      number("k", &SuiteConfig::k),
      text("out", &SuiteConfig::out),
      {"format", [](SuiteConfig& c, std::string_view v) { c.format = format_from_string(v); },
       [](SuiteConfig const& c) { return std::string(to_string(c.format)); }},
      {"timing", [](SuiteConfig& c, std::string_view v) { c.timing = parse_bool("timing", v); },
       [](SuiteConfig const& c) { return std::string(c.timing ? "true" : "false"); }},
  };
  return f;
}

std::string trim(std::string_view s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto const e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void SuiteConfig::validate() const {
  need(suite.empty() || is_suite(suite), "unknown suite '" + suite + "'");
  need(n >= 3 && n <= 64, "n must lie in [3, 64]");
  need(range >= 2 && range <= 64, "range must lie in [2, 64]");
  need(chain >= 2 && chain <= 256, "chain must lie in [2, 256]");
  need(type_n >= 1 && type_n <= 16, "type-n must lie in [1, 16]");
  need(n_max >= 3 && n_max <= 200, "n-max must lie in [3, 200]");
  need(trials >= 1 && trials <= 10'000'000, "trials must lie in [1, 10^7]");
  need(samples >= 1 && samples <= 10'000'000, "samples must lie in [1, 10^7]");
  need(j >= 2 && j <= 6, "j must lie in [2, 6]");
  need(j_max >= 2 && j_max <= 6, "jmax must lie in [2, 6]");
  need(window >= 1 && window <= 8, "window must lie in [1, 8]");
  need(max_cosets >= 1 && max_cosets <= 50'000'000, "max-cosets must lie in [1, 5*10^7]");
  need(k >= 2 && k <= 8, "k must lie in [2, 8]");
  need(!provider.empty(), "provider must be set");
}

void apply_config_text(SuiteConfig& cfg, std::string_view content) {
  std::istringstream in{std::string(content)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    auto const eq = line.find('=');
    need(eq != std::string::npos, "config line " + std::to_string(lineno) + " has no '='");
    auto const key = trim(std::string_view(line).substr(0, eq));
    auto const value = trim(std::string_view(line).substr(eq + 1));
    auto const& f = fields();
    auto it = std::find_if(f.begin(), f.end(), [&](Field const& x) { return key == x.key; });
    need(it != f.end(), "unknown config key '" + key + "'");
    it->set(cfg, value);
  }
}

void apply_config_file(SuiteConfig& cfg, std::string const& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

std::string to_config_text(SuiteConfig const& cfg) {
  std::string out;
  for (auto const& f : fields()) out += std::string(f.key) + " = " + f.get(cfg) + "\n";
  return out;
}

}  // namespace soplab::cli
