#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace soplab::cli {

enum class Format { JsonLines, SummaryText };

std::string_view to_string(Format f);
/// Throws Error(Usage).
Format format_from_string(std::string_view text);

/// Every knob a suite reads. Defaults are the documented desk-scale values.
struct SuiteConfig {
  std::string suite;  // "verify banach", "groups enumerate", ...

  // banach
  std::uint32_t n = 7;
  std::uint32_t range = 11;
  std::uint32_t chain = 16;
  std::uint32_t type_n = 5;  // N of the type p
  std::uint32_t n_max = 20;  // term-shift bound
  std::uint64_t trials = 1000;
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;

  // amalgam
  std::string provider = "canonical";
  std::uint32_t j = 3;
  std::uint32_t j_max = 4;
  std::uint32_t window = 3;

  // groups
  std::size_t max_cosets = 1'000'000;
  std::string preset = "triangle";
  std::string presentation;  // file; overrides preset when set
  std::string word = "c-1 a c";
  std::string adjacency = "sq-pair";
  bool relabel = true;
  std::uint32_t k = 2;  // longest chain probed

  // output
  std::string out;  // empty: stdout
  Format format = Format::JsonLines;
  bool timing = false;

  /// Throws Error(Usage) when a parameter is outside its documented range.
  void validate() const;
};

std::vector<std::string> const& suite_names();
bool is_suite(std::string_view name);

/// Flat key=value lines; '#' comments; keys use the long option names
/// ("max-cosets", "jmax", ...). Unknown keys and bad values throw Error(Usage).
void apply_config_text(SuiteConfig& cfg, std::string_view text);
/// Reads a config file; Error(Io) when unreadable.
void apply_config_file(SuiteConfig& cfg, std::string const& path);
std::string to_config_text(SuiteConfig const& cfg);

}  // namespace soplab::cli
