#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "parker/spectrum.hpp"

namespace parker {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInput = 2;
inline constexpr int kSize = 3;
inline constexpr int kInternal = 4;  // internal error or a failing check
inline constexpr int kEigenvalueField = 5;
}  // namespace exit_code

enum class OutputFormat { Text, Machine };

struct Config {
  AnalysisConfig analysis;
  OutputFormat format = OutputFormat::Text;
};

/// Where the dessin comes from: a file path ("-" for standard input) or inline text.
struct DessinSource {
  std::optional<std::string> path;
  std::optional<std::string> text;
};

/// Machine form of a report. Keys are emitted in a fixed order with
/// "timings_ms" last; polynomial coefficients are ascending "p/q" strings.
nlohmann::ordered_json report_to_json(const SpectrumReport& r);

std::string render_text(const SpectrumReport& r);
std::string render(const SpectrumReport& r, OutputFormat format);

/// 0 when every check passes, 5 when the eigenvalue-field check fails, 4 for
/// any other failing check.
int exit_code_for(const SpectrumReport& r);

/// Reads, analyzes and prints one dessin. Diagnostics go to `err` as one line.
int cmd_analyze(const DessinSource& source, const Config& config, std::ostream& out, std::ostream& err);

/// Runs the reference corpus (entries matching `filter` by name or tag), one
/// row per dessin, also comparing against the recorded expectations. Exit 0
/// iff every check passes and every expectation matches, 4 otherwise (failing
/// dessins named on `err`), 2 when nothing matches the filter.
int cmd_selftest(const Config& config, const std::string& filter, std::ostream& out, std::ostream& err);

}  // namespace parker
