#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tcgabor/estimation.hpp"
#include "tcgabor/transform.hpp"

namespace tcgabor {

/// Named numeric table with optional row labels; metadata echoes the
/// effective configuration (plus seed and version where applicable).
/// Emitters use '.' as the decimal separator regardless of locale.
struct AnalysisReport {
  std::string name;
  std::vector<std::string> row_labels;  // may be empty
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  nlohmann::json metadata;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double v);

/// Long-format rows (time_s, freq_hz, magnitude_db), dB relative to the peak.
void write_spectrogram_csv(std::ostream& os, const Spectrogram& spec, double db_clip);

/// Binary 8-bit PGM: dB mapped linearly [db_clip, 0] -> [0, 255], time on x,
/// log-frequency on y with the lowest frequency at the bottom.
void write_spectrogram_pgm(std::ostream& os, const Spectrogram& spec, double db_clip);

/// Full-fidelity JSON: grid + config metadata + quadrature channels, numbers
/// serialized so they round-trip bitwise.
nlohmann::json spectrogram_to_json(const Spectrogram& spec);
Spectrogram spectrogram_from_json(const nlohmann::json& j);

nlohmann::json bench_report_to_json(const BenchReport& report);

}  // namespace tcgabor
