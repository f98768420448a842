#include "tcgabor/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "tcgabor/version.hpp"

namespace tcgabor {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string AnalysisReport::to_csv() const {
  std::string out;
  const bool labeled = !row_labels.empty();
  if (labeled) out += "label,";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out += columns[c].first;
    out += (c + 1 < columns.size()) ? "," : "\n";
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().second.size();
  for (const auto& col : columns) {
    if (col.second.size() != rows) throw std::invalid_argument("AnalysisReport: ragged columns");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (labeled) {
      out += row_labels.at(r);
      out += ",";
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += format_double(columns[c].second[r]);
      out += (c + 1 < columns.size()) ? "," : "\n";
    }
  }
  return out;
}

nlohmann::json AnalysisReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["metadata"] = metadata;
  if (!row_labels.empty()) j["labels"] = row_labels;
  for (const auto& col : columns) j["columns"][col.first] = col.second;
  return j;
}

void write_spectrogram_csv(std::ostream& os, const Spectrogram& spec, double db_clip) {
  const std::vector<double> db = to_db(spec, db_clip);
  os << "time_s,freq_hz,magnitude_db\n";
  const std::size_t bins = spec.n_freqs();
  for (std::size_t t = 0; t < spec.n_times(); ++t) {
    const double time_s = double(spec.times[t]) / spec.sample_rate;
    for (std::size_t j = 0; j < bins; ++j) {
      os << format_double(time_s) << ',' << format_double(spec.freqs_hz[j]) << ','
         << format_double(db[t * bins + j]) << '\n';
    }
  }
}

void write_spectrogram_pgm(std::ostream& os, const Spectrogram& spec, double db_clip) {
  const std::vector<double> db = to_db(spec, db_clip);
  const std::size_t width = spec.n_times();
  const std::size_t height = spec.n_freqs();
  os << "P5\n" << width << " " << height << "\n255\n";
  std::vector<unsigned char> row(width);
  for (std::size_t y = 0; y < height; ++y) {
    const std::size_t j = height - 1 - y;  // low frequency at the bottom
    for (std::size_t x = 0; x < width; ++x) {
      const double v = (db[x * height + j] - db_clip) / (0.0 - db_clip);
      row[x] = static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    }
    os.write(reinterpret_cast<const char*>(row.data()), std::streamsize(width));
  }
}

namespace {

nlohmann::json grid_to_json(const FrequencyGrid& g) {
  return {{"per_octave", g.per_octave},
          {"f_min", g.f_min},
          {"f_max", g.f_max},
          {"wavelength_factor", g.wavelength_factor},
          {"threshold", g.threshold_mode == ThresholdMode::hard ? "hard" : "soft"},
          {"sigma_min_s", g.sigma_min_s},
          {"sigma_max_s", g.sigma_max_s},
          {"sigma0_s", g.sigma0_s},
          {"sigma_inf_s", g.sigma_inf_s},
          {"soft_p", g.soft_p},
          {"freqs_hz", g.freqs_hz}};
}

FrequencyGrid grid_from_json(const nlohmann::json& j) {
  FrequencyGrid g;
  g.per_octave = j.at("per_octave").get<int>();
  g.f_min = j.at("f_min").get<double>();
  g.f_max = j.at("f_max").get<double>();
  g.wavelength_factor = j.at("wavelength_factor").get<double>();
  g.threshold_mode =
      j.at("threshold").get<std::string>() == "hard" ? ThresholdMode::hard : ThresholdMode::soft;
  g.sigma_min_s = j.at("sigma_min_s").get<double>();
  g.sigma_max_s = j.at("sigma_max_s").get<double>();
  g.sigma0_s = j.at("sigma0_s").get<double>();
  g.sigma_inf_s = j.at("sigma_inf_s").get<double>();
  g.soft_p = j.at("soft_p").get<double>();
  g.freqs_hz = j.at("freqs_hz").get<std::vector<double>>();
  return g;
}

const char* window_kind_name(WindowKind k) {
  switch (k) {
    case WindowKind::time_causal_limit: return "causal";
    case WindowKind::gabor_sampled: return "gabor";
    case WindowKind::gabor_discrete: return "gabor-discrete";
    case WindowKind::gabor_truncated_shifted: return "gabor-trunc";
  }
  return "causal";
}

WindowKind window_kind_from_name(const std::string& s) {
  if (s == "causal") return WindowKind::time_causal_limit;
  if (s == "gabor") return WindowKind::gabor_sampled;
  if (s == "gabor-discrete") return WindowKind::gabor_discrete;
  if (s == "gabor-trunc") return WindowKind::gabor_truncated_shifted;
  throw std::runtime_error("unknown window kind: " + s);
}

}  // namespace

nlohmann::json spectrogram_to_json(const Spectrogram& spec) {
  nlohmann::json j;
  j["type"] = "spectrogram";
  j["version"] = kVersion;
  j["sample_rate"] = spec.sample_rate;
  j["window"] = window_kind_name(spec.config.window_kind);
  j["c"] = spec.config.c;
  j["layers"] = spec.config.layers;
  j["column_stride"] = spec.config.column_stride;
  j["grid"] = grid_to_json(spec.config.grid);
  j["times"] = spec.times;
  j["freqs_hz"] = spec.freqs_hz;
  j["magnitude"] = spec.magnitude;
  if (!spec.cos_part.empty()) {
    j["cos"] = spec.cos_part;
    j["sin"] = spec.sin_part;
  }
  return j;
}

Spectrogram spectrogram_from_json(const nlohmann::json& j) {
  if (j.value("type", "") != "spectrogram") {
    throw std::runtime_error("spectrogram_from_json: not a spectrogram document");
  }
  Spectrogram s;
  s.sample_rate = j.at("sample_rate").get<double>();
  s.config.window_kind = window_kind_from_name(j.at("window").get<std::string>());
  s.config.c = j.at("c").get<double>();
  s.config.layers = j.at("layers").get<int>();
  s.config.column_stride = j.at("column_stride").get<int>();
  s.config.grid = grid_from_json(j.at("grid"));
  s.config.sample_rate = s.sample_rate;
  s.times = j.at("times").get<std::vector<std::int64_t>>();
  s.freqs_hz = j.at("freqs_hz").get<std::vector<double>>();
  s.magnitude = j.at("magnitude").get<std::vector<double>>();
  if (j.contains("cos")) {
    s.cos_part = j.at("cos").get<std::vector<double>>();
    s.sin_part = j.at("sin").get<std::vector<double>>();
    s.config.store_channels = true;
  } else {
    s.config.store_channels = false;
  }
  return s;
}

nlohmann::json bench_report_to_json(const BenchReport& report) {
  nlohmann::json j;
  j["name"] = "noise-benchmark";
  j["metadata"] = {{"version", kVersion},
                   {"seed", report.config.seed},
                   {"sample_rate", report.config.sample_rate},
                   {"duration_s", report.config.duration_s},
                   {"freqs_per_interval", report.config.freqs_per_interval},
                   {"per_octave", report.config.per_octave},
                   {"f_min", report.config.f_min},
                   {"f_max", report.config.f_max},
                   {"causal_stride", report.config.causal_stride},
                   {"gabor_stride", report.config.gabor_stride},
                   {"edge_discard", report.config.edge_discard}};
  j["metadata"]["intervals_hz"] = nlohmann::json::array();
  for (const auto& [lo, hi] : report.config.intervals_hz) {
    j["metadata"]["intervals_hz"].push_back({lo, hi});
  }
  j["noise_levels"] = report.config.noise_levels;
  j["rows"] = nlohmann::json::array();
  for (std::size_t ti = 0; ti < report.config.variants.size(); ++ti) {
    nlohmann::json row;
    row["variant"] = report.config.variants[ti].label();
    row["b"] = nlohmann::json::array();
    row["s"] = nlohmann::json::array();
    row["count"] = nlohmann::json::array();
    for (const BenchCell& cell : report.cells[ti]) {
      row["b"].push_back(cell.b);
      row["s"].push_back(cell.s);
      row["count"].push_back(cell.count);
    }
    j["rows"].push_back(row);
  }
  return j;
}

}  // namespace tcgabor
