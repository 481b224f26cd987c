#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "onemedian/harness.hpp"

namespace onemedian {

// One row per (family, n, m, algorithm).
struct SummaryRow {
  std::string family;
  NodeId n = 0;
  NodeId m = 0;
  std::string algorithm;
  std::size_t trials = 0;
  std::size_t suboptimal = 0;
  double max_ratio = 1.0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

// Maximum ratio as a function of m for one (family, n, algorithm).
struct RatioSeries {
  std::string family;
  NodeId n = 0;
  std::string algorithm;
  std::vector<NodeId> m;
  std::vector<double> max_ratio;
  friend bool operator==(const RatioSeries&, const RatioSeries&) = default;
};

// Frequencies of suboptimal ratios (> 1 + tolerance) in fixed-width bins
// starting at 1.0, per (family, algorithm).
struct RatioHistogram {
  std::string family;
  std::string algorithm;
  double bin_width = 0.01;
  std::vector<std::size_t> counts;
  friend bool operator==(const RatioHistogram&, const RatioHistogram&) = default;
};

struct Summary {
  std::vector<SummaryRow> rows;
  std::vector<RatioSeries> series;
  std::vector<RatioHistogram> histograms;
  friend bool operator==(const Summary&, const Summary&) = default;
};

inline constexpr double kHistogramBinWidth = 0.01;

// Throws EmptyInput on an empty record list.
Summary summarize(const std::vector<ExperimentRecord>& records);

enum class ReportFormat { Csv, Json };

std::string to_csv(const Summary& summary);
nlohmann::json to_json(const Summary& summary);
Summary summary_from_json(const nlohmann::json& doc);

// Throws IoError.
void export_report(const Summary& summary, ReportFormat format, const std::filesystem::path& path);

}  // namespace onemedian
