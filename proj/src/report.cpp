#include "onemedian/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "onemedian/error.hpp"
#include "onemedian/text_format.hpp"

namespace onemedian {

namespace {

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

struct Accumulator {
  std::size_t trials = 0;
  std::size_t suboptimal = 0;
  double max_ratio = 0.0;
  std::vector<double> ms;
};

}  // namespace

Summary summarize(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw Error(Errc::EmptyInput, "no experiment records to summarize");

  // Algorithms keep their enum order inside a (family, n, m) group.
  using Key = std::tuple<std::string, NodeId, NodeId, int>;
  std::map<Key, Accumulator> groups;
  std::map<std::pair<std::string, int>, std::vector<std::size_t>> hist;
  for (const auto& rec : records) {
    for (const auto& out : rec.outcomes) {
      const int algo = static_cast<int>(out.algorithm);
      auto& acc = groups[{rec.family, rec.n, rec.m, algo}];
      ++acc.trials;
      acc.max_ratio = std::max(acc.max_ratio, out.ratio);
      acc.ms.push_back(out.result.wall_ms());
      auto& counts = hist[{rec.family, algo}];
      if (out.suboptimal) {
        ++acc.suboptimal;
        const auto bin = static_cast<std::size_t>(std::floor((out.ratio - 1.0) / kHistogramBinWidth));
        if (counts.size() <= bin) counts.resize(bin + 1, 0);
        ++counts[bin];
      }
    }
  }

  Summary s;
  std::map<std::tuple<std::string, NodeId, int>, RatioSeries> series;
  for (auto& [key, acc] : groups) {
    const auto& [family, n, m, algo] = key;
    const std::string algo_name(to_string(static_cast<Algorithm>(algo)));
    double mean = 0.0;
    for (double x : acc.ms) mean += x;
    mean /= static_cast<double>(acc.ms.size());
    s.rows.push_back({family, n, m, algo_name, acc.trials, acc.suboptimal, acc.max_ratio, mean, median(acc.ms)});

    auto& ser = series[{family, n, algo}];
    ser.family = family;
    ser.n = n;
    ser.algorithm = algo_name;
    ser.m.push_back(m);
    ser.max_ratio.push_back(acc.max_ratio);
  }
  for (auto& [_, ser] : series) s.series.push_back(std::move(ser));
  for (auto& [key, counts] : hist) {
    s.histograms.push_back({key.first, std::string(to_string(static_cast<Algorithm>(key.second))),
                            kHistogramBinWidth, std::move(counts)});
  }
  return s;
}

std::string to_csv(const Summary& summary) {
  std::ostringstream out;
  out << "family,n,m,algorithm,trials,suboptimal,max_ratio,mean_ms,median_ms\n";
  for (const auto& r : summary.rows) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.trials << ','
        << r.suboptimal << ',' << format_real(r.max_ratio) << ',' << format_real(r.mean_ms) << ','
        << format_real(r.median_ms) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Summary& summary) {
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : summary.rows) {
    doc["rows"].push_back({{"family", r.family},
                           {"n", r.n},
                           {"m", r.m},
                           {"algorithm", r.algorithm},
                           {"trials", r.trials},
                           {"suboptimal", r.suboptimal},
                           {"max_ratio", r.max_ratio},
                           {"mean_ms", r.mean_ms},
                           {"median_ms", r.median_ms}});
  }
  doc["max_ratio_by_m"] = nlohmann::json::array();
  for (const auto& s : summary.series) {
    doc["max_ratio_by_m"].push_back(
        {{"family", s.family}, {"n", s.n}, {"algorithm", s.algorithm}, {"m", s.m}, {"max_ratio", s.max_ratio}});
  }
  doc["suboptimal_ratio_histogram"] = nlohmann::json::array();
  for (const auto& h : summary.histograms) {
    doc["suboptimal_ratio_histogram"].push_back(
        {{"family", h.family}, {"algorithm", h.algorithm}, {"bin_width", h.bin_width}, {"counts", h.counts}});
  }
  return doc;
}

Summary summary_from_json(const nlohmann::json& doc) {
  Summary s;
  try {
    for (const auto& r : doc.at("rows")) {
      s.rows.push_back({r.at("family").get<std::string>(), r.at("n").get<NodeId>(), r.at("m").get<NodeId>(),
                        r.at("algorithm").get<std::string>(), r.at("trials").get<std::size_t>(),
                        r.at("suboptimal").get<std::size_t>(), r.at("max_ratio").get<double>(),
                        r.at("mean_ms").get<double>(), r.at("median_ms").get<double>()});
    }
    for (const auto& x : doc.at("max_ratio_by_m")) {
      s.series.push_back({x.at("family").get<std::string>(), x.at("n").get<NodeId>(),
                          x.at("algorithm").get<std::string>(), x.at("m").get<std::vector<NodeId>>(),
                          x.at("max_ratio").get<std::vector<double>>()});
    }
    for (const auto& h : doc.at("suboptimal_ratio_histogram")) {
      s.histograms.push_back({h.at("family").get<std::string>(), h.at("algorithm").get<std::string>(),
                              h.at("bin_width").get<double>(), h.at("counts").get<std::vector<std::size_t>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("summary JSON: ") + e.what());
  }
  return s;
}

void export_report(const Summary& summary, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
  if (format == ReportFormat::Csv) {
    out << to_csv(summary);
  } else {
    out << to_json(summary).dump(2) << '\n';
  }
  if (!out) throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

}  // namespace onemedian
