#pragma once

#include <string>
#include <vector>

#include "zhent/spectrum.hpp"

namespace zhent {

struct TextStatsRecord {
    std::string text_id;
    SpectrumStats stats;
};

struct MetricSummary {
    double min = 0.0;
    double mean = 0.0;
    double sd = 0.0;  // sample sd (n-1); defined as 0 for n = 1
    double max = 0.0;
};

/// Corpus-level summary of T, W/V and f_max/V across texts.
struct SummaryTable {
    MetricSummary tokens;
    MetricSummary w_over_v;
    MetricSummary fmax_over_v;
    std::size_t n_texts = 0;
};

SummaryTable summarize(const std::vector<TextStatsRecord>& records);

/// Selectable per-text metric for scatter/trend reports.
enum class Metric { t, v, w, f_max, w_over_v, fmax_over_v, fmax_over_t };

/// Parses CLI metric names ("t", "v", "w", "fmax", "w_over_v",
/// "fmax_over_v", "fmax_over_t"); throws InvalidMetric otherwise.
Metric parse_metric(const std::string& name);
const char* to_string(Metric metric);
double metric_value(const SpectrumStats& stats, Metric metric);

struct KendallResult {
    double tau = 0.0;
    double p_value = 1.0;
};

/// Tie-corrected tau-b with a normal-approximation two-sided p-value.
/// Throws InsufficientData for fewer than two pairs and UndefinedTau when
/// all x or all y are identical.
KendallResult kendall_tau(const std::vector<std::pair<double, double>>& pairs);

struct TrendReport {
    Metric x_metric = Metric::v;
    Metric y_metric = Metric::w;
    KendallResult kendall;
    /// One (text_id, x, y) row per record, in record order.
    std::vector<std::tuple<std::string, double, double>> scatter;
};

TrendReport trend_report(const std::vector<TextStatsRecord>& records,
                         Metric x_metric, Metric y_metric);

/// TSV renderings used by the CLI: scatter has a text_id/x/y header; the
/// summary mirrors the metric/min/mean/sd/max layout with display rounding
/// (one decimal for T, two significant digits for the ratios).
std::string scatter_tsv(const TrendReport& report);
std::string summary_tsv(const SummaryTable& summary);

}  // namespace zhent
