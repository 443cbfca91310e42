#include "zhent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace zhent {
namespace {

MetricSummary summarize_values(const std::vector<double>& values) {
    MetricSummary m;
    const std::size_t n = values.size();
    m.min = *std::min_element(values.begin(), values.end());
    m.max = *std::max_element(values.begin(), values.end());
    m.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - m.mean) * (v - m.mean);
        }
        m.sd = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return m;
}

// Counts strictly-decreasing y pairs by merge sort. `ys` is pre-sorted by
// (x, y); equal-y pairs are not inversions.
std::uint64_t count_inversions(std::vector<double>& ys, std::vector<double>& tmp,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = count_inversions(ys, tmp, lo, mid) +
                        count_inversions(ys, tmp, mid, hi);
    std::size_t a = lo;
    std::size_t b = mid;
    for (std::size_t k = lo; k < hi; ++k) {
        if (a < mid && (b >= hi || ys[a] <= ys[b])) {
            tmp[k] = ys[a++];
        } else {
            // ys[b] < everything left in [a, mid)
            inv += mid - a;
            tmp[k] = ys[b++];
        }
    }
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
              tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              ys.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

std::uint64_t tie_pairs(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        const std::uint64_t run = j - i;
        total += run * (run - 1) / 2;
        i = j;
    }
    return total;
}

// Sum of g(run) over tied groups, for the p-value's tie terms.
double tie_sum(std::vector<double> values, double (*g)(double)) {
    std::sort(values.begin(), values.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        total += g(static_cast<double>(j - i));
        i = j;
    }
    return total;
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

SummaryTable summarize(const std::vector<TextStatsRecord>& records) {
    if (records.empty()) {
        throw empty_input("summarize needs at least one record");
    }
    std::vector<double> t, wv, fv;
    t.reserve(records.size());
    wv.reserve(records.size());
    fv.reserve(records.size());
    for (const auto& r : records) {
        t.push_back(static_cast<double>(r.stats.t_tokens));
        wv.push_back(r.stats.w_over_v);
        fv.push_back(r.stats.fmax_over_v);
    }
    SummaryTable table;
    table.tokens = summarize_values(t);
    table.w_over_v = summarize_values(wv);
    table.fmax_over_v = summarize_values(fv);
    table.n_texts = records.size();
    return table;
}

Metric parse_metric(const std::string& name) {
    if (name == "t") return Metric::t;
    if (name == "v") return Metric::v;
    if (name == "w") return Metric::w;
    if (name == "fmax") return Metric::f_max;
    if (name == "w_over_v") return Metric::w_over_v;
    if (name == "fmax_over_v") return Metric::fmax_over_v;
    if (name == "fmax_over_t") return Metric::fmax_over_t;
    throw Error(ErrorCode::invalid_metric, "unknown metric: " + name);
}

const char* to_string(Metric metric) {
    switch (metric) {
        case Metric::t: return "t";
        case Metric::v: return "v";
        case Metric::w: return "w";
        case Metric::f_max: return "fmax";
        case Metric::w_over_v: return "w_over_v";
        case Metric::fmax_over_v: return "fmax_over_v";
        case Metric::fmax_over_t: return "fmax_over_t";
    }
    return "?";
}

double metric_value(const SpectrumStats& stats, Metric metric) {
    switch (metric) {
        case Metric::t: return static_cast<double>(stats.t_tokens);
        case Metric::v: return static_cast<double>(stats.v_types);
        case Metric::w: return static_cast<double>(stats.w_distinct);
        case Metric::f_max: return static_cast<double>(stats.f_max);
        case Metric::w_over_v: return stats.w_over_v;
        case Metric::fmax_over_v: return stats.fmax_over_v;
        case Metric::fmax_over_t: return stats.fmax_over_t;
    }
    return 0.0;
}

KendallResult kendall_tau(const std::vector<std::pair<double, double>>& pairs) {
    const std::size_t n = pairs.size();
    if (n < 2) {
        throw Error(ErrorCode::insufficient_data,
                    "kendall_tau needs at least two pairs");
    }
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = pairs[i].first;
        ys[i] = pairs[i].second;
    }
    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t n1 = tie_pairs(xs);
    const std::uint64_t n2 = tie_pairs(ys);
    if (n1 == n0 || n2 == n0) {
        throw Error(ErrorCode::undefined_tau,
                    "tau is undefined when all x or all y are tied");
    }

    // Knight's construction: sort by (x, y); discordant pairs are exactly
    // the strict y-inversions, and pairs tied in x contribute neither.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (xs[a] != xs[b]) return xs[a] < xs[b];
        return ys[a] < ys[b];
    });
    std::vector<double> sorted_y(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted_y[i] = ys[order[i]];
    }
    // Pairs tied in x cannot invert (y ascending within a tie group), but
    // pairs tied in y across x groups are counted by neither C nor D, so:
    // C + D = n0 - n1 - n2 + n3, D = inversions.
    std::uint64_t n3 = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && xs[order[j]] == xs[order[i]] &&
                   ys[order[j]] == ys[order[i]]) {
                ++j;
            }
            const std::uint64_t run = j - i;
            n3 += run * (run - 1) / 2;
            i = j;
        }
    }
    std::vector<double> tmp(n);
    const std::uint64_t discordant = count_inversions(sorted_y, tmp, 0, n);
    // n0 + n3 >= n1 + n2 by inclusion-exclusion over tied pairs.
    const auto s_stat = static_cast<std::int64_t>(n0 + n3 - n1 - n2) -
                        2 * static_cast<std::int64_t>(discordant);

    KendallResult result;
    result.tau = static_cast<double>(s_stat) /
                 std::sqrt(static_cast<double>(n0 - n1) *
                           static_cast<double>(n0 - n2));

    // Normal approximation with tie correction (two-sided).
    const double dn = static_cast<double>(n);
    const double v0 = dn * (dn - 1.0) * (2.0 * dn + 5.0);
    const double vt = tie_sum(xs, [](double t) { return t * (t - 1.0) * (2.0 * t + 5.0); });
    const double vu = tie_sum(ys, [](double t) { return t * (t - 1.0) * (2.0 * t + 5.0); });
    const double t1 = tie_sum(xs, [](double t) { return t * (t - 1.0); });
    const double u1 = tie_sum(ys, [](double t) { return t * (t - 1.0); });
    double var_s = (v0 - vt - vu) / 18.0 + t1 * u1 / (2.0 * dn * (dn - 1.0));
    if (n > 2) {
        const double t2 = tie_sum(xs, [](double t) { return t * (t - 1.0) * (t - 2.0); });
        const double u2 = tie_sum(ys, [](double t) { return t * (t - 1.0) * (t - 2.0); });
        var_s += t2 * u2 / (9.0 * dn * (dn - 1.0) * (dn - 2.0));
    }
    if (var_s > 0.0 && s_stat != 0) {
        const double z = static_cast<double>(s_stat) / std::sqrt(var_s);
        result.p_value = std::erfc(std::abs(z) / std::sqrt(2.0));
    } else {
        result.p_value = 1.0;
    }
    return result;
}

TrendReport trend_report(const std::vector<TextStatsRecord>& records,
                         Metric x_metric, Metric y_metric) {
    if (records.size() < 2) {
        throw Error(ErrorCode::insufficient_data,
                    "trend_report needs at least two records");
    }
    TrendReport report;
    report.x_metric = x_metric;
    report.y_metric = y_metric;
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(records.size());
    for (const auto& r : records) {
        const double x = metric_value(r.stats, x_metric);
        const double y = metric_value(r.stats, y_metric);
        pairs.emplace_back(x, y);
        report.scatter.emplace_back(r.text_id, x, y);
    }
    report.kendall = kendall_tau(pairs);
    return report;
}

std::string scatter_tsv(const TrendReport& report) {
    std::string out = "text_id\tx\ty\n";
    for (const auto& [id, x, y] : report.scatter) {
        out += id;
        out += '\t';
        out += format_double("%.10g", x);
        out += '\t';
        out += format_double("%.10g", y);
        out += '\n';
    }
    return out;
}

std::string summary_tsv(const SummaryTable& summary) {
    // Display rounding: token stats to one decimal, ratios to two
    // significant digits.
    std::string out = "metric\tmin\tmean\tsd\tmax\n";
    const auto row = [&out](const char* name, const MetricSummary& m,
                            const char* fmt) {
        out += name;
        for (double v : {m.min, m.mean, m.sd, m.max}) {
            out += '\t';
            out += format_double(fmt, v);
        }
        out += '\n';
    };
    row("t", summary.tokens, "%.1f");
    row("w_over_v", summary.w_over_v, "%.2g");
    row("fmax_over_v", summary.fmax_over_v, "%.2g");
    return out;
}

}  // namespace zhent
