#include "zhent/estimators.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

namespace zhent {
namespace {

struct QResult {
    double q = 0.0;
    std::uint64_t body_iterations = 0;
};

// Algorithm-B loop. Ascending v, one multiply of R and one add to Q per
// body execution. R stays in [0, 1] for f >= 1 and is non-increasing; once
// it underflows to exactly 0.0 every remaining term is exactly 0, so the
// loop may stop without changing the result.
QResult q_linear_counted(Count f, Count t) {
    if (f == 0 || f > t) {
        throw Error(ErrorCode::invalid_frequency,
                    "Q(f) requires 1 <= f <= T");
    }
    const double shift = 1.0 - static_cast<double>(f);
    double r = 1.0;
    double q = 0.0;
    QResult result;
    for (Count v = 1; v <= t - f; ++v) {
        r *= 1.0 + shift / static_cast<double>(t - v);
        q += r / static_cast<double>(v);
        ++result.body_iterations;
        if (r == 0.0) {
            break;
        }
    }
    result.q = q;
    return result;
}

double checked_nonempty(const TypeFrequencyTable& table, const char* op) {
    if (table.empty()) {
        throw empty_input(std::string(op) + " on an empty table");
    }
    return static_cast<double>(table.tokens());
}

// Splits [0, n) into at most `jobs` contiguous chunks, runs `work` on each
// (in parallel when jobs > 1) and returns per-chunk boundaries for ordered
// reduction.
template <typename Work>
std::vector<std::pair<std::size_t, std::size_t>> run_chunked(std::size_t n,
                                                             unsigned jobs,
                                                             Work&& work) {
    if (jobs == 0) {
        jobs = 1;
    }
    const std::size_t n_chunks = std::min<std::size_t>(jobs, n);
    std::vector<std::pair<std::size_t, std::size_t>> bounds;
    bounds.reserve(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        const std::size_t lo = n * c / n_chunks;
        const std::size_t hi = n * (c + 1) / n_chunks;
        bounds.emplace_back(lo, hi);
    }
    if (n_chunks <= 1) {
        if (n_chunks == 1) {
            work(0, bounds[0].first, bounds[0].second);
        }
        return bounds;
    }
    std::vector<std::thread> threads;
    threads.reserve(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        threads.emplace_back([&, c] { work(c, bounds[c].first, bounds[c].second); });
    }
    for (auto& th : threads) {
        th.join();
    }
    return bounds;
}

}  // namespace

const char* to_string(Unit unit) {
    return unit == Unit::nats ? "nats" : "bits";
}

const char* to_string(Estimator estimator) {
    switch (estimator) {
        case Estimator::plugin: return "plugin";
        case Estimator::chao_shen: return "chao_shen";
        case Estimator::zhang_naive: return "zhang_naive";
        case Estimator::zhang_linear: return "zhang_linear";
        case Estimator::zhang_spectrum: return "zhang_spectrum";
    }
    return "?";
}

EntropyEstimate plugin_entropy(const TypeFrequencyTable& table) {
    const double t = checked_nonempty(table, "plugin_entropy");
    double h = 0.0;
    for (Count f : table.freqs()) {
        const double p = static_cast<double>(f) / t;
        h -= p * std::log(p);
    }
    if (h == 0.0) {
        h = 0.0;  // fold -0.0 from the single-type case
    }
    return {h, Unit::nats, Estimator::plugin, std::nullopt};
}

EntropyEstimate chao_shen_entropy(const TypeFrequencyTable& table) {
    const double t = checked_nonempty(table, "chao_shen_entropy");
    Count hapaxes = 0;
    for (Count f : table.freqs()) {
        if (f == 1) {
            ++hapaxes;
        }
    }
    const double coverage = 1.0 - static_cast<double>(hapaxes) / t;
    if (coverage <= 0.0) {
        throw Error(ErrorCode::degenerate_coverage,
                    "all types are hapax legomena; sample coverage is zero");
    }
    double h = 0.0;
    for (Count f : table.freqs()) {
        const double pa = coverage * (static_cast<double>(f) / t);
        const double horvitz = 1.0 - std::pow(1.0 - pa, t);
        h -= pa * std::log(pa) / horvitz;
    }
    if (h == 0.0) {
        h = 0.0;
    }
    return {h, Unit::nats, Estimator::chao_shen, std::nullopt};
}

double q_naive(Count f, Count t) {
    if (f == 0 || f > t) {
        throw Error(ErrorCode::invalid_frequency, "Q(f) requires 1 <= f <= T");
    }
    const double shift = 1.0 - static_cast<double>(f);
    double q = 0.0;
    for (Count v = 1; v <= t - f; ++v) {
        double product = 1.0;
        for (Count j = 0; j < v; ++j) {
            product *= 1.0 + shift / static_cast<double>(t - 1 - j);
        }
        q += product / static_cast<double>(v);
    }
    return q;
}

double q_linear(Count f, Count t) {
    return q_linear_counted(f, t).q;
}

EntropyEstimate zhang_naive(const TypeFrequencyTable& table) {
    const double t = checked_nonempty(table, "zhang_naive");
    double k = 0.0;
    for (Count f : table.freqs()) {
        k += static_cast<double>(f) * q_naive(f, table.tokens());
    }
    return {k / t, Unit::nats, Estimator::zhang_naive, std::nullopt};
}

EntropyEstimate zhang_linear(const TypeFrequencyTable& table, unsigned jobs) {
    const double t = checked_nonempty(table, "zhang_linear");
    const auto& freqs = table.freqs();
    InstrumentationCounters counters;
    counters.q_invocations = freqs.size();
    double k = 0.0;

    if (jobs <= 1) {
        for (Count f : freqs) {
            const QResult qr = q_linear_counted(f, table.tokens());
            counters.inner_iterations += qr.body_iterations + 1;
            k += static_cast<double>(f) * qr.q;
        }
    } else {
        std::vector<double> partial_k(jobs, 0.0);
        std::vector<std::uint64_t> partial_iters(jobs, 0);
        const auto bounds = run_chunked(
            freqs.size(), jobs, [&](std::size_t c, std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    const QResult qr = q_linear_counted(freqs[i], table.tokens());
                    partial_iters[c] += qr.body_iterations + 1;
                    partial_k[c] += static_cast<double>(freqs[i]) * qr.q;
                }
            });
        for (std::size_t c = 0; c < bounds.size(); ++c) {
            counters.inner_iterations += partial_iters[c];
            k += partial_k[c];
        }
    }
    return {k / t, Unit::nats, Estimator::zhang_linear, counters};
}

namespace {

EntropyEstimate zhang_over_rows(const std::vector<CompactSpectrum::Row>& rows,
                                Count t_tokens, std::uint64_t build_ops,
                                unsigned jobs) {
    if (rows.empty()) {
        throw empty_input("zhang_spectrum on an empty spectrum");
    }
    InstrumentationCounters counters;
    counters.q_invocations = rows.size();
    counters.spectrum_build_ops = build_ops;
    double k = 0.0;

    if (jobs <= 1) {
        for (const auto& [f, n] : rows) {
            const QResult qr = q_linear_counted(f, t_tokens);
            counters.inner_iterations += qr.body_iterations + 1;
            k += static_cast<double>(n) * static_cast<double>(f) * qr.q;
        }
    } else {
        std::vector<double> partial_k(jobs, 0.0);
        std::vector<std::uint64_t> partial_iters(jobs, 0);
        const auto bounds = run_chunked(
            rows.size(), jobs, [&](std::size_t c, std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    const auto& [f, n] = rows[i];
                    const QResult qr = q_linear_counted(f, t_tokens);
                    partial_iters[c] += qr.body_iterations + 1;
                    partial_k[c] +=
                        static_cast<double>(n) * static_cast<double>(f) * qr.q;
                }
            });
        for (std::size_t c = 0; c < bounds.size(); ++c) {
            counters.inner_iterations += partial_iters[c];
            k += partial_k[c];
        }
    }
    return {k / static_cast<double>(t_tokens), Unit::nats,
            Estimator::zhang_spectrum, counters};
}

}  // namespace

EntropyEstimate zhang_spectrum(const FrequencySpectrum& spectrum, unsigned jobs) {
    std::vector<CompactSpectrum::Row> rows(spectrum.counts().begin(),
                                           spectrum.counts().end());
    return zhang_over_rows(rows, spectrum.tokens(), 0, jobs);
}

EntropyEstimate zhang_spectrum(const CompactSpectrum& spectrum, unsigned jobs) {
    return zhang_over_rows(spectrum.rows(), spectrum.tokens(), 0, jobs);
}

EntropyEstimate zhang_spectrum(const TypeFrequencyTable& table, unsigned jobs) {
    checked_nonempty(table, "zhang_spectrum");
    const FrequencySpectrum spectrum = build_spectrum(table);
    std::vector<CompactSpectrum::Row> rows(spectrum.counts().begin(),
                                           spectrum.counts().end());
    return zhang_over_rows(rows, spectrum.tokens(), table.types(), jobs);
}

EntropyEstimate convert_unit(const EntropyEstimate& estimate, Unit target) {
    if (estimate.unit == target) {
        return estimate;
    }
    EntropyEstimate out = estimate;
    out.unit = target;
    out.value = target == Unit::bits ? estimate.value / std::numbers::ln2
                                     : estimate.value * std::numbers::ln2;
    return out;
}

}  // namespace zhent
