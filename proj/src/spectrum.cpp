#include "zhent/spectrum.hpp"

#include <numeric>

namespace zhent {

TypeFrequencyTable::TypeFrequencyTable(std::vector<Count> freqs)
    : freqs_(std::move(freqs)) {
    for (Count f : freqs_) {
        if (f == 0) {
            throw Error(ErrorCode::invalid_frequency,
                        "type frequency must be positive");
        }
        tokens_ += f;
    }
}

FrequencySpectrum::FrequencySpectrum(std::map<Count, Count> counts)
    : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->first == 0) {
            throw Error(ErrorCode::invalid_frequency,
                        "spectrum frequency must be positive");
        }
        if (it->second == 0) {
            it = counts_.erase(it);  // normalize away unoccupied keys
        } else {
            tokens_ += it->first * it->second;
            types_ += it->second;
            ++it;
        }
    }
}

Count FrequencySpectrum::f_max() const noexcept {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

TypeFrequencyTable FrequencySpectrum::to_table() const {
    std::vector<Count> freqs;
    freqs.reserve(types_);
    for (const auto& [f, n] : counts_) {
        freqs.insert(freqs.end(), n, f);
    }
    return TypeFrequencyTable(std::move(freqs));
}

CompactSpectrum::CompactSpectrum(std::vector<Row> rows) : rows_(std::move(rows)) {
    Count prev = 0;
    for (const auto& [f, n] : rows_) {
        if (f == 0) {
            throw Error(ErrorCode::invalid_frequency,
                        "spectrum frequency must be positive");
        }
        if (n == 0) {
            throw Error(ErrorCode::invalid_input,
                        "compact spectrum row with zero count");
        }
        if (f <= prev) {
            throw Error(ErrorCode::invalid_input,
                        "compact spectrum rows must be strictly ascending in f");
        }
        prev = f;
        tokens_ += f * n;
        types_ += n;
    }
}

FrequencySpectrum build_spectrum(const TypeFrequencyTable& table) {
    if (table.empty()) {
        throw empty_input("cannot build a spectrum from an empty table");
    }
    std::map<Count, Count> counts;
    for (Count f : table.freqs()) {
        ++counts[f];
    }
    return FrequencySpectrum(std::move(counts));
}

CompactSpectrum compact(const FrequencySpectrum& spectrum) {
    std::vector<CompactSpectrum::Row> rows;
    rows.reserve(spectrum.distinct());
    for (const auto& [f, n] : spectrum.counts()) {
        rows.emplace_back(f, n);
    }
    return CompactSpectrum(std::move(rows));
}

FrequencySpectrum expand(const CompactSpectrum& spectrum) {
    std::map<Count, Count> counts;
    for (const auto& [f, n] : spectrum.rows()) {
        counts.emplace(f, n);
    }
    return FrequencySpectrum(std::move(counts));
}

SpectrumStats stats(const FrequencySpectrum& spectrum) {
    if (spectrum.empty()) {
        throw empty_input("cannot compute stats of an empty spectrum");
    }
    SpectrumStats s;
    s.t_tokens = spectrum.tokens();
    s.v_types = spectrum.types();
    s.w_distinct = spectrum.distinct();
    s.f_max = spectrum.f_max();
    s.w_over_v = static_cast<double>(s.w_distinct) / static_cast<double>(s.v_types);
    s.fmax_over_v = static_cast<double>(s.f_max) / static_cast<double>(s.v_types);
    s.fmax_over_t = static_cast<double>(s.f_max) / static_cast<double>(s.t_tokens);
    return s;
}

}  // namespace zhent
