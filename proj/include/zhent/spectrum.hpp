#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zhent/error.hpp"

namespace zhent {

using Count = std::uint64_t;

class FrequencySpectrum;
class CompactSpectrum;

/// Per-type absolute frequencies f_1..f_V. Order is whatever the caller
/// supplied; all estimators are permutation-invariant over it.
class TypeFrequencyTable {
public:
    TypeFrequencyTable() = default;
    explicit TypeFrequencyTable(std::vector<Count> freqs);

    const std::vector<Count>& freqs() const noexcept { return freqs_; }
    Count tokens() const noexcept { return tokens_; }       // T
    Count types() const noexcept { return freqs_.size(); }  // V
    bool empty() const noexcept { return freqs_.empty(); }

private:
    std::vector<Count> freqs_;
    Count tokens_ = 0;
};

/// n(f) for every occupied frequency, keyed by f. Zero counts are never
/// stored, so the map size is W and iteration runs over ascending f.
class FrequencySpectrum {
public:
    FrequencySpectrum() = default;
    /// Zero-count entries are dropped; a zero frequency key is rejected.
    explicit FrequencySpectrum(std::map<Count, Count> counts);

    const std::map<Count, Count>& counts() const noexcept { return counts_; }
    Count tokens() const noexcept { return tokens_; }           // T
    Count types() const noexcept { return types_; }             // V = sum n(f)
    Count distinct() const noexcept { return counts_.size(); }  // W
    Count f_max() const noexcept;
    bool empty() const noexcept { return counts_.empty(); }

    /// Expands back to a frequency multiset, ascending f.
    TypeFrequencyTable to_table() const;

private:
    std::map<Count, Count> counts_;
    Count tokens_ = 0;
    Count types_ = 0;
};

/// The W x 2 form: (f, n(f)) rows, strictly increasing in f, no zero rows.
class CompactSpectrum {
public:
    using Row = std::pair<Count, Count>;

    CompactSpectrum() = default;
    /// Rows must already be strictly ascending in f with n(f) >= 1.
    explicit CompactSpectrum(std::vector<Row> rows);

    const std::vector<Row>& rows() const noexcept { return rows_; }
    Count tokens() const noexcept { return tokens_; }
    Count types() const noexcept { return types_; }
    Count distinct() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

private:
    std::vector<Row> rows_;
    Count tokens_ = 0;
    Count types_ = 0;
};

/// The Table-2 scalar summary of one text.
struct SpectrumStats {
    Count t_tokens = 0;
    Count v_types = 0;
    Count w_distinct = 0;
    Count f_max = 0;
    double w_over_v = 0.0;
    double fmax_over_v = 0.0;
    double fmax_over_t = 0.0;  // companion ratio, see stats()
};

/// One pass over the V entries; throws EmptyInput on an empty table.
FrequencySpectrum build_spectrum(const TypeFrequencyTable& table);

CompactSpectrum compact(const FrequencySpectrum& spectrum);
FrequencySpectrum expand(const CompactSpectrum& spectrum);

/// Scalar stats (T, V, W, f_max and the W/V, f_max/V ratios). f_max/T is
/// included as well because the two ratios are easy to confuse when reading
/// summaries; the headline column stays f_max/V.
SpectrumStats stats(const FrequencySpectrum& spectrum);

}  // namespace zhent
