#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zhent/error.hpp"
#include "zhent/spectrum.hpp"

namespace zhent {

enum class TokenizerMode {
    whitespace,    // split on whitespace runs, strip non-word edges
    nonword_split  // tokens are maximal runs of word characters
};

struct TokenizerConfig {
    TokenizerMode mode = TokenizerMode::whitespace;
    bool case_fold = false;
};

struct FrequencyEntry {
    std::string type;
    Count count = 0;
};

/// Unique types with their counts, ordered count-descending then
/// type-ascending (bytewise).
class FrequencyList {
public:
    FrequencyList() = default;
    /// Normalizes order; rejects empty types, zero counts and duplicates.
    explicit FrequencyList(std::vector<FrequencyEntry> entries);

    const std::vector<FrequencyEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<FrequencyEntry> entries_;
};

/// Splits UTF-8 text into word tokens. Word characters are Unicode letters,
/// marks and numbers; whitespace is the Unicode White_Space set. Invalid
/// UTF-8 throws EncodingError.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config);

FrequencyList count_types(const std::vector<std::string>& tokens);

TypeFrequencyTable to_frequency_table(const FrequencyList& list);

/// Frequency file: UTF-8 lines `type<TAB>count`, LF endings.
FrequencyList read_frequency_file(const std::filesystem::path& path);
void write_frequency_file(const FrequencyList& list, const std::filesystem::path& path);

/// Spectrum file: header `#T=<int>`, then `f<TAB>n(f)` lines ascending in f.
FrequencySpectrum read_spectrum_file(const std::filesystem::path& path);
void write_spectrum_file(const FrequencySpectrum& spectrum,
                         const std::filesystem::path& path);

/// Whole-file read with IoFailure on any stream error.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace zhent
