#include "zhent/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zhent/unicode_tables.hpp"

namespace zhent {
namespace {

// Unicode White_Space property (25 codepoints).
bool is_space(char32_t cp) {
    switch (cp) {
        case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
        case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_word(char32_t cp) {
    const auto* begin = std::begin(detail::kWordRanges);
    const auto* end = std::end(detail::kWordRanges);
    const auto* it = std::upper_bound(
        begin, end, cp,
        [](char32_t value, const detail::CpRange& r) { return value < r.lo; });
    return it != begin && cp <= (it - 1)->hi;
}

char32_t fold_case(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
    }
    const auto* begin = std::begin(detail::kLowerPairs);
    const auto* end = std::end(detail::kLowerPairs);
    const auto* it = std::lower_bound(
        begin, end, cp,
        [](const detail::CpPair& p, char32_t value) { return p.from < value; });
    return (it != end && it->from == cp) ? it->to : cp;
}

// Strict UTF-8 decoder: rejects overlong forms, surrogates and truncated
// sequences.
std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto byte = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (byte < 0x80) {
            cp = byte;
            len = 1;
        } else if ((byte & 0xE0) == 0xC0) {
            cp = byte & 0x1F;
            len = 2;
        } else if ((byte & 0xF0) == 0xE0) {
            cp = byte & 0x0F;
            len = 3;
        } else if ((byte & 0xF8) == 0xF0) {
            cp = byte & 0x07;
            len = 4;
        } else {
            throw Error(ErrorCode::encoding_error,
                        "invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > text.size()) {
            throw Error(ErrorCode::encoding_error,
                        "truncated UTF-8 sequence at offset " + std::to_string(i));
        }
        for (std::size_t k = 1; k < len; ++k) {
            const auto cont = static_cast<unsigned char>(text[i + k]);
            if ((cont & 0xC0) != 0x80) {
                throw Error(ErrorCode::encoding_error,
                            "invalid UTF-8 continuation at offset " +
                                std::to_string(i + k));
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len]) {
            throw Error(ErrorCode::encoding_error,
                        "overlong UTF-8 sequence at offset " + std::to_string(i));
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw Error(ErrorCode::encoding_error,
                        "invalid codepoint at offset " + std::to_string(i));
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_token(const std::vector<char32_t>& cps, std::size_t lo,
                         std::size_t hi, bool fold) {
    std::string out;
    for (std::size_t i = lo; i < hi; ++i) {
        encode_utf8(fold ? fold_case(cps[i]) : cps[i], out);
    }
    return out;
}

Count parse_count(std::string_view digits, const std::filesystem::path& path,
                  std::size_t line_no) {
    Count value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || digits.empty()) {
        throw malformed_line(path.string(), line_no, "count is not an integer");
    }
    if (value == 0) {
        throw malformed_line(path.string(), line_no, "count must be positive");
    }
    return value;
}

}  // namespace

FrequencyList::FrequencyList(std::vector<FrequencyEntry> entries)
    : entries_(std::move(entries)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.type.empty()) {
            throw Error(ErrorCode::invalid_input, "empty type string");
        }
        if (e.count == 0) {
            throw Error(ErrorCode::invalid_input,
                        "type count must be positive: " + e.type);
        }
        if (!seen.insert(e.type).second) {
            throw Error(ErrorCode::invalid_input, "duplicate type: " + e.type);
        }
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const FrequencyEntry& a, const FrequencyEntry& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.type < b.type;
              });
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
    const std::vector<char32_t> cps = decode_utf8(text);
    std::vector<std::string> tokens;

    if (config.mode == TokenizerMode::nonword_split) {
        std::size_t i = 0;
        while (i < cps.size()) {
            while (i < cps.size() && !is_word(cps[i])) ++i;
            std::size_t lo = i;
            while (i < cps.size() && is_word(cps[i])) ++i;
            if (i > lo) {
                tokens.push_back(encode_token(cps, lo, i, config.case_fold));
            }
        }
        return tokens;
    }

    // Whitespace mode: fields are whitespace-delimited, then trimmed of
    // leading/trailing non-word characters (interior punctuation stays).
    std::size_t i = 0;
    while (i < cps.size()) {
        while (i < cps.size() && is_space(cps[i])) ++i;
        std::size_t lo = i;
        while (i < cps.size() && !is_space(cps[i])) ++i;
        std::size_t hi = i;
        while (lo < hi && !is_word(cps[lo])) ++lo;
        while (hi > lo && !is_word(cps[hi - 1])) --hi;
        if (hi > lo) {
            tokens.push_back(encode_token(cps, lo, hi, config.case_fold));
        }
    }
    return tokens;
}

FrequencyList count_types(const std::vector<std::string>& tokens) {
    std::unordered_map<std::string, Count> counts;
    counts.reserve(tokens.size());
    for (const auto& token : tokens) {
        ++counts[token];
    }
    std::vector<FrequencyEntry> entries;
    entries.reserve(counts.size());
    for (auto& [type, count] : counts) {
        entries.push_back({type, count});
    }
    return FrequencyList(std::move(entries));
}

TypeFrequencyTable to_frequency_table(const FrequencyList& list) {
    std::vector<Count> freqs;
    freqs.reserve(list.entries().size());
    for (const auto& e : list.entries()) {
        freqs.push_back(e.count);
    }
    return TypeFrequencyTable(std::move(freqs));
}

FrequencyList read_frequency_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    }
    std::vector<FrequencyEntry> entries;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw malformed_line(path.string(), line_no,
                                 "expected `type<TAB>count`");
        }
        FrequencyEntry e;
        e.type = line.substr(0, tab);
        e.count = parse_count(std::string_view(line).substr(tab + 1), path, line_no);
        if (!seen.insert(e.type).second) {
            throw malformed_line(path.string(), line_no,
                                 "duplicate type: " + e.type);
        }
        entries.push_back(std::move(e));
    }
    if (in.bad()) {
        throw Error(ErrorCode::io_failure, "read error on " + path.string());
    }
    return FrequencyList(std::move(entries));
}

void write_frequency_file(const FrequencyList& list,
                          const std::filesystem::path& path) {
    for (const auto& e : list.entries()) {
        if (e.type.find_first_of("\t\n\r") != std::string::npos) {
            throw Error(ErrorCode::invalid_input,
                        "type contains a tab or line break: " + e.type);
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    }
    for (const auto& e : list.entries()) {
        out << e.type << '\t' << e.count << '\n';
    }
    out.flush();
    if (!out) {
        throw Error(ErrorCode::io_failure, "write error on " + path.string());
    }
}

FrequencySpectrum read_spectrum_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind("#T=", 0) != 0 || line.size() == 3) {
        throw malformed_line(path.string(), 1, "missing `#T=<tokens>` header");
    }
    const Count declared_t = parse_count(std::string_view(line).substr(3), path, 1);

    std::map<Count, Count> counts;
    Count prev_f = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw malformed_line(path.string(), line_no, "expected `f<TAB>n(f)`");
        }
        const Count f = parse_count(std::string_view(line).substr(0, tab), path, line_no);
        const Count n = parse_count(std::string_view(line).substr(tab + 1), path, line_no);
        if (f <= prev_f) {
            throw malformed_line(path.string(), line_no,
                                 "frequencies must be strictly ascending");
        }
        prev_f = f;
        counts.emplace(f, n);
    }
    if (in.bad()) {
        throw Error(ErrorCode::io_failure, "read error on " + path.string());
    }
    FrequencySpectrum spectrum(std::move(counts));
    if (spectrum.tokens() != declared_t) {
        throw malformed_line(path.string(), 1,
                             "header token count " + std::to_string(declared_t) +
                                 " does not match rows (" +
                                 std::to_string(spectrum.tokens()) + ")");
    }
    return spectrum;
}

void write_spectrum_file(const FrequencySpectrum& spectrum,
                         const std::filesystem::path& path) {
    if (spectrum.empty()) {
        throw empty_input("refusing to write an empty spectrum");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    }
    out << "#T=" << spectrum.tokens() << '\n';
    for (const auto& [f, n] : spectrum.counts()) {
        out << f << '\t' << n << '\n';
    }
    out.flush();
    if (!out) {
        throw Error(ErrorCode::io_failure, "write error on " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::io_failure, "read error on " + path.string());
    }
    return buffer.str();
}

}  // namespace zhent
