#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zhent {

enum class ErrorCode {
    empty_input,
    invalid_frequency,
    invalid_input,
    degenerate_coverage,
    counters_unavailable,
    insufficient_data,
    undefined_tau,
    invalid_metric,
    malformed_line,
    encoding_error,
    io_failure,
};

/// Library-wide exception. `code()` tells callers (and the CLI exit-code
/// mapping) which failure class they hit; `line()` is nonzero only for
/// malformed-line errors.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), code_(code), line_(line) {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_;
};

inline Error empty_input(const std::string& what) {
    return Error(ErrorCode::empty_input, what);
}

inline Error malformed_line(const std::string& path, std::size_t line_no,
                            const std::string& what) {
    return Error(ErrorCode::malformed_line,
                 path + ":" + std::to_string(line_no) + ": " + what, line_no);
}

}  // namespace zhent
