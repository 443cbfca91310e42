#pragma once

#include <cstdint>

#include "zhent/spectrum.hpp"

namespace zhent {

/// Rank-frequency generator: token probability proportional to rank^-alpha
/// over n_ranks ranks.
struct ZipfGeneratorConfig {
    std::uint64_t n_ranks = 1;
    double alpha = 1.0;
    Count t_tokens = 1;
    std::uint64_t seed = 0;
};

/// Draws t_tokens i.i.d. tokens and returns the frequencies of the observed
/// ranks only. Deterministic per seed (raw mt19937_64 output mapped to
/// [0,1), so results do not depend on the standard library's distribution
/// implementations).
TypeFrequencyTable zipf_generate(const ZipfGeneratorConfig& config);

}  // namespace zhent
