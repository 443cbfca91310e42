#include "zhent/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace zhent {

TypeFrequencyTable zipf_generate(const ZipfGeneratorConfig& config) {
    if (config.n_ranks == 0 || config.t_tokens == 0 || config.alpha < 0.0 ||
        !std::isfinite(config.alpha)) {
        throw Error(ErrorCode::invalid_input,
                    "zipf generator needs n_ranks >= 1, t_tokens >= 1, alpha >= 0");
    }

    // Cumulative rank weights, normalized in a second pass.
    std::vector<double> cumulative(config.n_ranks);
    double total = 0.0;
    for (std::uint64_t rank = 1; rank <= config.n_ranks; ++rank) {
        total += std::pow(static_cast<double>(rank), -config.alpha);
        cumulative[rank - 1] = total;
    }
    for (double& c : cumulative) {
        c /= total;
    }
    cumulative.back() = 1.0;  // guard against rounding just below 1

    std::mt19937_64 rng(config.seed);
    std::vector<Count> counts(config.n_ranks, 0);
    for (Count i = 0; i < config.t_tokens; ++i) {
        // Top 53 bits -> uniform double in [0, 1); bypasses the (non
        // portable) standard distributions.
        const double u =
            static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), u);
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }

    std::vector<Count> observed;
    observed.reserve(counts.size());
    for (Count c : counts) {
        if (c > 0) {
            observed.push_back(c);
        }
    }
    return TypeFrequencyTable(std::move(observed));
}

}  // namespace zhent
