#include "zhent/cost_model.hpp"

#include "zhent/estimators.hpp"

namespace zhent {

std::uint64_t predict_a_prime(Count t, Count v) {
    if (v == 0 || t == 0 || v > t) {
        throw Error(ErrorCode::invalid_input,
                    "predict_a_prime requires 1 <= V <= T");
    }
    return t * (v - 1) + v;
}

std::uint64_t predict_c(const CompactSpectrum& spectrum) {
    if (spectrum.empty()) {
        throw empty_input("predict_c on an empty spectrum");
    }
    const Count t = spectrum.tokens();
    const Count w = spectrum.distinct();
    std::uint64_t f_sum = 0;
    for (const auto& [f, n] : spectrum.rows()) {
        f_sum += f;
    }
    return w * (t + 1) - f_sum;
}

std::uint64_t predict_saving(const CompactSpectrum& spectrum, Count v) {
    if (spectrum.empty()) {
        throw empty_input("predict_saving on an empty spectrum");
    }
    const Count w = spectrum.distinct();
    if (w > v) {
        throw Error(ErrorCode::invalid_input, "W cannot exceed V");
    }
    const Count t = spectrum.tokens();
    std::uint64_t f_sum = 0;
    for (const auto& [f, n] : spectrum.rows()) {
        f_sum += f;
    }
    // (V - W)(T + 1) - T + sum f, reordered so the subtraction comes last:
    // when W = V the sum of occupied f equals T and the result is exactly 0,
    // otherwise (V - W)(T + 1) alone exceeds T.
    return (v - w) * (t + 1) + f_sum - t;
}

CostPrediction predict(CostAlgorithm algorithm, const CompactSpectrum& spectrum,
                       Count v) {
    CostPrediction p;
    p.algorithm = algorithm;
    if (algorithm == CostAlgorithm::a_prime) {
        p.predicted_iterations = predict_a_prime(spectrum.tokens(), v);
        p.saving_vs_a_prime = 0;
    } else {
        p.predicted_iterations = predict_c(spectrum);
        p.saving_vs_a_prime = predict_saving(spectrum, v);
    }
    return p;
}

bool verify_counters(const EntropyEstimate& estimate,
                     const CostPrediction& prediction) {
    if (!estimate.counters) {
        throw Error(ErrorCode::counters_unavailable,
                    "estimate carries no instrumentation counters");
    }
    return estimate.counters->inner_iterations == prediction.predicted_iterations;
}

}  // namespace zhent
