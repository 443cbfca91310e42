#pragma once

#include <cstdint>

#include "zhent/spectrum.hpp"

namespace zhent {

struct EntropyEstimate;

/// Per-call operation counts attached to an estimate. `inner_iterations`
/// counts executions of the Q recurrence loop body plus one setup operation
/// per Q evaluation, so that it lands exactly on the closed-form predictions
/// below (each Q(f) evaluation contributes T - f + 1).
struct InstrumentationCounters {
    std::uint64_t inner_iterations = 0;
    std::uint64_t q_invocations = 0;
    std::uint64_t spectrum_build_ops = 0;
};

enum class CostAlgorithm { a_prime, c };

struct CostPrediction {
    CostAlgorithm algorithm = CostAlgorithm::a_prime;
    std::uint64_t predicted_iterations = 0;
    std::uint64_t saving_vs_a_prime = 0;  // meaningful for c only
};

/// T(V - 1) + V: iteration count of the linear-recurrence estimator.
std::uint64_t predict_a_prime(Count t, Count v);

/// W(T + 1) - sum of occupied f: iteration count of the spectrum estimator.
std::uint64_t predict_c(const CompactSpectrum& spectrum);

/// (V - W)(T + 1) - T + sum of occupied f; always >= 0, zero exactly when
/// W = V.
std::uint64_t predict_saving(const CompactSpectrum& spectrum, Count v);

CostPrediction predict(CostAlgorithm algorithm, const CompactSpectrum& spectrum,
                       Count v);

/// True iff the estimate's measured inner_iterations equal the prediction
/// exactly. Throws CountersUnavailable when the estimate carries no counters.
bool verify_counters(const EntropyEstimate& estimate,
                     const CostPrediction& prediction);

}  // namespace zhent
