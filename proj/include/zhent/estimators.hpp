#pragma once

#include <cstdint>
#include <optional>

#include "zhent/cost_model.hpp"
#include "zhent/spectrum.hpp"

namespace zhent {

enum class Unit { nats, bits };
enum class Estimator { plugin, chao_shen, zhang_naive, zhang_linear, zhang_spectrum };

const char* to_string(Unit unit);
const char* to_string(Estimator estimator);

struct EntropyEstimate {
    double value = 0.0;
    Unit unit = Unit::nats;
    Estimator estimator = Estimator::plugin;
    std::optional<InstrumentationCounters> counters;
};

/// Maximum-likelihood estimate -sum (f/T) ln(f/T), in nats. Biased low.
EntropyEstimate plugin_entropy(const TypeFrequencyTable& table);

/// Coverage-adjusted baseline: with C = 1 - n(1)/T and p_a = C f/T,
/// H = -sum p_a ln(p_a) / (1 - (1 - p_a)^T). Throws DegenerateCoverage when
/// every type is a hapax (C = 0).
EntropyEstimate chao_shen_entropy(const TypeFrequencyTable& table);

/// Q(f) by the literal double loop: for each v, the product over j is
/// recomputed from scratch. O((t-f)^2); exists as the oracle for q_linear.
double q_naive(Count f, Count t);

/// Q(f) by the running-product recurrence: R starts at 1 and is multiplied
/// by 1 + (1-f)/(t-v) each step, accumulating R/v in ascending v. If R
/// underflows to exactly 0.0 the loop stops early; every remaining term
/// would add exactly 0, so the result is bit-identical.
double q_linear(Count f, Count t);

/// Direct evaluation of the estimator's defining series: (1/T) sum f_i
/// Q(f_i) with Q via q_naive. O(VT^2); desk-scale oracle only.
EntropyEstimate zhang_naive(const TypeFrequencyTable& table);

/// Same value as zhang_naive via the linear recurrence, types in input
/// order. Theta(VT) time, O(1) memory beyond the input. `jobs > 1` opts in
/// to chunked evaluation across threads; counters are unaffected but the
/// final sum may differ from jobs=1 in the last bits.
EntropyEstimate zhang_linear(const TypeFrequencyTable& table, unsigned jobs = 1);

/// Spectrum form: (1/T) sum over occupied f of n(f) f Q(f), ascending f,
/// invoking q_linear once per occupied frequency. O(WT) time.
EntropyEstimate zhang_spectrum(const FrequencySpectrum& spectrum, unsigned jobs = 1);
EntropyEstimate zhang_spectrum(const CompactSpectrum& spectrum, unsigned jobs = 1);
/// Builds the sparse spectrum from the raw table first (counted in
/// spectrum_build_ops), then proceeds as above.
EntropyEstimate zhang_spectrum(const TypeFrequencyTable& table, unsigned jobs = 1);

/// nats <-> bits by ln 2; no-op when already in the target unit.
EntropyEstimate convert_unit(const EntropyEstimate& estimate, Unit target);

}  // namespace zhent
