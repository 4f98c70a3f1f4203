#pragma once

#include <span>
#include <vector>

#include "qftlab/phase.hpp"

namespace qftlab {

enum class SuccessCriterion { Nearest, OneOfTwoNearest };

/// One phase-estimation experiment: estimate phi with an n-bit register
/// using threshold m. m is clamped to [2, n] on construction and phi is
/// raised to at least n+1 bits of precision so every derived quantity
/// stays exact.
struct TrialSpec {
    static constexpr int kMaxRegister = Phase::kMaxPrecision - Phase::kGuardBits;

    TrialSpec(int n, int m, Phase phi,
              SuccessCriterion criterion = SuccessCriterion::Nearest);

    int n;
    int m;
    Phase phi;
    SuccessCriterion criterion;
};

struct RunRecord {
    BitString estimate;
    /// Probability of the outcome actually measured at each bit, indexed
    /// by bit position (entry p-1 for bit p). Measurement order is still
    /// p = n down to 1.
    std::vector<double> per_bit_probabilities;
    bool success;
};

/// Residual phase error of the trial for bit p given the already-measured
/// tail x_{p+1}..x_n (which must match the nearest-estimate bits). Computed
/// by the two-case closed form and cross-checked against the operational
/// route wrapped(2^(p-1)*phi - chi_p - (0.x_p)); the two must agree exactly.
SignedOffset delta_p(const TrialSpec& spec, int p, const BitString& measured_tail);

/// cos^2(pi * delta_p).
double bit_success_probability(const TrialSpec& spec, int p,
                               const BitString& measured_tail);

/// Probability that the measurement chain yields exactly `target`, i.e. the
/// product over p = n..1 of P(measure target_p | tail = target bits).
double path_probability(const TrialSpec& spec, const BitString& target);

bool is_success(const TrialSpec& spec, const BitString& estimate);

/// Basis indices of the estimates counted as successes: one string for
/// Nearest, at most two (wrapped distance < 2^-n) for OneOfTwoNearest.
std::vector<u128> qualifying_indices(const TrialSpec& spec);

/// Sum of path_probability over the qualifying strings. O(n) per string.
double success_probability_exact(const TrialSpec& spec);

/// One seeded trial chain: bits measured from p = n down to 1, each using
/// the correction phase from the already-measured bits. draws[0] decides
/// bit n. Deterministic in the draws.
RunRecord sample_run(const TrialSpec& spec, std::span<const double> draws);

struct DistributionEntry {
    BitString bits;
    double probability;
};

/// path_probability for every n-bit string, ascending index. n <= 12.
std::vector<DistributionEntry> full_distribution(const TrialSpec& spec);

}  // namespace qftlab
