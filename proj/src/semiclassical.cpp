#include "qftlab/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qftlab {

namespace {

double cos_sq_pi(double x) {
    const double c = std::cos(std::numbers::pi * x);
    return c * c;
}

Phase half_bit(int bit, int precision) {
    return Phase::from_numerator(bit ? u128{1} << (precision - 1) : 0, precision);
}

// Trial phase before the Hadamard: 2^(p-1)*phi - chi_p, from the bits at
// positions > p of `known`.
Phase trial_phase(const TrialSpec& spec, int p, const BitString& known) {
    return spec.phi.scaled_pow2(p - 1) - chi(known, p, spec.m, spec.n);
}

}  // namespace

TrialSpec::TrialSpec(int n_in, int m_in, Phase phi_in, SuccessCriterion criterion_in)
    : n(n_in), m(m_in), phi(std::move(phi_in)), criterion(criterion_in) {
    if (n < 1 || n > kMaxRegister)
        throw std::invalid_argument("register size out of range");
    m = std::clamp(m, std::min(2, n), n);
    if (phi.precision() < n + 1)
        phi = phi.with_precision(std::min(n + Phase::kGuardBits, Phase::kMaxPrecision));
}

SignedOffset delta_p(const TrialSpec& spec, int p, const BitString& measured_tail) {
    if (p < 1 || p > spec.n) throw std::invalid_argument("bit index out of range");
    if (measured_tail.size() != spec.n - p)
        throw std::invalid_argument("incomplete measured tail");

    const NearestEstimate est = nearest_estimate(spec.phi, spec.n);
    std::vector<uint8_t> full(static_cast<size_t>(spec.n), 0);
    for (int j = p + 1; j <= spec.n; ++j) {
        full[static_cast<size_t>(j - 1)] = static_cast<uint8_t>(measured_tail.bit(j - p));
        if (measured_tail.bit(j - p) != est.bits.bit(j))
            throw std::invalid_argument("measured tail differs from the nearest-estimate bits");
    }
    const BitString x(std::move(full));

    // Closed form: 2^-m * (0.x_{p+m}..x_n) + 2^(p-1)*delta when p <= n-m,
    // otherwise just the amplified offset.
    Phase closed = est.delta.mod_one().scaled_pow2(p - 1);
    if (p <= spec.n - spec.m) {
        const int f = spec.n + 1;
        u128 num = 0;
        for (int j = p + spec.m; j <= spec.n; ++j)
            if (x.bit(j)) num |= u128{1} << (f - (j - (p + spec.m) + 1));
        closed = closed + Phase::from_numerator(num, f).scaled_pow2(-spec.m);
    }
    const SignedOffset closed_form = SignedOffset::wrap(closed);

    const Phase target_bit = half_bit(est.bits.bit(p), spec.phi.precision());
    const SignedOffset operational =
        SignedOffset::wrap(trial_phase(spec, p, x) - target_bit);

    if (!(closed_form == operational))
        throw std::logic_error("delta_p routes disagree");
    return closed_form;
}

double bit_success_probability(const TrialSpec& spec, int p,
                               const BitString& measured_tail) {
    return cos_sq_pi(delta_p(spec, p, measured_tail).to_double());
}

double path_probability(const TrialSpec& spec, const BitString& target) {
    if (target.size() != spec.n)
        throw std::invalid_argument("target length must equal the register size");
    double prob = 1.0;
    for (int p = spec.n; p >= 1; --p) {
        const Phase alpha = trial_phase(spec, p, target);
        const SignedOffset eps =
            SignedOffset::wrap(alpha - half_bit(target.bit(p), alpha.precision()));
        prob *= cos_sq_pi(eps.to_double());
    }
    return prob;
}

bool is_success(const TrialSpec& spec, const BitString& estimate) {
    if (estimate.size() != spec.n)
        throw std::invalid_argument("estimate length must equal the register size");
    if (spec.criterion == SuccessCriterion::Nearest)
        return estimate == nearest_estimate(spec.phi, spec.n).bits;
    const Phase spacing = Phase::from_numerator(1, spec.n);
    return wrapped_distance(spec.phi, phase_from_bits(estimate, spec.phi.precision())) <
           spacing;
}

std::vector<u128> qualifying_indices(const TrialSpec& spec) {
    const NearestEstimate est = nearest_estimate(spec.phi, spec.n);
    const u128 k_hat = est.bits.to_index();
    if (spec.criterion == SuccessCriterion::Nearest) return {k_hat};

    const u128 mask = (u128{1} << spec.n) - 1;
    std::vector<u128> out;
    for (const u128 k : {(k_hat + mask) & mask, k_hat, (k_hat + 1) & mask}) {
        if (std::find(out.begin(), out.end(), k) != out.end()) continue;
        if (is_success(spec, BitString::from_index(k, spec.n))) out.push_back(k);
    }
    return out;
}

double success_probability_exact(const TrialSpec& spec) {
    double total = 0.0;
    for (const u128 k : qualifying_indices(spec))
        total += path_probability(spec, BitString::from_index(k, spec.n));
    return total;
}

RunRecord sample_run(const TrialSpec& spec, std::span<const double> draws) {
    if (draws.size() < static_cast<size_t>(spec.n))
        throw std::invalid_argument("not enough random draws for the register");
    std::vector<uint8_t> bits(static_cast<size_t>(spec.n), 0);
    std::vector<double> per_bit(static_cast<size_t>(spec.n), 0.0);
    for (int p = spec.n; p >= 1; --p) {
        const Phase alpha = trial_phase(spec, p, BitString(bits));
        const double p0 = cos_sq_pi(alpha.to_double());
        const double draw = draws[static_cast<size_t>(spec.n - p)];
        const int outcome = draw < p0 ? 0 : 1;
        bits[static_cast<size_t>(p - 1)] = static_cast<uint8_t>(outcome);
        per_bit[static_cast<size_t>(p - 1)] = outcome == 0 ? p0 : 1.0 - p0;
    }
    BitString estimate(std::move(bits));
    const bool success = is_success(spec, estimate);
    return RunRecord{std::move(estimate), std::move(per_bit), success};
}

std::vector<DistributionEntry> full_distribution(const TrialSpec& spec) {
    if (spec.n > 12)
        throw std::invalid_argument("full_distribution limited to n <= 12");
    const u128 dim = u128{1} << spec.n;
    std::vector<DistributionEntry> out;
    out.reserve(static_cast<size_t>(dim));
    for (u128 k = 0; k < dim; ++k) {
        BitString bits = BitString::from_index(k, spec.n);
        const double prob = path_probability(spec, bits);
        out.push_back(DistributionEntry{std::move(bits), prob});
    }
    return out;
}

}  // namespace qftlab
