#include "qftlab/statevector.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qftlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int bitpos(int n, int q) { return n - q; }

void check_qubit(const StateVector& s, int q) {
    if (q < 1 || q > s.qubit_count())
        throw std::invalid_argument("qubit index out of range");
}

}  // namespace

StateVector StateVector::basis_state(int n, uint64_t index, int max_qubits) {
    if (n < 1 || n > max_qubits)
        throw std::invalid_argument("qubit count out of range");
    if (index >= (uint64_t{1} << n))
        throw std::invalid_argument("basis index out of range");
    std::vector<std::complex<double>> amps(uint64_t{1} << n);
    amps[index] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n, std::vector<std::complex<double>> amps) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    if (amps.size() != (uint64_t{1} << n))
        throw std::invalid_argument("amplitude vector has wrong dimension");
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

StateVector apply_hadamard(StateVector s, int q) {
    check_qubit(s, q);
    auto& a = s.data();
    const uint64_t stride = uint64_t{1} << bitpos(s.qubit_count(), q);
    const uint64_t dim = s.dimension();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (uint64_t base = 0; base < dim; base += 2 * stride) {
        for (uint64_t i = base; i < base + stride; ++i) {
            const auto lo = a[i];
            const auto hi = a[i + stride];
            a[i] = (lo + hi) * inv_sqrt2;
            a[i + stride] = (lo - hi) * inv_sqrt2;
        }
    }
    return s;
}

StateVector apply_rotation(StateVector s, int q, const Phase& angle, int sign) {
    check_qubit(s, q);
    const auto w = std::polar(1.0, sign * kTwoPi * angle.to_double());
    auto& a = s.data();
    const uint64_t stride = uint64_t{1} << bitpos(s.qubit_count(), q);
    const uint64_t dim = s.dimension();
    for (uint64_t base = stride; base < dim; base += 2 * stride)
        for (uint64_t i = base; i < base + stride; ++i) a[i] *= w;
    return s;
}

StateVector apply_controlled_rotation(StateVector s, int control, int target,
                                      const Phase& angle, int sign) {
    check_qubit(s, control);
    check_qubit(s, target);
    if (control == target)
        throw std::invalid_argument("control and target qubits clash");
    const auto w = std::polar(1.0, sign * kTwoPi * angle.to_double());
    auto& a = s.data();
    const uint64_t cbit = uint64_t{1} << bitpos(s.qubit_count(), control);
    const uint64_t tbit = uint64_t{1} << bitpos(s.qubit_count(), target);
    const uint64_t dim = s.dimension();
    for (uint64_t i = 0; i < dim; ++i)
        if ((i & cbit) && (i & tbit)) a[i] *= w;
    return s;
}

StateVector prepare_phase_register(const Phase& phi, int n, int max_qubits) {
    if (n < 1 || n > max_qubits)
        throw std::invalid_argument("qubit count out of range");
    std::vector<double> theta(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p)
        theta[static_cast<size_t>(p - 1)] = phi.scaled_pow2(p - 1).to_double();
    const uint64_t dim = uint64_t{1} << n;
    const double scale = std::ldexp(1.0, -n / 2) * (n % 2 ? 1.0 / std::numbers::sqrt2 : 1.0);
    std::vector<std::complex<double>> amps(dim);
    for (uint64_t idx = 0; idx < dim; ++idx) {
        double total = 0.0;
        for (int p = 1; p <= n; ++p)
            if (idx >> bitpos(n, p) & 1) total += theta[static_cast<size_t>(p - 1)];
        amps[idx] = std::polar(scale, kTwoPi * total);
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector dft_reference(const StateVector& s) {
    const int n = s.qubit_count();
    if (n > StateVector::kMaxReferenceQubits)
        throw std::invalid_argument("dft_reference limited to small registers");
    const uint64_t dim = s.dimension();
    std::vector<std::complex<double>> roots(dim);
    for (uint64_t t = 0; t < dim; ++t)
        roots[t] = std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(dim));
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<std::complex<double>> out(dim);
    const auto& in = s.amplitudes();
    for (uint64_t j = 0; j < dim; ++j) {
        if (in[j] == std::complex<double>{}) continue;
        for (uint64_t k = 0; k < dim; ++k)
            out[k] += in[j] * roots[(j * k) & (dim - 1)];
    }
    for (auto& a : out) a *= scale;
    return StateVector::from_amplitudes(n, std::move(out));
}

MeasurementOutcome measure_qubit(const StateVector& s, int q, double draw) {
    check_qubit(s, q);
    if (draw < 0.0 || draw >= 1.0)
        throw std::invalid_argument("measurement draw must lie in [0, 1)");
    const uint64_t qbit = uint64_t{1} << bitpos(s.qubit_count(), q);
    double p0 = 0.0;
    for (uint64_t i = 0; i < s.dimension(); ++i)
        if (!(i & qbit)) p0 += std::norm(s.amplitudes()[i]);
    const int outcome = draw < p0 ? 0 : 1;
    const double probability = outcome == 0 ? p0 : 1.0 - p0;
    if (probability <= 0.0)
        throw std::invalid_argument("measurement selected a zero-probability branch");
    const double renorm = 1.0 / std::sqrt(probability);
    std::vector<std::complex<double>> amps(s.dimension());
    for (uint64_t i = 0; i < s.dimension(); ++i)
        if (((i & qbit) != 0) == (outcome == 1)) amps[i] = s.amplitudes()[i] * renorm;
    return MeasurementOutcome{outcome,
                              StateVector::from_amplitudes(s.qubit_count(), std::move(amps)),
                              probability};
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
    if (a.qubit_count() != b.qubit_count())
        throw std::invalid_argument("state dimensions differ");
    std::complex<double> total = 0.0;
    for (uint64_t i = 0; i < a.dimension(); ++i)
        total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

std::string serialize_state(const StateVector& s) {
    std::string out;
    char line[96];
    for (uint64_t i = 0; i < s.dimension(); ++i) {
        const auto a = s.amplitudes()[i];
        if (std::abs(a) < 1e-12) continue;
        std::snprintf(line, sizeof(line), "%llu\t%.17g\t%.17g\n",
                      static_cast<unsigned long long>(i), a.real(), a.imag());
        out += line;
    }
    return out;
}

}  // namespace qftlab
