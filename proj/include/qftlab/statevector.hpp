#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qftlab/phase.hpp"

namespace qftlab {

/// Dense 2^n complex amplitude vector. Qubit 1 is the most significant bit
/// of the basis index (top wire of a circuit diagram).
class StateVector {
public:
    static constexpr int kMaxQubits = 24;
    static constexpr int kMaxReferenceQubits = 12;

    static StateVector basis_state(int n, uint64_t index, int max_qubits = kMaxQubits);
    static StateVector from_amplitudes(int n, std::vector<std::complex<double>> amps);

    int qubit_count() const { return n_; }
    uint64_t dimension() const { return uint64_t{1} << n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(uint64_t index) const { return amps_.at(index); }
    double norm_squared() const;

    /// Mutable access for gate kernels.
    std::vector<std::complex<double>>& data() { return amps_; }

private:
    StateVector(int n, std::vector<std::complex<double>> amps)
        : n_(n), amps_(std::move(amps)) {}
    int n_;
    std::vector<std::complex<double>> amps_;
};

struct MeasurementOutcome {
    int bit;
    StateVector collapsed_state;
    double probability;
};

StateVector apply_hadamard(StateVector s, int q);
/// Multiplies the |1> component of qubit q by e^(sign * 2*pi*i * angle).
StateVector apply_rotation(StateVector s, int q, const Phase& angle, int sign = +1);
StateVector apply_controlled_rotation(StateVector s, int control, int target,
                                      const Phase& angle, int sign = +1);

/// The product state with qubit p carrying relative phase 2^(p-1) * phi.
StateVector prepare_phase_register(const Phase& phi, int n,
                                   int max_qubits = StateVector::kMaxQubits);

/// Direct evaluation of the discrete Fourier transform definition,
/// |j> -> 2^(-n/2) sum_k e^(2*pi*i*j*k/2^n) |k>. O(4^n); the oracle the
/// circuit builders are validated against.
StateVector dft_reference(const StateVector& s);

/// Projective measurement of qubit q. Outcome is 0 iff draw < P(0); the
/// caller supplies the draw, the module owns no randomness.
MeasurementOutcome measure_qubit(const StateVector& s, int q, double draw);

/// Hermitian inner product, conjugating the first argument.
std::complex<double> inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

/// Debug text format: one "index<TAB>re<TAB>im" line per nonzero amplitude,
/// ascending indices.
std::string serialize_state(const StateVector& s);

}  // namespace qftlab
