#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qaffine/boolfn.hpp"
#include "qaffine/rng.hpp"

namespace qaffine {

/// How the oracle encodes a don't-care entry on the workspace qubit:
/// Plus applies H (maps |0> to (|0>+|1>)/sqrt2), Minus applies H after a
/// bit flip (maps |0> to (|0>-|1>)/sqrt2).
enum class OracleVariant { Plus, Minus };

/// Exact complex-amplitude state of an (n+1)-qubit register: n input qubits
/// plus one workspace qubit. Basis index = (input index) * 2 + workspace bit,
/// so the workspace is the least significant index bit and each oracle acts
/// on a contiguous pair of amplitudes.
class StateVector {
public:
  /// |0...0> on the inputs, |1> on the workspace.
  explicit StateVector(int n_inputs);

  /// Arbitrary state for tests and analysis; must be normalized to 1e-9.
  static StateVector from_amplitudes(int n_inputs, std::vector<std::complex<double>> amps);

  int n_inputs() const { return n_inputs_; }
  std::size_t size() const { return amps_.size(); }
  std::complex<double> amp(std::size_t i) const { return amps_[i]; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  /// Walsh-Hadamard transform on all n+1 qubits. Butterflies are applied
  /// qubit by qubit from the workspace upward, indices ascending, so the
  /// floating-point result is reproducible.
  void hadamard_all();

  /// H on the workspace qubit only.
  void hadamard_workspace();

  /// Workspace-block action per input index i: identity for a defined 0,
  /// bit flip for a defined 1, H (Plus) or H*X (Minus) for a don't-care.
  void apply_oracle(const PartialFunction& g, OracleVariant variant);

  /// Born-rule probabilities over all 2^(n+1) basis states.
  std::vector<double> distribution() const;

  /// Probabilities over the 2^n input indices, workspace marginalized.
  std::vector<double> input_distribution() const;

  /// Samples the first n qubits, collapses the state onto the outcome and
  /// renormalizes. Returns the measured input index.
  std::uint32_t measure_inputs(Rng& rng);

  /// Samples the workspace qubit, collapses and renormalizes.
  int measure_workspace(Rng& rng);

  double norm() const;

private:
  int n_inputs_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace qaffine
