#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qaffine/boolfn.hpp"
#include "qaffine/statevector.hpp"

namespace qaffine {

enum class VariantPolicy { Auto, ForcePlus, ForceMinus, BothWithVote };
enum class VariantUsed { Plus, Minus, Both };

struct RunConfig {
  Mode mode = Mode::Affine;
  VariantPolicy variant_policy = VariantPolicy::Auto;
  int trials_per_oracle = 25;
  std::uint64_t rng_seed = 0;
};

/// One-query identification: H on all qubits, one oracle call, H on all
/// qubits, then measure the input register. For a completely specified
/// affine function the outcome is the coefficient string with certainty.
std::uint32_t run_one_query(const PartialFunction& g, OracleVariant variant, Rng& rng);

/// Inverts the workspace readout 1 ^ c_n ^ parity(C).
inline int decode_cn(int workspace_bit, std::uint32_t c) {
  return 1 ^ workspace_bit ^ parity(c);
}

struct TwoQueryResult {
  std::uint32_t c = 0;
  int c_n = 0;
};

/// Two-query identification: H, oracle, H, oracle, measure the input
/// register; if the outcome indexes a don't-care entry the workspace gets a
/// corrective H before it is measured and decoded.
TwoQueryResult run_two_query(const PartialFunction& g, OracleVariant variant, Rng& rng);

struct VariantChoice {
  OracleVariant variant = OracleVariant::Plus;
  /// Set when a presumptive don't-care count is negative, i.e. the defined
  /// entries are inconsistent with any balanced completion.
  bool anomaly = false;
};

/// Picks the oracle from the presumptive counts d0 = N/2 - n0', d1 = N/2 - n1':
/// Plus when d0 < d1, Minus otherwise.
VariantChoice choose_variant(const PartialFunction& g);

/// Candidate key for votes and tie-breaking: coefficients-as-integer for
/// linear mode, (coefficients << 1) | c_n for affine mode.
std::uint64_t encode_candidate(Mode mode, std::uint32_t c, int c_n);

struct IdentificationResult {
  std::uint32_t c = 0;
  std::optional<int> c_n;
  std::map<std::uint64_t, int> votes;
  VariantUsed variant_used = VariantUsed::Both;
  int shots = 0;
  std::uint64_t seed = 0;
  bool anomaly = false;           // from choose_variant under the Auto policy
  bool ambiguous_half_dc = false; // d >= N/2: several completions fit equally
};

/// Repeats the chosen algorithm and reports the candidate with the most
/// votes; ties go to the lowest candidate encoding. BothWithVote runs
/// trials_per_oracle shots under each oracle, the other policies run
/// 2 * trials_per_oracle shots under one oracle. Shot s draws its own RNG
/// stream from (rng_seed, s), so the tally is independent of evaluation
/// order; `threads` only bounds the worker count.
IdentificationResult majority_vote(const PartialFunction& g, const RunConfig& config,
                                   int threads = 1);

}  // namespace qaffine
