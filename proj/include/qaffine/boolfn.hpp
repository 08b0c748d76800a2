#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qaffine/common.hpp"

namespace qaffine {

// Bit convention used throughout the project: input index i encodes the
// vector (x_0, ..., x_{n-1}) big-endian, with x_0 as the most significant
// bit, i.e. x_j = (i >> (n-1-j)) & 1. Coefficient strings C = <c_0...c_{n-1}>
// use the same encoding, so C-as-integer reads the bit string left to right.

/// XOR of all bits of v.
inline int parity(std::uint32_t v) { return std::popcount(v) & 1; }

/// An affine Boolean function c_0 x_0 ^ ... ^ c_{n-1} x_{n-1} ^ c_n.
/// affinity = false makes it linear.
struct AffineSpec {
  int n = 1;
  std::uint32_t coeffs = 0;  // c_j at bit (n-1-j)
  bool affinity = false;     // c_n

  AffineSpec() = default;
  AffineSpec(int n_inputs, std::uint32_t coefficient_bits, bool affinity_bit);

  int coeff(int j) const { return (coeffs >> (n - 1 - j)) & 1u; }

  /// Order/vote key: coefficients-as-integer first, then the affinity bit.
  std::uint64_t encoding() const {
    return (static_cast<std::uint64_t>(coeffs) << 1) | (affinity ? 1u : 0u);
  }

  bool operator==(const AffineSpec&) const = default;
};

int eval_affine(const AffineSpec& spec, std::uint32_t x);

/// Completely specified Boolean function as 2^n output bits.
struct TruthTable {
  int n = 1;
  std::vector<std::uint8_t> outputs;  // outputs[i] = f(i)

  std::uint32_t size() const { return static_cast<std::uint32_t>(outputs.size()); }
  int ones_count() const;
};

TruthTable truth_table(const AffineSpec& spec);

enum class Ternary : std::uint8_t { Zero, One, DontCare };

/// Incompletely defined Boolean function. Immutable after construction; the
/// defined/don't-care counts are derived once and kept consistent.
class PartialFunction {
public:
  PartialFunction(int n, std::vector<Ternary> entries);

  static PartialFunction from_table(const TruthTable& table);

  int n() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(entries_.size()); }
  Ternary entry(std::uint32_t i) const { return entries_[i]; }
  const std::vector<Ternary>& entries() const { return entries_; }
  bool is_dont_care(std::uint32_t i) const { return entries_[i] == Ternary::DontCare; }

  int n0_prime() const { return n0_prime_; }
  int n1_prime() const { return n1_prime_; }
  int d() const { return d_; }

  bool operator==(const PartialFunction& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

private:
  int n_;
  std::vector<Ternary> entries_;
  int n0_prime_ = 0;
  int n1_prime_ = 0;
  int d_ = 0;
};

/// Replaces the entries at dc_indices with don't-cares.
PartialFunction mask(const TruthTable& table, const std::vector<std::uint32_t>& dc_indices);

/// Don't-care counts split by the value the ground-truth completion assigns.
struct DcSplit {
  int d0 = 0;
  int d1 = 0;
};

DcSplit dc_split(const PartialFunction& partial, const TruthTable& truth);

/// Every affine function that agrees with `partial` on its defined entries,
/// ordered by (coefficients-as-integer, affinity). Exhaustive over all
/// 2^(n+1) candidates; n is capped at kMaxSearchInputs.
std::vector<AffineSpec> consistent_affine_completions(const PartialFunction& partial);

/// Function-file format (.bfn): a header line `n=<decimal>` followed by a
/// line of 2^n characters over {0,1,-}. Lines starting with '#' and blank
/// lines are ignored. Entry i of the string is the value at input index i.
PartialFunction parse_function_file(std::string_view text);
std::string write_function_file(const PartialFunction& partial);

/// Renders an input/coefficient index as the bit string "b_0 b_1 ... b_{n-1}".
std::string to_bit_string(std::uint32_t index, int n);

}  // namespace qaffine
