#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcmgate/weights.hpp"

namespace pcmgate {

/// Entries within this tolerance of the exact reciprocal product
/// m_ij * m_ji = 1 count as reciprocal.
inline constexpr double kReciprocityTol = 1e-12;

/// Tolerance for the unit diagonal when accepting externally supplied
/// matrices.
inline constexpr double kDiagonalTol = 1e-9;

/// Square positive matrix of pairwise ratio estimates: entry (i, j) estimates
/// weight_i / weight_j. The diagonal carries no information and stays 1.
class Pcm {
 public:
  /// Row-major entries. Throws DomainError for nonpositive or non-finite
  /// values, ContractError for a bad shape, FormatError when a diagonal
  /// entry strays from 1 by more than kDiagonalTol.
  Pcm(int n, std::vector<double> entries);

  int size() const noexcept { return n_; }
  double at(int i, int j) const noexcept { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  int n_;
  std::vector<double> entries_;
};

enum class PerturbationMode : std::uint8_t {
  PlusMinus,      // every comparison moves by +delta or -delta
  PlusMinusZero,  // a comparison may also stay unchanged
};

/// How a consistent matrix gets noised: each governed entry becomes
/// m * (1 + g * delta) for a per-entry sign g.
struct PerturbationConfig {
  double delta = 0.0;  // relative estimation error, in [0, 1)
  PerturbationMode mode = PerturbationMode::PlusMinus;
  bool half_matrix = true;  // perturb the upper triangle, mirror exact reciprocals

  /// Throws DomainError when delta lies outside [0, 1). A delta of 1 or more
  /// would let a "-" sign drive a ratio to zero or below.
  void validate() const;
};

/// Number of perturbation genes for an n-alternative matrix:
/// n(n-1)/2 in half-matrix layout, n(n-1) when every off-diagonal entry
/// is perturbed independently.
std::size_t pattern_length(int n, bool half_matrix);

/// Per-entry perturbation directions; the genome of the worst-case search.
/// Genes follow the row-major layout of pattern_length: upper-triangle pairs
/// (i < j) in half-matrix mode, all off-diagonal entries otherwise.
class SignPattern {
 public:
  SignPattern() = default;
  /// Genes must be -1, 0 or +1.
  explicit SignPattern(std::vector<std::int8_t> genes);

  /// Parses a string of '+', '-' and '0' characters.
  static SignPattern parse(std::string_view text);
  std::string to_string() const;

  const std::vector<std::int8_t>& genes() const noexcept { return genes_; }
  std::size_t size() const noexcept { return genes_.size(); }
  bool operator==(const SignPattern& other) const noexcept { return genes_ == other.genes_; }

 private:
  std::vector<std::int8_t> genes_;
};

/// Perfectly consistent matrix of the given weights: entry (i, j) = w_i / w_j.
Pcm build_perfect_pcm(const Weights& w);

/// Applies the sign pattern at the configured perturbation strength.
/// In half-matrix mode the lower triangle is rebuilt as exact reciprocals of
/// the perturbed upper triangle; the diagonal is never touched.
/// Throws ContractError on a length or mode mismatch (PlusMinus admits no
/// zero gene), DomainError for delta outside [0, 1).
Pcm apply_sign_perturbation(const Pcm& pcm, const PerturbationConfig& cfg,
                            const SignPattern& pattern);

/// True iff |m_ij * m_ji - 1| <= kReciprocityTol for every pair.
bool check_reciprocity(const Pcm& pcm);

}  // namespace pcmgate
