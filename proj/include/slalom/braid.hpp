#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "slalom/covering.hpp"
#include "slalom/syllables.hpp"
#include "slalom/word.hpp"

namespace slalom {

enum class BraidGenerator { Sigma1, Sigma2 };

struct BraidLetter {
  BraidGenerator gen;
  int sign;  // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A 3-braid as a sequence of unit letters sigma_i^{+-1}.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters);

  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  /// Cancels adjacent inverse letters.
  BraidWord freely_reduced() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidLetter> letters_;
};

/// Tokens `s1` / `s2` with optional `^<int>`; exponents are expanded into
/// unit letters. Throws ParseError.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

/// (sigma_1 sigma_2 sigma_1)^{2m}, the m-th power of the full twist.
BraidWord full_twist(int m);

/// perm[i] is the final slot of the strand starting in slot i (0-based).
using Permutation = std::array<int, 3>;
Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

inline constexpr std::array<Complex, 3> kBraidBasePoint{Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};

/// Three strand trajectories over a common parameter grid, indexed by
/// strand (not slot).
struct StrandPaths {
  std::array<std::vector<Complex>, 3> strands;

  std::size_t samples() const noexcept { return strands[0].size(); }
  /// Smallest distance between two strands over all grid points.
  double min_pairwise_distance() const;
};

/// Geometric realisation of a pure braid: each letter turns the two strands
/// in slots i, i+1 half way around their midpoint (counterclockwise for
/// +1). Throws DomainError for non-pure input.
StrandPaths braid_to_strands(const BraidWord& b, int samples_per_crossing);

/// Pointwise 2 (g2 - g1) / (g3 - g1) - 1.
PolyPath cross_ratio_curve(const StrandPaths& s);

struct BraidPipelineOptions {
  int samples_per_crossing = 64;
  LiftOptions lift;
};

/// Image of a pure braid in pi_1(C \ {-1, 1}, 0).
FreeWord cstar(const BraidWord& b, const BraidPipelineOptions& options = {});

LambdaBounds braid_invariant(const BraidWord& b, BoundaryCondition bc, const BoundConstants& k,
                             const BraidPipelineOptions& options = {});

}  // namespace slalom
