#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "slalom/word.hpp"

namespace slalom {

enum class SyllableKind {
  BigPower,        // one term with |exponent| >= 2
  AlternatingRun,  // >= 2 consecutive terms, all exponent +1 or all -1
  Singleton,       // a remaining +-1 term
};

struct Syllable {
  SyllableKind kind;
  std::size_t first_term;  // index into the source word
  std::vector<Term> terms;
  std::uint64_t degree;    // sum of |exponent| over `terms`
};

struct SyllableDecomposition {
  FreeWord source;
  std::vector<Syllable> syllables;
};

enum class BoundaryCondition { TotallyReal, PerpendicularBisector };

/// Multiplicative constants of the two-sided estimate between the extremal
/// length and Lambda(w). Only their existence is known, so the defaults are
/// placeholders meant to be overridden from configuration.
class BoundConstants {
 public:
  BoundConstants() = default;
  BoundConstants(double c_minus, double c_plus);

  double c_minus() const noexcept { return c_minus_; }
  double c_plus() const noexcept { return c_plus_; }

 private:
  double c_minus_ = 0.1;
  double c_plus_ = 10.0;
};

enum class Exceptionality { Generic, Exceptional };

struct LambdaBounds {
  double lambda = 0.0;  // Lambda(w)
  double lower = 0.0;
  double upper = 0.0;
  bool exceptional = false;
};

/// Partitions a reduced word into syllables by a single left-to-right scan.
SyllableDecomposition decompose(const FreeWord& w);

/// Lambda(w) = sum over syllables of log(1 + degree), natural log.
double lambda_invariant(const FreeWord& w);
double lambda_invariant(const SyllableDecomposition& d);

/// Totally real: exceptional iff w is a power of one generator (identity
/// included). Perpendicular bisector: exceptional iff every exponent is +1,
/// or every exponent is -1 (identity included).
Exceptionality classify_exceptional(const FreeWord& w, BoundaryCondition bc);

/// Exceptional words get (Lambda, 0, 0, true): their extremal length is 0.
LambdaBounds lambda_bounds(const FreeWord& w, BoundaryCondition bc, const BoundConstants& k);

std::string_view kind_name(SyllableKind kind) noexcept;
std::string_view boundary_name(BoundaryCondition bc) noexcept;
/// Accepts "tr" and "pb". Throws DomainError otherwise.
BoundaryCondition parse_boundary(std::string_view text);

}  // namespace slalom
