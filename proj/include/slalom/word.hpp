#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slalom {

/// Free generators of pi_1(C \ {-1, 1}, 0). A1 loops once counterclockwise
/// around -1 inside the left half-plane, A2 around +1 inside the right one.
enum class Generator { A1, A2 };

struct Term {
  Generator gen;
  std::int64_t exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A reduced word a_{j1}^{n1} a_{j2}^{n2} ... : no zero exponents and no two
/// consecutive terms on the same generator. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  /// Adopts `terms` after checking that they are already reduced.
  static FreeWord from_reduced(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_identity() const noexcept { return terms_.empty(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(std::vector<Term> terms) : terms_(std::move(terms)) {}

  friend FreeWord reduce(std::span<const Term> raw);

  std::vector<Term> terms_;
};

/// Free reduction: merges equal-generator neighbours and drops zero
/// exponents until nothing changes. Throws OverflowError if a merged
/// exponent leaves the int64 range.
FreeWord reduce(std::span<const Term> raw);

/// Parses whitespace separated `a1` / `a2` tokens with optional `^<int>`.
/// Throws ParseError carrying the 1-based column of the offending token.
FreeWord parse_word(std::string_view text);

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);

/// Canonical text form, e.g. "a2^-1 a1". Identity formats as "".
std::string format_word(const FreeWord& u);

std::string_view generator_name(Generator g) noexcept;

}  // namespace slalom
