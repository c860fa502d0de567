#include "slalom/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

constexpr std::size_t kMaxBraidLetters = 10'000'000;
// Radius of the turning pair at its narrowest, in units of slot spacing.
constexpr double kPinchedRadius = 0.35;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t slot_of(BraidGenerator g) { return g == BraidGenerator::Sigma1 ? 0 : 1; }

}  // namespace

BraidWord::BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {
  for (const BraidLetter& l : letters_) {
    if (l.sign != 1 && l.sign != -1) throw DomainError("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->sign});
  return BraidWord(std::move(out));
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<BraidLetter> stack;
  for (const BraidLetter& l : letters_) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(std::move(stack));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<BraidLetter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(std::move(out));
}

BraidWord parse_braid(std::string_view text) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t token_start = pos;
    if (text[pos] != 's' || pos + 1 >= n || (text[pos + 1] != '1' && text[pos + 1] != '2')) {
      throw ParseError("expected braid generator s1 or s2", token_start + 1);
    }
    const BraidGenerator gen = text[pos + 1] == '1' ? BraidGenerator::Sigma1 : BraidGenerator::Sigma2;
    pos += 2;
    std::int64_t exponent = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      const std::size_t exp_start = pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + n;
      if (first != last && *first == '+') {
        ++first;
        if (first != last && *first == '-') throw ParseError("malformed exponent", exp_start + 1);
      }
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first) throw ParseError("malformed exponent", exp_start + 1);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (exponent > static_cast<std::int64_t>(kMaxBraidLetters) ||
          exponent < -static_cast<std::int64_t>(kMaxBraidLetters)) {
        throw ParseError("exponent too large", exp_start + 1);
      }
    }
    if (pos < n && !is_space(text[pos])) {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
    }
    const std::size_t count = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
    if (letters.size() + count > kMaxBraidLetters) throw ParseError("braid word too long", token_start + 1);
    letters.insert(letters.end(), count, BraidLetter{gen, exponent < 0 ? -1 : 1});
  }
  return BraidWord(std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string out;
  const auto& letters = b.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i + 1;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const auto power = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += letters[i].gen == BraidGenerator::Sigma1 ? "s1" : "s2";
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

BraidWord full_twist(int m) {
  const BraidLetter s1{BraidGenerator::Sigma1, m < 0 ? -1 : 1};
  const BraidLetter s2{BraidGenerator::Sigma2, m < 0 ? -1 : 1};
  std::vector<BraidLetter> out;
  for (int rep = 0; rep < 2 * std::abs(m); ++rep) {
    out.push_back(s1);
    out.push_back(s2);
    out.push_back(s1);
  }
  return BraidWord(std::move(out));
}

Permutation permutation(const BraidWord& b) {
  std::array<int, 3> slot_strand{0, 1, 2};
  for (const BraidLetter& l : b.letters()) {
    const std::size_t a = slot_of(l.gen);
    std::swap(slot_strand[a], slot_strand[a + 1]);
  }
  Permutation perm{};
  for (int slot = 0; slot < 3; ++slot) perm[static_cast<std::size_t>(slot_strand[static_cast<std::size_t>(slot)])] = slot;
  return perm;
}

bool is_pure(const BraidWord& b) { return permutation(b) == Permutation{0, 1, 2}; }

double StrandPaths::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples(); ++j) {
    best = std::min({best, std::abs(strands[0][j] - strands[1][j]), std::abs(strands[0][j] - strands[2][j]),
                     std::abs(strands[1][j] - strands[2][j])});
  }
  return best;
}

StrandPaths braid_to_strands(const BraidWord& b, int samples_per_crossing) {
  if (samples_per_crossing < 16) throw DomainError("samples_per_crossing must be at least 16");
  if (!is_pure(b)) throw DomainError("braid is not pure; its strands do not return to their start");

  StrandPaths out;
  std::array<Complex, 3> position = kBraidBasePoint;
  std::array<std::size_t, 3> slot_strand{0, 1, 2};
  for (std::size_t s = 0; s < 3; ++s) {
    out.strands[s].reserve(1 + b.size() * static_cast<std::size_t>(samples_per_crossing));
    out.strands[s].push_back(position[s]);
  }

  for (const BraidLetter& l : b.letters()) {
    const std::size_t a = slot_of(l.gen);
    const std::size_t left = slot_strand[a];
    const std::size_t right = slot_strand[a + 1];
    const Complex mid = 0.5 * (kBraidBasePoint[a] + kBraidBasePoint[a + 1]);
    const double half_gap = 0.5 * std::abs(kBraidBasePoint[a + 1] - kBraidBasePoint[a]);
    for (int j = 1; j <= samples_per_crossing; ++j) {
      const double s = static_cast<double>(j) / samples_per_crossing;
      if (j == samples_per_crossing) {
        position[left] = kBraidBasePoint[a + 1];
        position[right] = kBraidBasePoint[a];
      } else {
        const double radius = half_gap * (1.0 - 2.0 * (0.5 - kPinchedRadius) * std::sin(std::numbers::pi * s));
        const Complex arm = std::polar(radius, l.sign * std::numbers::pi * s);
        position[right] = mid + arm;
        position[left] = mid - arm;
      }
      for (std::size_t k = 0; k < 3; ++k) out.strands[k].push_back(position[k]);
    }
    std::swap(slot_strand[a], slot_strand[a + 1]);
  }
  return out;
}

PolyPath cross_ratio_curve(const StrandPaths& s) {
  const std::size_t n = s.samples();
  if (n == 0 || s.strands[1].size() != n || s.strands[2].size() != n) {
    throw DomainError("strand paths must share a nonempty parameter grid");
  }
  std::vector<Complex> points;
  points.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex g1 = s.strands[0][j];
    const Complex g2 = s.strands[1][j];
    const Complex g3 = s.strands[2][j];
    const Complex denom = g3 - g1;
    if (std::abs(denom) < 1e-9) throw DomainError("strands 1 and 3 collide");
    const Complex c = 2.0 * (g2 - g1) / denom - 1.0;
    if (points.empty() || points.back() != c) points.push_back(c);
  }
  return PolyPath::make(std::move(points), Plane::Punctured);
}

FreeWord cstar(const BraidWord& b, const BraidPipelineOptions& options) {
  return curve_to_word(cross_ratio_curve(braid_to_strands(b, options.samples_per_crossing)), options.lift);
}

LambdaBounds braid_invariant(const BraidWord& b, BoundaryCondition bc, const BoundConstants& k,
                             const BraidPipelineOptions& options) {
  return lambda_bounds(cstar(b, options), bc, k);
}

}  // namespace slalom
