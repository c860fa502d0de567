#include "slalom/syllables.hpp"

#include <algorithm>
#include <cmath>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

std::uint64_t magnitude(std::int64_t n) {
  // Well defined for INT64_MIN as well.
  return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

bool is_unit(const Term& t) { return t.exponent == 1 || t.exponent == -1; }

}  // namespace

BoundConstants::BoundConstants(double c_minus, double c_plus) : c_minus_(c_minus), c_plus_(c_plus) {
  if (!(c_minus > 0.0) || !(c_plus >= c_minus) || !std::isfinite(c_plus)) {
    throw DomainError("bound constants must satisfy 0 < c_minus <= c_plus < inf");
  }
}

SyllableDecomposition decompose(const FreeWord& w) {
  const auto& terms = w.terms();
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < terms.size()) {
    if (!is_unit(terms[i])) {
      out.push_back({SyllableKind::BigPower, i, {terms[i]}, magnitude(terms[i].exponent)});
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) ++j;
    const std::size_t run = j - i;
    Syllable s{run >= 2 ? SyllableKind::AlternatingRun : SyllableKind::Singleton, i,
               {terms.begin() + static_cast<std::ptrdiff_t>(i), terms.begin() + static_cast<std::ptrdiff_t>(j)},
               run};
    out.push_back(std::move(s));
    i = j;
  }
  return {w, std::move(out)};
}

double lambda_invariant(const SyllableDecomposition& d) {
  double sum = 0.0;
  for (const Syllable& s : d.syllables) sum += std::log1p(static_cast<double>(s.degree));
  return sum;
}

double lambda_invariant(const FreeWord& w) { return lambda_invariant(decompose(w)); }

Exceptionality classify_exceptional(const FreeWord& w, BoundaryCondition bc) {
  const auto& terms = w.terms();
  bool exceptional = false;
  if (bc == BoundaryCondition::TotallyReal) {
    exceptional = terms.size() <= 1;
  } else {
    exceptional = terms.empty() ||
                  ((terms.front().exponent == 1 || terms.front().exponent == -1) &&
                   std::all_of(terms.begin(), terms.end(),
                               [&](const Term& t) { return t.exponent == terms.front().exponent; }));
  }
  return exceptional ? Exceptionality::Exceptional : Exceptionality::Generic;
}

LambdaBounds lambda_bounds(const FreeWord& w, BoundaryCondition bc, const BoundConstants& k) {
  const double lambda = lambda_invariant(w);
  if (classify_exceptional(w, bc) == Exceptionality::Exceptional) {
    return {lambda, 0.0, 0.0, true};
  }
  return {lambda, k.c_minus() * lambda, k.c_plus() * lambda, false};
}

std::string_view kind_name(SyllableKind kind) noexcept {
  switch (kind) {
    case SyllableKind::BigPower:
      return "big_power";
    case SyllableKind::AlternatingRun:
      return "alternating_run";
    case SyllableKind::Singleton:
      return "singleton";
  }
  return "unknown";
}

std::string_view boundary_name(BoundaryCondition bc) noexcept {
  return bc == BoundaryCondition::TotallyReal ? "tr" : "pb";
}

BoundaryCondition parse_boundary(std::string_view text) {
  if (text == "tr") return BoundaryCondition::TotallyReal;
  if (text == "pb") return BoundaryCondition::PerpendicularBisector;
  throw DomainError("boundary must be 'tr' or 'pb', got '" + std::string(text) + "'");
}

}  // namespace slalom
