#include "slalom/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "slalom/errors.hpp"

namespace slalom {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) {
    throw OverflowError("exponent overflow while merging terms");
  }
  return sum;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

FreeWord FreeWord::from_reduced(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == 0) {
      throw DomainError("reduced word contains a zero exponent");
    }
    if (i > 0 && terms[i].gen == terms[i - 1].gen) {
      throw DomainError("reduced word repeats a generator in consecutive terms");
    }
  }
  return FreeWord(std::move(terms));
}

FreeWord reduce(std::span<const Term> raw) {
  // A stack gives the fixed point in one pass: after a cancellation the new
  // top is compared against the next incoming term.
  std::vector<Term> stack;
  stack.reserve(raw.size());
  for (const Term& t : raw) {
    if (t.exponent == 0) continue;
    if (!stack.empty() && stack.back().gen == t.gen) {
      stack.back().exponent = checked_add(stack.back().exponent, t.exponent);
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(t);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord parse_word(std::string_view text) {
  std::vector<Term> raw;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t token_start = pos;
    if (text[pos] != 'a' || pos + 1 >= n || (text[pos + 1] != '1' && text[pos + 1] != '2')) {
      throw ParseError("expected generator a1 or a2", token_start + 1);
    }
    const Generator gen = text[pos + 1] == '1' ? Generator::A1 : Generator::A2;
    pos += 2;
    std::int64_t exponent = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      const std::size_t exp_start = pos;
      const char* first = text.data() + pos;
      const char* last = text.data() + n;
      // from_chars rejects a leading '+', which the grammar allows.
      if (first != last && *first == '+') {
        ++first;
        if (first != last && *first == '-') throw ParseError("malformed exponent", exp_start + 1);
      }
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("exponent out of 64-bit range", exp_start + 1);
      }
      if (ec != std::errc() || ptr == first) {
        throw ParseError("malformed exponent", exp_start + 1);
      }
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (pos < n && !is_space(text[pos])) {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
    }
    raw.push_back({gen, exponent});
  }
  return reduce(raw);
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  std::vector<Term> raw;
  raw.reserve(u.size() + v.size());
  raw.insert(raw.end(), u.terms().begin(), u.terms().end());
  raw.insert(raw.end(), v.terms().begin(), v.terms().end());
  return reduce(raw);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Term> out;
  out.reserve(u.size());
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    if (it->exponent == std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("cannot negate exponent INT64_MIN");
    }
    out.push_back({it->gen, -it->exponent});
  }
  return FreeWord::from_reduced(std::move(out));
}

std::string_view generator_name(Generator g) noexcept { return g == Generator::A1 ? "a1" : "a2"; }

std::string format_word(const FreeWord& u) {
  std::string out;
  for (const Term& t : u.terms()) {
    if (!out.empty()) out += ' ';
    out += generator_name(t.gen);
    if (t.exponent != 1) {
      out += '^';
      out += std::to_string(t.exponent);
    }
  }
  return out;
}

}  // namespace slalom
