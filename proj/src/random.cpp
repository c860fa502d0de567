#include "slalom/random.hpp"

#include "slalom/errors.hpp"

namespace slalom {

FreeWord random_reduced_word(std::mt19937_64& rng, std::size_t max_len, std::int64_t max_exp) {
  if (max_exp < 1) throw DomainError("max_exp must be positive");
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::int64_t> exp_dist(1, max_exp);
  std::bernoulli_distribution coin(0.5);
  const std::size_t len = len_dist(rng);
  std::vector<Term> terms;
  terms.reserve(len);
  Generator g = coin(rng) ? Generator::A1 : Generator::A2;
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t magnitude = exp_dist(rng);
    terms.push_back({g, coin(rng) ? magnitude : -magnitude});
    g = g == Generator::A1 ? Generator::A2 : Generator::A1;
  }
  return FreeWord::from_reduced(std::move(terms));
}

BraidWord random_braid(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<BraidLetter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int code = letter(rng);
    letters.push_back({code < 2 ? BraidGenerator::Sigma1 : BraidGenerator::Sigma2, code % 2 == 0 ? 1 : -1});
  }
  return BraidWord(std::move(letters));
}

BraidWord random_pure_braid(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  for (;;) {
    BraidWord b = random_braid(rng, len_dist(rng));
    if (is_pure(b)) return b;
  }
}

}  // namespace slalom
