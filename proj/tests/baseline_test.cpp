#include "gtest/gtest.h"
#include "wordsep/baseline.hpp"

using namespace wordsep;

namespace {

// Plain brute force: every transition table on n states, no canonical
// ordering or pruning.
bool brute_force_separates(const Word& x, const Word& y, std::size_t n) {
  const std::size_t k = static_cast<std::size_t>(x.alphabet_size());
  Dfa d{n, x.alphabet_size(), std::vector<std::size_t>(n * k, 0)};
  while (true) {
    if (d.separates(x, y)) return true;
    std::size_t i = 0;
    while (i < d.table.size() && ++d.table[i] == n) d.table[i++] = 0;
    if (i == d.table.size()) return false;
  }
}

std::optional<std::size_t> brute_force_min(const Word& x, const Word& y, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n)
    if (brute_force_separates(x, y, n)) return n;
  return std::nullopt;
}

}  // namespace

TEST(MinDfa, Examples) {
  EXPECT_EQ(min_separating_dfa_size(parse_word("ab"), parse_word("ba")), 2u);
  EXPECT_EQ(min_separating_dfa_size(parse_word("a"), parse_word("aa")), 2u);
  EXPECT_EQ(min_separating_dfa_size(parse_word("aaaa"), parse_word("aaaaaaaaaaaaaaaa"), 4), std::nullopt);
  EXPECT_THROW(min_separating_dfa_size(parse_word("ab"), parse_word("ab")), InvalidArgument);
}

TEST(MinDfa, WitnessSeparates) {
  const Word x = parse_word("abba"), y = parse_word("baab");
  const auto d = find_separating_dfa(x, y, *min_separating_dfa_size(x, y));
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(d->separates(x, y));
  EXPECT_FALSE(find_separating_dfa(x, y, 0).has_value());
}

TEST(MinDfa, AgreesWithBruteForce) {
  const auto words = all_words(2, 4);
  for (const auto& x : words)
    for (const auto& y : words) {
      if (!(x < y)) continue;
      ASSERT_EQ(min_separating_dfa_size(x, y, 3), brute_force_min(x, y, 3)) << to_string(x) << " " << to_string(y);
    }
}

TEST(MinDfa, AgreesWithBruteForceAtFourStates) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"aaaaa", "aaaaaaaaaaaaaaaaa"}, {"abbaab", "baabba"}, {"aabbab", "abaabb"}};
  for (const auto& [x, y] : pairs)
    EXPECT_EQ(min_separating_dfa_size(parse_word(x), parse_word(y), 4), brute_force_min(parse_word(x), parse_word(y), 4))
        << x << " " << y;
}
