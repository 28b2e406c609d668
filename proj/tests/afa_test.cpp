#include "gtest/gtest.h"
#include "wordsep/afa.hpp"

using namespace wordsep;

namespace {

Word unary(long n) { return Word(std::vector<int>(static_cast<std::size_t>(n), 0), 1); }

// The word whose encoding is e(x) + 1 in the same radix, if one exists.
std::optional<Word> successor(const Word& x) {
  const int radix = std::max(2, x.alphabet_size());
  std::vector<int> s(x.begin(), x.end());
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] + 1 < radix) {
      ++s[i];
      return Word(s, x.alphabet_size());
    }
    s[i] = 0;
  }
  return std::nullopt;  // carry into the leading 1
}

// |1 - k i| / (|k i| + |1 - k i|), computed directly.
Rational bounded_oracle(const Integer& i, long k) {
  const Rational ki = Rational(k * i);
  const Rational rest = 1 - ki;
  return Rational(abs(rest) / (abs(ki) + abs(rest)));
}

}  // namespace

TEST(Subtraction, ExactOnUnaryPairs) {
  for (long d = 0; d <= 5; ++d)
    for (long t = 1; t <= 5; ++t) {
      const auto m = subtraction_machine(d, t);
      EXPECT_EQ(run(m, unary(d)).accept_probability, 1);
      EXPECT_EQ(run(m, unary(d + t)).accept_probability, 0);
      EXPECT_EQ(run(m, unary(d)).final_state, (Vector<Rational>{1, 0}));
    }
}

TEST(Subtraction, StepsByOneOverT) {
  const auto m = subtraction_machine(2, 3);
  EXPECT_EQ(m.initial(), (Vector<Rational>{fraction(5, 3), fraction(-2, 3)}));
  EXPECT_EQ(trace(m, unary(1))[1], (Vector<Rational>{fraction(4, 3), fraction(-1, 3)}));
  EXPECT_THROW(subtraction_machine(1, 0), InvalidArgument);
}

TEST(Subtraction, CountsOnlyWitnessSymbol) {
  const auto m = subtraction_machine(1, 1, 2, 1);
  EXPECT_EQ(run(m, parse_word("aab")).accept_probability, 1);
  EXPECT_EQ(run(m, parse_word("abb")).accept_probability, 0);
}

TEST(Afa, RejectsNonAffineInput) {
  const Matrix<Rational> bad(2, 2, {1, 1, 1, 0});
  EXPECT_THROW(Afa({bad}, Matrix<Rational>::identity(2), {1, 0}, {0}), InvalidArgument);
  EXPECT_THROW(Afa({Matrix<Rational>::identity(2)}, bad, {1, 0}, {0}), InvalidArgument);
  EXPECT_THROW(Afa({Matrix<Rational>::identity(2)}, Matrix<Rational>::identity(2), {1, 1}, {0}), InvalidArgument);
  EXPECT_THROW(Afa({Matrix<Rational>::identity(3)}, Matrix<Rational>::identity(2), {1, 0}, {0}), DimensionError);
}

TEST(Encoding, TraceHoldsPrefixEncoding) {
  const Word x = parse_word("abba");
  const auto m = encoding_machine(x, parse_word("baab"));
  const auto states = trace(m, x);
  ASSERT_EQ(states.size(), x.size() + 1);
  for (std::size_t j = 0; j <= x.size(); ++j) {
    const Word prefix(std::vector<int>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j)), 2);
    // "1" followed by the prefix digits, evaluated by hand.
    Integer e = 1;
    for (int s : prefix) e = 2 * e + s;
    EXPECT_EQ(states[j][0], Rational(e));
    EXPECT_EQ(states[j][1], Rational(1 - e));
  }
}

TEST(Encoding, SeparatesAllShortPairs) {
  for (int k : {2, 3}) {
    const auto words = all_words(k, k == 2 ? 4 : 3);
    for (const auto& x : words)
      for (const auto& y : words) {
        if (x == y) continue;
        const auto m = encoding_machine(x, y);
        ASSERT_EQ(run(m, x).accept_probability, 1) << to_string(x) << " " << to_string(y);
        ASSERT_EQ(run(m, y).accept_probability, 0) << to_string(x) << " " << to_string(y);
      }
  }
}

TEST(Encoding, EqualWordsRejected) {
  EXPECT_THROW(encoding_machine(parse_word("ab"), parse_word("ab")), InvalidArgument);
}

TEST(Bounded, MatchesClosedForm) {
  const Word x = parse_word("bab");
  const Integer ex = encode(x, 2);
  for (long k : {1L, 3L, 10L}) {
    const auto m = bounded_machine(x, k);
    EXPECT_EQ(run(m, x).accept_probability, 1);
    const Rational bound = fraction(k + 1, 2 * k + 1);
    for (const auto& z : all_words(2, 6)) {
      if (z == x) continue;
      const Rational p = run(m, z).accept_probability;
      ASSERT_EQ(p, bounded_oracle(ex - encode(z, 2), k));
      ASSERT_LE(p, bound);
    }
    EXPECT_EQ(run(m, *successor(x)).accept_probability, bound);
  }
}

TEST(ThreeState, FinalStateAndBound) {
  const Word x = parse_word("abba");
  const Integer ex = encode(x, 2);
  for (long k : {1L, 2L, 100L}) {
    const auto m = three_state_machine(x, k);
    ASSERT_EQ(m.states(), 3u);
    EXPECT_EQ(run(m, x).accept_probability, 1);
    for (const auto& z : all_words(2, 6)) {
      const Rational i(ex - encode(z, 2));
      ASSERT_EQ(run(m, z).final_state, (Vector<Rational>{Rational(-k * i), Rational((k + 1) * i), Rational(1 - i)}));
      if (z != x) ASSERT_LE(run(m, z).accept_probability, fraction(2, 2 * k + 1));
    }
    EXPECT_EQ(run(m, *successor(x)).accept_probability, fraction(2, 2 * k + 3));
  }
}

TEST(ThreeState, ScaleHundredBound) {
  const auto m = three_state_machine(parse_word("a"), 100);
  const auto r = evaluate_separation(m, "afa-3state", {parse_word("a")}, {parse_word("b"), parse_word("aa")},
                                     ModeClaim::bounded(fraction(2, 201)));
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.x_side_accepted);
}

TEST(SingletonVsSet, RejectsEverySetMember) {
  const Word x = parse_word("abab");
  const std::vector<Word> ys{parse_word("baba"), parse_word("abba"), parse_word("aabb")};
  const auto m = singleton_vs_set_machine(x, ys);
  EXPECT_EQ(m.states(), 8u);
  EXPECT_EQ(run(m, x).accept_probability, 1);
  for (const auto& y : ys) EXPECT_EQ(run(m, y).accept_probability, 0);
  EXPECT_THROW(singleton_vs_set_machine(x, {x}), InvalidArgument);
  EXPECT_THROW(singleton_vs_set_machine(x, {}), InvalidArgument);
}

TEST(SetMachine, MembersAcceptedOthersBounded) {
  const std::vector<Word> xs{parse_word("ab"), parse_word("ba"), parse_word("bb")};
  const auto plain = set_machine(xs);
  const auto sharp = set_machine(xs, 4, true);
  EXPECT_EQ(plain.states(), 8u);
  for (const auto& x : xs) {
    EXPECT_EQ(run(plain, x).accept_probability, 1);
    EXPECT_EQ(run(sharp, x).accept_probability, 1);
  }
  for (const auto& z : all_words(2, 5)) {
    if (std::find(xs.begin(), xs.end(), z) != xs.end()) continue;
    ASSERT_LE(run(plain, z).accept_probability, fraction(2, 3));
    ASSERT_LE(run(sharp, z).accept_probability, fraction(2, 9));
  }
}

TEST(SetMachine, SingletonSharpenedIsThreeState) {
  const auto m = set_machine({parse_word("ab")}, 5, true);
  EXPECT_EQ(m.states(), 3u);
  EXPECT_THROW(set_machine({}), InvalidArgument);
  EXPECT_THROW(set_machine({parse_word("ab")}, 0), InvalidArgument);
}

TEST(AfaProperty, TraceStaysAffine) {
  const auto m = set_machine({parse_word("aab"), parse_word("bba")}, 2, true);
  for (const auto& z : all_words(2, 5)) {
    for (const auto& v : trace(m, z)) ASSERT_TRUE(is_affine_state(v));
    ASSERT_TRUE(is_affine_state(run(m, z).final_state));
  }
}
