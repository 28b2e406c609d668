#pragma once

// The free group F2 = <a, b>: reduced words, the element x y^-1 attached to
// a pair of positive words, and membership in the first two terms of the
// derived series.
//
// Second-derived membership goes through Reidemeister-Schreier rewriting
// over the transversal { a^i b^j } of F2 / [F2, F2] ~ Z^2. The Schreier
// generators
//
//     g(i, j) = a^i b^j a b^-j a^-(i+1),   j != 0
//
// form a free basis of [F2, F2], so an element of [F2, F2] lies in the
// second derived subgroup iff each g(i, j) occurs with net exponent zero.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordsep/error.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

struct Letter {
  int generator;  // 0 = a, 1 = b
  int exponent;   // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;

  // Free reduction of an arbitrary letter sequence.
  static FreeWord reduce(std::span<const Letter> raw) {
    FreeWord w;
    for (const Letter& l : raw) {
      if ((l.generator != 0 && l.generator != 1) ||
          (l.exponent != 1 && l.exponent != -1))
        throw InvalidArgument("free group letter out of range");
      if (!w.letters_.empty() && w.letters_.back() == l.inverse())
        w.letters_.pop_back();
      else
        w.letters_.push_back(l);
    }
    return w;
  }

  static FreeWord reduce(const std::vector<Letter>& raw) {
    return reduce(std::span<const Letter>(raw));
  }

  static FreeWord generator(int g, int exponent = 1) {
    return reduce(std::vector<Letter>{{g, exponent}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    std::vector<Letter> raw = u.letters_;
    raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
    return reduce(raw);
  }

  // (exponent sum of a, exponent sum of b)
  std::pair<std::int64_t, std::int64_t> degrees() const {
    std::int64_t da = 0;
    std::int64_t db = 0;
    for (const Letter& l : letters_) (l.generator == 0 ? da : db) += l.exponent;
    return {da, db};
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

inline FreeWord power(const FreeWord& u, int n) {
  FreeWord base = n < 0 ? u.inverse() : u;
  FreeWord out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

// "a b A B"; capitals are inverses, "1" is the identity.
inline std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    const char c = static_cast<char>('a' + l.generator);
    out.push_back(l.exponent > 0 ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return out;
}

inline FreeWord parse_free_word(std::string_view text) {
  std::vector<Letter> raw;
  for (char c : text) {
    switch (c) {
      case 'a': raw.push_back({0, 1}); break;
      case 'b': raw.push_back({1, 1}); break;
      case 'A': raw.push_back({0, -1}); break;
      case 'B': raw.push_back({1, -1}); break;
      case ' ': case '1': break;
      default: throw InvalidArgument("bad free group letter '" + std::string(1, c) + "'");
    }
  }
  return FreeWord::reduce(raw);
}

// Binary positive word -> element of F2.
inline FreeWord to_free_word(const Word& w) {
  if (w.alphabet_size() > 2) throw InvalidArgument("free group words need a binary alphabet");
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (int s : w) raw.push_back({s, 1});
  return FreeWord::reduce(raw);
}

inline FreeWord pair_to_element(const Word& x, const Word& y) {
  return to_free_word(x) * to_free_word(y).inverse();
}

inline bool in_derived1(const FreeWord& w) {
  const auto [da, db] = w.degrees();
  return da == 0 && db == 0;
}

struct SchreierDecomposition {
  // (i, j) -> net exponent of g(i, j); zero entries are dropped.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> generators;
  std::pair<std::int64_t, std::int64_t> residual_degrees{0, 0};
};

inline SchreierDecomposition schreier_decompose(const FreeWord& w) {
  SchreierDecomposition out;
  std::int64_t i = 0;
  std::int64_t j = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator == 1) {
      j += l.exponent;  // t b = rep(t b): trivial generator
      continue;
    }
    if (l.exponent > 0) {
      if (j != 0) out.generators[{i, j}] += 1;
      ++i;
    } else {
      --i;
      if (j != 0) out.generators[{i, j}] -= 1;
    }
  }
  std::erase_if(out.generators, [](const auto& kv) { return kv.second == 0; });
  out.residual_degrees = {i, j};
  return out;
}

inline bool in_derived2(const FreeWord& w) {
  if (!in_derived1(w)) return false;
  return schreier_decompose(w).generators.empty();
}

}  // namespace wordsep
