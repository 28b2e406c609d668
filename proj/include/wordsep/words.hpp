#pragma once

// Words over a finite alphabet {0, ..., k-1}, easy/hard pair classification,
// reduction of hard pairs to binary ones, and the positional encoding e(z).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordsep/error.hpp"
#include "wordsep/exactnum.hpp"

namespace wordsep {

class Word {
 public:
  Word() = default;

  Word(std::vector<int> symbols, int alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 1) throw InvalidArgument("alphabet size must be >= 1");
    for (int s : symbols_) {
      if (s < 0 || s >= alphabet_size_)
        throw InvalidArgument("symbol " + std::to_string(s) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_size_));
    }
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  int operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<int>& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  std::size_t count(int symbol) const {
    return static_cast<std::size_t>(
        std::count(symbols_.begin(), symbols_.end(), symbol));
  }

  Word with_alphabet(int alphabet_size) const { return Word(symbols_, alphabet_size); }

  friend bool operator==(const Word&, const Word&) = default;

  // Shortlex: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.alphabet_size_ <=> b.alphabet_size_; c != 0) return c;
    if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<int> symbols_;
  int alphabet_size_ = 2;
};

inline char symbol_letter(int s) { return static_cast<char>('a' + s); }

inline std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (int s : w) out.push_back(symbol_letter(s));
  return out;
}

// Accepts letters ("abba") or digits ("0110"); "" and "eps" denote the empty
// word. alphabet_size = 0 picks max(2, largest symbol + 1).
inline Word parse_word(std::string_view text, int alphabet_size = 0) {
  std::vector<int> symbols;
  if (text != "eps") {
    bool letters = false;
    bool digits = false;
    for (char c : text) {
      if (c >= 'a' && c <= 'z') {
        letters = true;
        symbols.push_back(c - 'a');
      } else if (c >= '0' && c <= '9') {
        digits = true;
        symbols.push_back(c - '0');
      } else {
        throw InvalidArgument("bad symbol '" + std::string(1, c) + "' in word \"" +
                              std::string(text) + "\"");
      }
    }
    if (letters && digits)
      throw InvalidArgument("word mixes letters and digits: " + std::string(text));
  }
  int k = alphabet_size;
  if (k == 0) {
    k = 2;
    for (int s : symbols) k = std::max(k, s + 1);
  }
  return Word(std::move(symbols), k);
}

// All words over {0..k-1} with length <= max_len, in shortlex order.
inline std::vector<Word> all_words(int alphabet_size, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<std::vector<int>> layer{{}};
  out.emplace_back(std::vector<int>{}, alphabet_size);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * static_cast<std::size_t>(alphabet_size));
    for (const auto& w : layer) {
      for (int s = 0; s < alphabet_size; ++s) {
        auto v = w;
        v.push_back(s);
        out.emplace_back(v, alphabet_size);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

enum class PairKind { Easy, Hard };

struct EasyWitness {
  int symbol;
  std::size_t count_x;
  std::size_t count_y;
};

// x, y are relabelled onto {0, 1} (the smaller kept symbol becomes 0).
// kept_x / kept_y are the original symbols x_j, y_j at the first index j
// where the words differ.
struct HardReduction {
  Word x;
  Word y;
  int kept_x;
  int kept_y;

  // The reduced words written in the original letters.
  std::pair<std::string, std::string> original_letters() const {
    const int lo = std::min(kept_x, kept_y);
    const int hi = std::max(kept_x, kept_y);
    auto render = [&](const Word& w) {
      std::string s;
      for (int b : w) s.push_back(symbol_letter(b == 0 ? lo : hi));
      return s;
    };
    return {render(x), render(y)};
  }
};

struct PairClass {
  PairKind kind;
  std::optional<EasyWitness> easy;
  std::optional<HardReduction> hard;
};

namespace detail {

inline void require_pair(const Word& x, const Word& y) {
  if (x.alphabet_size() != y.alphabet_size())
    throw InvalidArgument("pair words use different alphabets");
  if (x == y) throw InvalidArgument("pair words are equal: " + to_string(x));
}

inline std::optional<EasyWitness> easy_witness(const Word& x, const Word& y) {
  for (int s = 0; s < x.alphabet_size(); ++s) {
    const auto cx = x.count(s);
    const auto cy = y.count(s);
    if (cx != cy) return EasyWitness{s, cx, cy};
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_easy_pair(const Word& x, const Word& y) {
  return detail::easy_witness(x, y).has_value();
}

inline HardReduction reduce_hard_pair(const Word& x, const Word& y) {
  detail::require_pair(x, y);
  if (detail::easy_witness(x, y)) throw InvalidArgument("pair is not hard");
  std::size_t j = 0;
  while (x[j] == y[j]) ++j;  // exists: equal lengths, x != y
  const int kx = x[j];
  const int ky = y[j];
  const int lo = std::min(kx, ky);
  auto project = [&](const Word& w) {
    std::vector<int> out;
    for (int s : w)
      if (s == kx || s == ky) out.push_back(s == lo ? 0 : 1);
    return Word(std::move(out), 2);
  };
  return HardReduction{project(x), project(y), kx, ky};
}

inline PairClass classify(const Word& x, const Word& y) {
  detail::require_pair(x, y);
  if (auto w = detail::easy_witness(x, y)) return PairClass{PairKind::Easy, w, std::nullopt};
  return PairClass{PairKind::Hard, std::nullopt, reduce_hard_pair(x, y)};
}

// Value of the base-k numeral "1z".
inline Integer encode(const Word& z, int radix) {
  if (radix < 2) throw InvalidArgument("encode: radix must be >= 2");
  Integer value = 1;
  for (int s : z) {
    if (s >= radix) throw InvalidArgument("encode: symbol exceeds radix");
    value = value * radix + s;
  }
  return value;
}

inline Integer encode(const Word& z) { return encode(z, std::max(2, z.alphabet_size())); }

}  // namespace wordsep
