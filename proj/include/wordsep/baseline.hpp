#pragma once

// Brute-force minimal DFA separating two words.
//
// A DFA separates x and y iff reading them from the start state ends in
// different states (the accepting set can then be chosen freely). Tables
// are generated only in canonical form: states are numbered in BFS
// discovery order, so each initially-connected DFA up to isomorphism is
// visited once.

#include <algorithm>
#include <functional>
#include <future>
#include <cstddef>
#include <optional>
#include <vector>

#include "wordsep/error.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

struct Dfa {
  std::size_t states = 0;
  int alphabet_size = 0;
  std::vector<std::size_t> table;  // table[q * k + s]

  std::size_t next(std::size_t q, int s) const { return table[q * static_cast<std::size_t>(alphabet_size) + static_cast<std::size_t>(s)]; }

  std::size_t run(const Word& w) const {
    std::size_t q = 0;
    for (int s : w) q = next(q, s);
    return q;
  }

  bool separates(const Word& x, const Word& y) const { return run(x) != run(y); }
};

namespace detail {

// Fills table cells in order (state 0 symbol 0, state 0 symbol 1, ...).
// A cell may point to any discovered state or to the next undiscovered
// one; in BFS order the cell being filled always belongs to a discovered
// state, otherwise the table is not connected.
template <class Visit>
bool enumerate_canonical(Dfa& dfa, std::size_t cell, std::size_t discovered, Visit& visit) {
  const std::size_t k = static_cast<std::size_t>(dfa.alphabet_size);
  if (cell == dfa.table.size()) return discovered == dfa.states && visit(dfa);
  if (cell / k >= discovered) return false;
  const std::size_t limit = std::min(discovered + 1, dfa.states);
  for (std::size_t target = 0; target < limit; ++target) {
    dfa.table[cell] = target;
    if (enumerate_canonical(dfa, cell + 1, std::max(discovered, target + 1), visit)) return true;
  }
  return false;
}

}  // namespace detail

// Some n-state DFA separating x and y, or nothing. The search is split by
// the choice of state 0's row; partitions run concurrently and the first
// partition (in enumeration order) with a hit wins, so the result matches a
// sequential scan.
inline std::optional<Dfa> find_separating_dfa(const Word& x, const Word& y, std::size_t n) {
  if (n == 0) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(x.alphabet_size());
  const Dfa empty{n, x.alphabet_size(), std::vector<std::size_t>(n * k, 0)};

  struct Prefix {
    Dfa dfa;
    std::size_t discovered;
  };
  std::vector<Prefix> prefixes;
  const std::function<void(Dfa&, std::size_t, std::size_t)> rows = [&](Dfa& d, std::size_t cell, std::size_t disc) {
    if (cell == k) {
      prefixes.push_back({d, disc});
      return;
    }
    for (std::size_t t = 0; t < std::min(disc + 1, n); ++t) {
      d.table[cell] = t;
      rows(d, cell + 1, std::max(disc, t + 1));
    }
  };
  Dfa scratch = empty;
  rows(scratch, 0, 1);

  std::vector<std::future<std::optional<Dfa>>> jobs;
  for (auto& p : prefixes)
    jobs.push_back(std::async(std::launch::async, [&x, &y, k, p]() mutable -> std::optional<Dfa> {
      std::optional<Dfa> found;
      auto visit = [&](const Dfa& d) {
        if (!d.separates(x, y)) return false;
        found = d;
        return true;
      };
      detail::enumerate_canonical(p.dfa, k, p.discovered, visit);
      return found;
    }));
  std::optional<Dfa> result;
  for (auto& j : jobs) {
    auto r = j.get();
    if (!result && r) result = std::move(r);
  }
  return result;
}

inline std::optional<std::size_t> min_separating_dfa_size(const Word& x, const Word& y, std::size_t n_max = 4) {
  detail::require_pair(x, y);
  for (std::size_t n = 1; n <= n_max; ++n)
    if (find_separating_dfa(x, y, n)) return n;
  return std::nullopt;
}

}  // namespace wordsep
