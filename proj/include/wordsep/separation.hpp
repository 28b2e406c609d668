#pragma once

// Separation modes and the report produced when a machine is checked
// against a pair of disjoint word sets.

#include <chrono>
#include <functional>
#include <set>
#include <type_traits>
#include <string>
#include <vector>

#include "wordsep/exactnum.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

enum class SeparationMode { Exact, Nondeterministic, Bounded };

inline std::string to_string(SeparationMode m) {
  switch (m) {
    case SeparationMode::Exact: return "exact";
    case SeparationMode::Nondeterministic: return "nondeterministic";
    case SeparationMode::Bounded: return "bounded";
  }
  return "?";
}

struct ModeClaim {
  SeparationMode mode = SeparationMode::Exact;
  Rational bound = 0;  // only for Bounded: rejected side accepts with <= bound

  static ModeClaim exact() { return {SeparationMode::Exact, 0}; }
  static ModeClaim nondeterministic() { return {SeparationMode::Nondeterministic, 0}; }
  static ModeClaim bounded(Rational p) { return {SeparationMode::Bounded, std::move(p)}; }
};

struct MachineDescriptor {
  std::string kind;
  std::size_t states = 0;
  std::string backend;
};

struct WordAcceptance {
  Word word;
  bool in_x = true;
  std::string value;  // exact fraction or float text
  double approx = 0.0;
};

struct SeparationReport {
  MachineDescriptor machine;
  std::vector<WordAcceptance> words;
  ModeClaim mode;
  bool verified = false;
  // Which side is accepted (probability 1 / nonzero) when verified.
  bool x_side_accepted = true;
  bool exact = false;
  double elapsed_ms = 0.0;
};

namespace detail {

inline void require_disjoint(const std::vector<Word>& xs, const std::vector<Word>& ys) {
  if (xs.empty() || ys.empty()) throw InvalidArgument("separation: empty word set");
  std::set<Word> seen(xs.begin(), xs.end());
  for (const Word& y : ys)
    if (seen.contains(y)) throw InvalidArgument("separation: sets overlap at " + to_string(y));
}

// Zero / one / bound tests under the backend's exactness rule.
template <class P>
struct ProbabilityTests {
  double tol;
  bool zero(const P& p) const {
    if constexpr (std::is_same_v<P, Rational>) return p == 0;
    else return p <= tol;
  }
  bool one(const P& p) const {
    if constexpr (std::is_same_v<P, Rational>) return p == 1;
    else return p >= 1.0 - tol;
  }
  bool nonzero(const P& p) const {
    if constexpr (std::is_same_v<P, Rational>) return p != 0;
    else return p > tol;
  }
  bool at_most(const P& p, const Rational& bound) const {
    if constexpr (std::is_same_v<P, Rational>) return p <= bound;
    else return p <= bound.get_d() + tol;
  }
};

template <class P>
bool side_holds(const ProbabilityTests<P>& t, const ModeClaim& claim,
                const std::vector<P>& accepted, const std::vector<P>& rejected) {
  auto all = [](const std::vector<P>& v, auto pred) {
    for (const P& p : v)
      if (!pred(p)) return false;
    return true;
  };
  switch (claim.mode) {
    case SeparationMode::Exact:
      return all(accepted, [&](const P& p) { return t.one(p); }) &&
             all(rejected, [&](const P& p) { return t.zero(p); });
    case SeparationMode::Nondeterministic:
      return all(accepted, [&](const P& p) { return t.nonzero(p); }) &&
             all(rejected, [&](const P& p) { return t.zero(p); });
    case SeparationMode::Bounded:
      return all(accepted, [&](const P& p) { return t.one(p); }) &&
             all(rejected, [&](const P& p) { return t.at_most(p, claim.bound); });
  }
  return false;
}

inline std::string probability_text(const Rational& p) { return to_string(p); }
inline std::string probability_text(double p) { return to_string(p); }
inline double probability_value(const Rational& p) { return p.get_d(); }
inline double probability_value(double p) { return p; }

}  // namespace detail

// Runs `accept` on every word of X and Y and checks the claimed mode in
// either orientation (X accepted and Y rejected, or the reverse).
template <class P>
SeparationReport evaluate_separation(MachineDescriptor machine, const std::vector<Word>& xs,
                                     const std::vector<Word>& ys, const ModeClaim& claim,
                                     const std::function<P(const Word&)>& accept,
                                     double tol = 1e-9) {
  detail::require_disjoint(xs, ys);
  const auto start = std::chrono::steady_clock::now();
  SeparationReport report;
  report.machine = std::move(machine);
  report.mode = claim;
  report.exact = std::is_same_v<P, Rational>;

  std::vector<P> px;
  std::vector<P> py;
  for (const Word& w : xs) px.push_back(accept(w));
  for (const Word& w : ys) py.push_back(accept(w));
  for (std::size_t i = 0; i < xs.size(); ++i)
    report.words.push_back({xs[i], true, detail::probability_text(px[i]),
                            detail::probability_value(px[i])});
  for (std::size_t i = 0; i < ys.size(); ++i)
    report.words.push_back({ys[i], false, detail::probability_text(py[i]),
                            detail::probability_value(py[i])});

  const detail::ProbabilityTests<P> tests{tol};
  if (detail::side_holds(tests, claim, px, py)) {
    report.verified = true;
    report.x_side_accepted = true;
  } else if (detail::side_holds(tests, claim, py, px)) {
    report.verified = true;
    report.x_side_accepted = false;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace wordsep
