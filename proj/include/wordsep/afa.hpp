#pragma once

// Affine finite automata over exact rationals.
//
// States are vectors whose entries sum to 1 and every operator has unit
// column sums. After the input the end-marker operator is applied and the
// weighting rule gives  P(accept) = sum_{accepting} |v_f[j]| / |v_f|_1.
//
// The encoding machines keep (e(z), 1 - e(z)) in their first two
// coordinates, where e(z) is the base-k value of the numeral "1z"; the
// end-marker operators turn the offset e(x) - e(z) into probabilities.

#include <algorithm>
#include <string>
#include <vector>

#include "wordsep/exactnum.hpp"
#include "wordsep/separation.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

class Afa {
 public:
  Afa(std::vector<Matrix<Rational>> transitions, Matrix<Rational> end_marker, Vector<Rational> initial,
      std::vector<std::size_t> accepting)
      : transitions_(std::move(transitions)),
        end_marker_(std::move(end_marker)),
        initial_(std::move(initial)),
        accepting_(std::move(accepting)) {
    const std::size_t n = initial_.size();
    if (n == 0) throw DimensionError("afa: empty state space");
    if (transitions_.empty()) throw InvalidArgument("afa: empty alphabet");
    auto check = [n](const Matrix<Rational>& a, const char* what) {
      if (a.rows() != n || a.cols() != n) throw DimensionError(std::string("afa: ") + what + " size != state count");
      if (!is_affine(a)) throw InvalidArgument(std::string("afa: ") + what + " is not affine");
    };
    for (const auto& a : transitions_) check(a, "transition");
    check(end_marker_, "end-marker");
    if (!is_affine_state(initial_)) throw InvalidArgument("afa: initial state does not sum to 1");
    std::sort(accepting_.begin(), accepting_.end());
    accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
    for (std::size_t q : accepting_)
      if (q >= n) throw InvalidArgument("afa: accepting state out of range");
  }

  std::size_t states() const { return initial_.size(); }
  int alphabet_size() const { return static_cast<int>(transitions_.size()); }
  const Matrix<Rational>& transition(int symbol) const { return transitions_.at(static_cast<std::size_t>(symbol)); }
  const std::vector<Matrix<Rational>>& transitions() const { return transitions_; }
  const Matrix<Rational>& end_marker() const { return end_marker_; }
  const Vector<Rational>& initial() const { return initial_; }
  const std::vector<std::size_t>& accepting() const { return accepting_; }

 private:
  std::vector<Matrix<Rational>> transitions_;
  Matrix<Rational> end_marker_;
  Vector<Rational> initial_;
  std::vector<std::size_t> accepting_;
};

struct AfaRun {
  Vector<Rational> final_state;  // after the end-marker
  Rational accept_probability;
};

// States v_0, ..., v_|x| before the end-marker.
inline std::vector<Vector<Rational>> trace(const Afa& m, const Word& x) {
  std::vector<Vector<Rational>> states{m.initial()};
  for (int s : x) {
    if (s >= m.alphabet_size()) throw InvalidArgument("afa: unknown symbol " + std::string(1, symbol_letter(s)));
    states.push_back(mat_vec(m.transition(s), states.back()));
  }
  return states;
}

inline Rational weighted_acceptance(const Vector<Rational>& v, const std::vector<std::size_t>& accepting) {
  Rational acc = 0;
  for (std::size_t q : accepting) acc += abs(v[q]);
  return Rational(acc / l1_norm(v));
}

inline AfaRun run(const Afa& m, const Word& x) {
  Vector<Rational> v = m.initial();
  for (int s : x) {
    if (s >= m.alphabet_size()) throw InvalidArgument("afa: unknown symbol " + std::string(1, symbol_letter(s)));
    v = mat_vec(m.transition(s), v);
  }
  AfaRun r{mat_vec(m.end_marker(), v), 0};
  r.accept_probability = weighted_acceptance(r.final_state, m.accepting());
  return r;
}

namespace detail {

inline Matrix<Rational> embed(const Matrix<Rational>& a, std::size_t n) {
  Matrix<Rational> out = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

// A_s = ((r + s, s), (1 - r - s, 1 - s)): (e, 1 - e) -> (r e + s, 1 - r e - s).
inline std::vector<Matrix<Rational>> encoding_transitions(int radix) {
  std::vector<Matrix<Rational>> out;
  for (int s = 0; s < radix; ++s)
    out.emplace_back(2, 2, std::vector<Rational>{Rational(radix + s), Rational(s), Rational(1 - radix - s), Rational(1 - s)});
  return out;
}

// (e, 1 - e) -> (c (target - e), 1 - c (target - e)).
inline Matrix<Rational> offset_end_marker(const Integer& target, const Rational& c) {
  const Rational ct = c * Rational(target);
  return Matrix<Rational>(2, 2, {Rational(ct - c), ct, Rational(1 - ct + c), Rational(1 - ct)});
}

inline int radix_of(const Word& w) { return std::max(2, w.alphabet_size()); }

inline int common_radix(const std::vector<Word>& ws) {
  if (ws.empty()) throw InvalidArgument("afa: empty word set");
  const int k = ws.front().alphabet_size();
  for (const Word& w : ws)
    if (w.alphabet_size() != k) throw InvalidArgument("afa: words use different alphabets");
  return std::max(2, k);
}

// Keeps entry 1 and folds entries 2..n into entry 2.
inline Matrix<Rational> collapse_operator(std::size_t n) {
  Matrix<Rational> c(n, n);
  c(0, 0) = 1;
  for (std::size_t j = 1; j < n; ++j) c(1, j) = 1;
  return c;
}

// Tensor of the 2-state encoding machines with offset end-markers for each
// target, followed by the collapse: first entry prod_j (e(t_j) - e(z)),
// second entry 1 minus that, the rest zero.
struct ProductParts {
  std::vector<Matrix<Rational>> transitions;
  Vector<Rational> initial;
  Matrix<Rational> collapsed_end;
};

inline ProductParts product_parts(const std::vector<Word>& targets, int radix) {
  const auto base = encoding_transitions(radix);
  ProductParts parts{base, {1, 0}, offset_end_marker(encode(targets.front(), radix), 1)};
  for (std::size_t i = 1; i < targets.size(); ++i) {
    for (std::size_t s = 0; s < base.size(); ++s) parts.transitions[s] = tensor(parts.transitions[s], base[s]);
    parts.initial = tensor_vec(parts.initial, Vector<Rational>{1, 0});
    parts.collapsed_end = tensor(parts.collapsed_end, offset_end_marker(encode(targets[i], radix), 1));
  }
  parts.collapsed_end = mat_mul(collapse_operator(parts.initial.size()), parts.collapsed_end);
  return parts;
}

}  // namespace detail

// S_{d,t}: v_0 = (1 + d/t, -d/t); each `symbol` moves 1/t from the first
// coordinate to the second. Accepting e1; no end-marker.
inline Afa subtraction_machine(long d, long t, int alphabet_size = 1, int symbol = 0) {
  if (t <= 0) throw InvalidArgument("subtraction_machine: t must be positive");
  if (d < 0) throw InvalidArgument("subtraction_machine: d must be non-negative");
  if (symbol < 0 || symbol >= alphabet_size) throw InvalidArgument("subtraction_machine: symbol outside alphabet");
  const Rational step = fraction(1, t);
  std::vector<Matrix<Rational>> a(static_cast<std::size_t>(alphabet_size), Matrix<Rational>::identity(2));
  a[static_cast<std::size_t>(symbol)] =
      Matrix<Rational>(2, 2, {Rational(1 - step), Rational(-step), step, Rational(1 + step)});
  const Rational shift = fraction(d, t);
  return Afa(std::move(a), Matrix<Rational>::identity(2), {Rational(1 + shift), Rational(-shift)}, {0});
}

// E_{x,y}: accepts x with probability 1 and y with probability 0.
inline Afa encoding_machine(const Word& x, const Word& y) {
  detail::require_pair(x, y);
  const int radix = detail::radix_of(x);
  const Integer ex = encode(x, radix);
  const Rational inv_d = fraction(1, Integer(ex - encode(y, radix)));
  const Matrix<Rational> scale(2, 2, {inv_d, 0, Rational(1 - inv_d), 1});
  return Afa(detail::encoding_transitions(radix), mat_mul(scale, detail::offset_end_marker(ex, 1)), {1, 0}, {1});
}

// B_x: final state (k i, 1 - k i) with i = e(x) - e(z), accepting e2.
// x is accepted with probability 1, anything else with <= (k+1)/(2k+1).
inline Afa bounded_machine(const Word& x, long scale = 1) {
  if (scale < 1) throw InvalidArgument("bounded_machine: scale must be >= 1");
  const int radix = detail::radix_of(x);
  return Afa(detail::encoding_transitions(radix), detail::offset_end_marker(encode(x, radix), Rational(scale)), {1, 0},
             {1});
}

// Third state added to B_x: final state (-k i, (k+1) i, 1 - i) with
// i = e(x) - e(z), accepting e3. Non-members accept with <= 2/(2k+1).
inline Afa three_state_machine(const Word& x, long scale = 1) {
  if (scale < 1) throw InvalidArgument("three_state_machine: scale must be >= 1");
  const int radix = detail::radix_of(x);
  const Integer ex = encode(x, radix);
  std::vector<Matrix<Rational>> a;
  for (const auto& m : detail::encoding_transitions(radix)) a.push_back(detail::embed(m, 3));
  // (e, 1 - e, 0) -> (e - e(x), 1 - e + e(x), 0) = (-i, 1 + i, 0)
  const Matrix<Rational> shift = detail::embed(
      Matrix<Rational>(2, 2, {Rational(1 - ex), Rational(-ex), Rational(ex), Rational(1 + ex)}), 3);
  const Rational k(scale);
  const Matrix<Rational> spread(3, 3, {k, 0, 0, Rational(-(k + 1)), 0, 0, 2, 1, 1});
  return Afa(std::move(a), mat_mul(spread, shift), {1, 0, 0}, {2});
}

// E_{x,Y}: 2^|Y| states, accepts x with probability 1 and every y in Y
// with probability 0.
inline Afa singleton_vs_set_machine(const Word& x, const std::vector<Word>& ys) {
  if (ys.empty()) throw InvalidArgument("singleton_vs_set_machine: Y is empty");
  std::vector<Word> all = ys;
  all.push_back(x);
  const int radix = detail::common_radix(all);
  detail::require_disjoint({x}, ys);
  const Integer ex = encode(x, radix);
  Integer d = 1;
  for (const Word& y : ys) d *= encode(y, radix) - ex;
  auto parts = detail::product_parts(ys, radix);
  const std::size_t n = parts.initial.size();
  Matrix<Rational> scale(n, n);
  const Rational inv_d = fraction(1, d);
  scale(0, 0) = inv_d;
  scale(1, 0) = 1 - inv_d;
  for (std::size_t j = 1; j < n; ++j) scale(1, j) = 1;
  return Afa(std::move(parts.transitions), mat_mul(scale, parts.collapsed_end), std::move(parts.initial), {0});
}

// B'_X: 2^|X| states, members accepted with probability 1. Non-members
// accept with <= (k+1)/(2k+1) (2/3 at k = 1), or <= 2/(2k+1) when sharpened.
// With |X| = 1 the sharpened variant needs a third state and is the
// three-state machine.
inline Afa set_machine(const std::vector<Word>& xs, long scale = 1, bool sharpen = false) {
  if (xs.empty()) throw InvalidArgument("set_machine: X is empty");
  if (scale < 1) throw InvalidArgument("set_machine: scale must be >= 1");
  const int radix = detail::common_radix(xs);
  if (sharpen && xs.size() == 1) return three_state_machine(xs.front(), scale);
  auto parts = detail::product_parts(xs, radix);
  const std::size_t n = parts.initial.size();
  const Rational k(scale);
  // Columns act on the collapsed (P, 1 - P, 0, ...); remaining columns are
  // never reached and are set to e1.
  Matrix<Rational> finish(n, n);
  for (std::size_t j = 2; j < n; ++j) finish(0, j) = 1;
  if (sharpen) {
    // -> (1 - P, -k P, (k+1) P, 0, ...)
    finish(1, 0) = -k;
    finish(2, 0) = k + 1;
    finish(0, 1) = 1;
  } else {
    // -> (1 - k P, k P, 0, ...)
    finish(0, 0) = 1 - k;
    finish(1, 0) = k;
    finish(0, 1) = 1;
  }
  return Afa(std::move(parts.transitions), mat_mul(finish, parts.collapsed_end), std::move(parts.initial), {0});
}

inline SeparationReport evaluate_separation(const Afa& m, const std::string& kind, const std::vector<Word>& xs,
                                            const std::vector<Word>& ys, const ModeClaim& claim) {
  std::function<Rational(const Word&)> accept = [&](const Word& w) { return run(m, w).accept_probability; };
  return evaluate_separation<Rational>({kind, m.states(), "rational"}, xs, ys, claim, accept);
}

}  // namespace wordsep
