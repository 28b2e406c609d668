#pragma once

// Moore-Crutchfield quantum finite automata.
//
// A run reads the word left to right, u_j = U_{x_j} u_{j-1}, and accepts
// with the squared amplitude mass on the accepting states. Machines are
// generic over the scalar backend: Rational machines give exact
// probabilities, Complex machines are checked against a tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wordsep/exactnum.hpp"
#include "wordsep/separation.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

inline constexpr double kUnitaryTolerance = 1e-9;

template <class S>
class Mcqfa {
 public:
  Mcqfa(std::vector<Matrix<S>> transitions, Vector<S> initial, std::vector<std::size_t> accepting,
        double tol = kUnitaryTolerance)
      : transitions_(std::move(transitions)),
        initial_(std::move(initial)),
        accepting_(std::move(accepting)) {
    const std::size_t n = initial_.size();
    if (n == 0) throw DimensionError("mcqfa: empty state space");
    if (transitions_.empty()) throw InvalidArgument("mcqfa: empty alphabet");
    const double t = is_exact_v<S> ? 0.0 : tol;
    for (const auto& u : transitions_) {
      if (u.rows() != n || u.cols() != n) throw DimensionError("mcqfa: transition size != state count");
      if (!is_unitary(u, t)) throw InvalidArgument("mcqfa: transition is not unitary");
    }
    const auto norm = l2_norm_sq(initial_);
    if constexpr (is_exact_v<S>) {
      if (norm != 1) throw InvalidArgument("mcqfa: initial state is not a unit vector");
    } else {
      if (std::abs(norm - 1.0) > t) throw InvalidArgument("mcqfa: initial state is not a unit vector");
    }
    std::sort(accepting_.begin(), accepting_.end());
    accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
    for (std::size_t q : accepting_)
      if (q >= n) throw InvalidArgument("mcqfa: accepting state out of range");
  }

  std::size_t states() const { return initial_.size(); }
  int alphabet_size() const { return static_cast<int>(transitions_.size()); }
  const Matrix<S>& transition(int symbol) const { return transitions_.at(static_cast<std::size_t>(symbol)); }
  const std::vector<Matrix<S>>& transitions() const { return transitions_; }
  const Vector<S>& initial() const { return initial_; }
  const std::vector<std::size_t>& accepting() const { return accepting_; }

 private:
  std::vector<Matrix<S>> transitions_;
  Vector<S> initial_;
  std::vector<std::size_t> accepting_;
};

template <class S>
struct RunResult {
  Vector<S> final_state;
  real_t<S> accept_probability;
};

template <class S>
Vector<S> final_state(const Mcqfa<S>& m, const Word& x) {
  Vector<S> state = m.initial();
  for (int s : x) {
    if (s >= m.alphabet_size()) throw InvalidArgument("mcqfa: unknown symbol " + std::string(1, symbol_letter(s)));
    state = mat_vec(m.transition(s), state);
  }
  return state;
}

template <class S>
real_t<S> accept_mass(const Mcqfa<S>& m, const Vector<S>& state) {
  real_t<S> p(0);
  for (std::size_t q : m.accepting()) p += scalar_traits<S>::abs2(state[q]);
  return p;
}

template <class S>
RunResult<S> run(const Mcqfa<S>& m, const Word& x) {
  RunResult<S> r{final_state(m, x), real_t<S>(0)};
  r.accept_probability = accept_mass(m, r.final_state);
  return r;
}

// Counter-clockwise rotation of the plane by `angle`.
inline Matrix<Complex> plane_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Matrix<Complex>(2, 2, {c, -s, s, c});
}

// R_{d,t}: starts at angle -d*pi/(2t), each `symbol` turns the state by
// pi/(2t) counter-clockwise, other symbols act as the identity. Accepts q1,
// so a word with exactly d copies of `symbol` lands on q1 and one with d+t
// lands on q2.
inline Mcqfa<Complex> rotation_machine(long d, long t, int alphabet_size = 1, int symbol = 0) {
  if (t <= 0) throw InvalidArgument("rotation_machine: t must be positive");
  if (d < 0) throw InvalidArgument("rotation_machine: d must be non-negative");
  if (symbol < 0 || symbol >= alphabet_size) throw InvalidArgument("rotation_machine: symbol outside alphabet");
  const double step = std::numbers::pi / (2.0 * static_cast<double>(t));
  const double start = step * static_cast<double>(d);
  std::vector<Matrix<Complex>> u(static_cast<std::size_t>(alphabet_size), Matrix<Complex>::identity(2));
  u[static_cast<std::size_t>(symbol)] = plane_rotation(step);
  return Mcqfa<Complex>(std::move(u), {std::cos(start), -std::sin(start)}, {0});
}

// Real 2-state machine for (ab, ba): U_a = H, U_b = diag(1, -1), balanced
// initial state, accepting q1.
inline Mcqfa<Complex> swap_pair_machine() {
  const double h = 1.0 / std::numbers::sqrt2;
  Matrix<Complex> ua(2, 2, {h, h, h, -h});
  Matrix<Complex> ub(2, 2, {1.0, 0.0, 0.0, -1.0});
  return Mcqfa<Complex>({ua, ub}, {h, h}, {0});
}

namespace detail {

inline bool is_square_block_word(const Word& w) {
  if (w.size() % 2 != 0 || w.alphabet_size() > 2) return false;
  for (std::size_t i = 0; i < w.size(); i += 2)
    if (w[i] != w[i + 1]) return false;
  return true;
}

}  // namespace detail

// For x, y in {aa, bb}* with equal letter counts, returns the max-entry gap
// between the two final states of a real 2-state machine. Squares of real
// 2x2 orthogonal matrices are rotations and commute, so the gap is zero up
// to rounding.
inline double theorem2_obstruction_check(const Mcqfa<Complex>& m, const Word& x, const Word& y) {
  if (m.states() != 2 || m.alphabet_size() != 2) throw InvalidArgument("obstruction check: need a binary 2-state machine");
  auto real = [](const Complex& z) { return z.imag() == 0.0; };
  for (const auto& u : m.transitions())
    if (!std::all_of(u.data().begin(), u.data().end(), real)) throw InvalidArgument("obstruction check: machine has complex entries");
  if (!std::all_of(m.initial().begin(), m.initial().end(), real)) throw InvalidArgument("obstruction check: machine has complex entries");
  if (!detail::is_square_block_word(x) || !detail::is_square_block_word(y))
    throw InvalidArgument("obstruction check: words must lie in {aa, bb}*");
  if (x.count(0) != y.count(0) || x.count(1) != y.count(1))
    throw InvalidArgument("obstruction check: letter counts differ");
  return max_abs_diff(final_state(m, x), final_state(m, y));
}

// The free pair of rational rotations of R^3 (angle arccos 3/5 about the
// third and second axes).
inline const std::array<Matrix<Rational>, 2>& free_rotations() {
  static const std::array<Matrix<Rational>, 2> u = [] {
    const Rational f = fraction(1, 5);
    Matrix<Rational> ua(3, 3, {4 * f, 3 * f, 0, -3 * f, 4 * f, 0, 0, 0, 1});
    Matrix<Rational> ub(3, 3, {4 * f, 0, 3 * f, 0, 1, 0, -3 * f, 0, 4 * f});
    return std::array<Matrix<Rational>, 2>{ua, ub};
  }();
  return u;
}

// M_x: 3-state exact machine with initial state U_{x_1}^-1 ... U_{x_n}^-1 q1
// and accepting {q2, q3}. Reading x returns to q1; any other word leaves
// some mass on q2, q3.
inline Mcqfa<Rational> banach_tarski_machine(const Word& x) {
  if (x.alphabet_size() > 2) throw InvalidArgument("banach_tarski_machine: word must be binary");
  const auto& u = free_rotations();
  Vector<Rational> v{1, 0, 0};
  for (std::size_t j = x.size(); j-- > 0;) v = mat_vec(transpose(u[static_cast<std::size_t>(x[j])]), v);
  return Mcqfa<Rational>({u[0], u[1]}, std::move(v), {1, 2});
}

// Unit quaternion (w, v1, v2, v3) of a rotation matrix, sign fixed so the
// first nonzero component is positive.
inline std::array<double, 4> rotation_quaternion(const Matrix<double>& r) {
  if (r.rows() != 3 || r.cols() != 3) throw DimensionError("rotation_quaternion: need a 3x3 matrix");
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  std::array<double, 4> q{};
  if (tr > 0) {
    const double s = 2.0 * std::sqrt(1.0 + tr);
    q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) > r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
  }
  for (double c : q) {
    if (c == 0.0) continue;
    if (c < 0)
      for (double& e : q) e = -e;
    break;
  }
  return q;
}

// SO(3) -> SU(2) lift. The first spatial axis maps to sigma_z, so rotations
// fixing q1 lift to diagonal matrices; the second and third axes map to
// sigma_x and sigma_y (a cyclic relabelling, so the lift is a homomorphism
// up to sign).
inline Matrix<Complex> su2_from_rotation(const Matrix<double>& r) {
  const auto [w, v1, v2, v3] = rotation_quaternion(r);
  return Matrix<Complex>(2, 2, {Complex(w, -v1), Complex(-v3, -v2), Complex(v3, -v2), Complex(w, v1)});
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  std::vector<double> data;
  for (const auto& x : m.data()) data.push_back(x.get_d());
  return Matrix<double>(m.rows(), m.cols(), std::move(data));
}

// N_x: the 2-state complex image of M_x. Accepting {p2}; the p2 amplitude
// after reading x is zero and nonzero after any other word.
inline Mcqfa<Complex> su2_lift(const Word& x) {
  if (x.alphabet_size() > 2) throw InvalidArgument("su2_lift: word must be binary");
  const auto& u = free_rotations();
  const std::array<Matrix<Complex>, 2> lifted{su2_from_rotation(to_double(u[0])), su2_from_rotation(to_double(u[1]))};
  Vector<Complex> v{1.0, 0.0};
  for (std::size_t j = x.size(); j-- > 0;) v = mat_vec(adjoint(lifted[static_cast<std::size_t>(x[j])]), v);
  return Mcqfa<Complex>({lifted[0], lifted[1]}, std::move(v), {1}, 1e-12);
}

enum class AcceptRule {
  AllComponents,  // every component state accepting in its own machine
  AnyComponent,
};

// Runs the machines in parallel: transitions and initial states are
// tensored with machine 1 outermost.
template <class S>
Mcqfa<S> tensor_machines(const std::vector<Mcqfa<S>>& machines, AcceptRule rule) {
  if (machines.empty()) throw InvalidArgument("tensor_machines: empty list");
  const int k = machines.front().alphabet_size();
  for (const auto& m : machines)
    if (m.alphabet_size() != k) throw InvalidArgument("tensor_machines: alphabets differ");

  std::vector<Matrix<S>> u = machines.front().transitions();
  Vector<S> init = machines.front().initial();
  for (std::size_t i = 1; i < machines.size(); ++i) {
    for (int s = 0; s < k; ++s) u[static_cast<std::size_t>(s)] = tensor(u[static_cast<std::size_t>(s)], machines[i].transition(s));
    init = tensor_vec(init, machines[i].initial());
  }

  std::vector<std::size_t> accepting;
  for (std::size_t idx = 0; idx < init.size(); ++idx) {
    std::size_t rest = idx;
    std::size_t hits = 0;
    for (std::size_t i = machines.size(); i-- > 0;) {
      const std::size_t n = machines[i].states();
      const std::size_t local = rest % n;
      rest /= n;
      const auto& acc = machines[i].accepting();
      if (std::binary_search(acc.begin(), acc.end(), local)) ++hits;
    }
    const bool ok = rule == AcceptRule::AllComponents ? hits == machines.size() : hits > 0;
    if (ok) accepting.push_back(idx);
  }
  return Mcqfa<S>(std::move(u), std::move(init), std::move(accepting));
}

template <class S>
SeparationReport evaluate_separation(const Mcqfa<S>& m, const std::string& kind, const std::vector<Word>& xs,
                                     const std::vector<Word>& ys, const ModeClaim& claim, double tol = 1e-9) {
  std::function<real_t<S>(const Word&)> accept = [&](const Word& w) { return run(m, w).accept_probability; };
  return evaluate_separation<real_t<S>>({kind, m.states(), scalar_traits<S>::name}, xs, ys, claim, accept, tol);
}

}  // namespace wordsep
