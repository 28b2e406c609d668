#pragma once

// Word maps on SU(2).
//
// For a pair (x, y) of binary words put w = x y^-1 in F2. A 2-state machine
// with unitaries Ua, Ub and start u0 has
//
//     <u_f^x | u_f^y> = <u0| f_w(Ua^dagger, Ub^dagger) |u0>,
//
// so the pair is separable with zero error iff the image of f_w contains
// an element with eigenphase pi/2. The image is a conjugation-closed set
// of eigenphases [0, alpha(w)]; estimate_alpha searches for a large
// attained eigenphase, which is a lower bound on alpha(w).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "wordsep/exactnum.hpp"
#include "wordsep/freegroup.hpp"
#include "wordsep/mcqfa.hpp"
#include "wordsep/words.hpp"

namespace wordsep {

using Mat2 = Matrix<Complex>;

inline constexpr double kSu2Tolerance = 1e-10;

// cos(angle) I - i sin(angle) (n . sigma), n given by colatitude/longitude.
// Its eigenvalues are exp(+-i angle).
struct Su2Params {
  double colatitude = 0.0;
  double longitude = 0.0;
  double angle = 0.0;

  Mat2 matrix() const {
    const double nx = std::sin(colatitude) * std::cos(longitude);
    const double ny = std::sin(colatitude) * std::sin(longitude);
    const double nz = std::cos(colatitude);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Mat2(2, 2, {Complex(c, -s * nz), Complex(-s * ny, -s * nx), Complex(s * ny, -s * nx), Complex(c, s * nz)});
  }
};

inline Complex det2(const Mat2& u) { return u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0); }

inline bool is_su2(const Mat2& u, double tol = kSu2Tolerance) {
  return u.rows() == 2 && u.cols() == 2 && is_unitary(u, tol) && std::abs(det2(u) - 1.0) <= tol;
}

namespace detail {

inline Mat2 word_map_product(const FreeWord& w, const Mat2& ua, const Mat2& ub) {
  const std::array<Mat2, 2> fwd{ua, ub};
  const std::array<Mat2, 2> inv{adjoint(ua), adjoint(ub)};
  Mat2 acc = Mat2::identity(2);
  for (const Letter& l : w.letters()) {
    const auto g = static_cast<std::size_t>(l.generator);
    acc = mat_mul(acc, l.exponent > 0 ? fwd[g] : inv[g]);
  }
  return acc;
}

}  // namespace detail

// f_w(Ua, Ub): substitute Ua for a, Ub for b, conjugate transposes for the
// inverse letters.
inline Mat2 eval_word_map(const FreeWord& w, const Mat2& ua, const Mat2& ub) {
  if (!is_su2(ua) || !is_su2(ub)) throw InvalidArgument("eval_word_map: inputs must lie in SU(2)");
  return detail::word_map_product(w, ua, ub);
}

inline double eigenphase(const Mat2& u) {
  const double half_trace = 0.5 * (u(0, 0) + u(1, 1)).real();
  return std::acos(std::clamp(half_trace, -1.0, 1.0));
}

// Haar-random element of SU(2) via a uniform unit quaternion.
inline Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<double, 4> q{};
  double norm = 0.0;
  do {
    for (double& c : q) c = g(rng);
    norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  } while (norm < 1e-12);
  for (double& c : q) c /= norm;
  return Mat2(2, 2, {Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1])});
}

struct SearchOptions {
  std::size_t restarts = 64;
  std::size_t sweeps = 60;
  double initial_step = 0.5;
  double decay = 0.7;
  std::uint64_t seed = 0;
};

struct AlphaEstimate {
  FreeWord omega;
  double alpha_hat = 0.0;  // attained eigenphase: a lower bound on alpha(omega)
  std::pair<Su2Params, Su2Params> argmax;
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::size_t restarts_used = 0;
  std::uint64_t seed = 0;
};

namespace detail {

using Point = std::array<double, 6>;

inline std::pair<Su2Params, Su2Params> unpack(const Point& p) {
  return {{p[0], p[1], p[2]}, {p[3], p[4], p[5]}};
}

inline double objective(const FreeWord& w, const Point& p) {
  const auto [a, b] = unpack(p);
  return eigenphase(word_map_product(w, a.matrix(), b.matrix()));
}

// Restart r draws from its own stream, so the first r restarts do not
// depend on how many are requested.
inline std::mt19937_64 restart_stream(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

// Multi-start coordinate search over the six parameters of (Ua, Ub),
// maximizing the eigenphase of f_w(Ua, Ub). Deterministic in the seed.
inline AlphaEstimate estimate_alpha(const FreeWord& w, const SearchOptions& opt = {}) {
  if (w.is_identity()) throw InvalidArgument("estimate_alpha: word map of the identity is constant");
  constexpr double kCeiling = std::numbers::pi - 1e-12;
  AlphaEstimate best;
  best.omega = w;
  best.seed = opt.seed;
  best.alpha_hat = -1.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    auto rng = detail::restart_stream(opt.seed, r);
    detail::Point p{};
    for (std::size_t k = 0; k < 2; ++k) {
      p[3 * k + 0] = std::acos(1.0 - 2.0 * unit(rng));
      p[3 * k + 1] = 2.0 * std::numbers::pi * unit(rng);
      p[3 * k + 2] = std::numbers::pi * unit(rng);
    }
    double value = detail::objective(w, p);
    double step = opt.initial_step;
    for (std::size_t sweep = 0; sweep < opt.sweeps && value < kCeiling; ++sweep) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (double dir : {1.0, -1.0}) {
          detail::Point q = p;
          q[c] += dir * step;
          const double v = detail::objective(w, q);
          if (v > value) {
            value = v;
            p = q;
            break;
          }
        }
      }
      step *= opt.decay;
    }
    best.restarts_used = r + 1;
    if (value > best.alpha_hat) {
      best.alpha_hat = value;
      best.argmax = detail::unpack(p);
    }
    if (best.alpha_hat >= kCeiling) break;
  }
  return best;
}

// |<u_f^x|u_f^y> - <u0| f_w(Ua^dagger, Ub^dagger) |u0>| for w = x y^-1.
inline double inner_product_identity_check(const Word& x, const Word& y, const Mat2& ua, const Mat2& ub,
                                           const Vector<Complex>& u0) {
  const std::array<Mat2, 2> u{ua, ub};
  auto simulate = [&](const Word& z) {
    Vector<Complex> v = u0;
    for (int s : z) v = mat_vec(u[static_cast<std::size_t>(s)], v);
    return v;
  };
  const Complex direct = inner(simulate(x), simulate(y));
  const Mat2 f = detail::word_map_product(pair_to_element(x, y), adjoint(ua), adjoint(ub));
  const Complex via_map = inner(u0, mat_vec(f, u0));
  return std::abs(direct - via_map);
}

struct SeparationCertificate {
  Mcqfa<Complex> machine;
  double residual;         // accept(y)
  double accept_x_defect;  // 1 - accept(x)
  std::pair<Su2Params, Su2Params> parameters;
};

// Turns an estimate with alpha_hat >= pi/2 - tol into a 2-state machine that
// accepts x with probability ~1 and y with probability ~0.
inline SeparationCertificate build_separating_mcqfa(const Word& x, const Word& y, const AlphaEstimate& est,
                                                    double tol = 1e-3) {
  if (x == y) throw InvalidArgument("build_separating_mcqfa: words are equal");
  const FreeWord w = pair_to_element(x, y);
  if (!(est.omega == w)) throw InvalidArgument("build_separating_mcqfa: estimate belongs to a different word");
  constexpr double kQuarter = std::numbers::pi / 2;
  if (est.alpha_hat < kQuarter - tol)
    throw InvalidArgument("build_separating_mcqfa: alpha_hat = " + to_string(est.alpha_hat) +
                          " is below pi/2; no certificate can be built from this estimate");

  // Shrink both rotation angles along the ray to the argmax until the
  // eigenphase is exactly pi/2 (it is 0 at the identity).
  auto [a, b] = est.argmax;
  if (est.alpha_hat > kQuarter) {
    auto phase_at = [&](double t) {
      Su2Params at = a, bt = b;
      at.angle *= t;
      bt.angle *= t;
      return eigenphase(detail::word_map_product(w, at.matrix(), bt.matrix()));
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (phase_at(mid) < kQuarter ? lo : hi) = mid;
    }
    a.angle *= hi;
    b.angle *= hi;
  }

  const Mat2 f = detail::word_map_product(w, a.matrix(), b.matrix());
  const Mat2 ua = adjoint(a.matrix());
  const Mat2 ub = adjoint(b.matrix());

  // f = cos t I - i sin t (n . sigma); balance u0 over its eigenvectors.
  double nx = -f(0, 1).imag();
  double ny = -f(0, 1).real();
  double nz = -f(0, 0).imag();
  const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (len < 1e-12) throw InvalidArgument("build_separating_mcqfa: word map value is +-I");
  nx /= len;
  ny /= len;
  nz /= len;
  Vector<Complex> plus, minus;
  if (nz >= 0) {
    plus = {1.0 + nz, Complex(nx, ny)};
    minus = {Complex(-nx, ny), 1.0 + nz};
  } else {
    plus = {Complex(nx, -ny), 1.0 - nz};
    minus = {1.0 - nz, Complex(-nx, -ny)};
  }
  const double pn = std::sqrt(l2_norm_sq(plus));
  const double mn = std::sqrt(l2_norm_sq(minus));
  Vector<Complex> u0{(plus[0] / pn + minus[0] / mn) / std::numbers::sqrt2,
                     (plus[1] / pn + minus[1] / mn) / std::numbers::sqrt2};

  // Rotate the basis so that u_f^x becomes q1.
  const std::array<Mat2, 2> u{ua, ub};
  Vector<Complex> fx = u0;
  for (int s : x) fx = mat_vec(u[static_cast<std::size_t>(s)], fx);
  const Mat2 g(2, 2, {std::conj(fx[0]), std::conj(fx[1]), -fx[1], fx[0]});
  const Mat2 gh = adjoint(g);
  Mcqfa<Complex> machine({mat_mul(mat_mul(g, ua), gh), mat_mul(mat_mul(g, ub), gh)}, mat_vec(g, u0), {0});

  const double residual = run(machine, y).accept_probability;
  const double defect = 1.0 - run(machine, x).accept_probability;
  return {std::move(machine), residual, defect, {a, b}};
}

}  // namespace wordsep
