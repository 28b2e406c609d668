// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "wordsep/wordsep.hpp"

using namespace wordsep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Word unary(long n) { return Word(std::vector<int>(static_cast<std::size_t>(n), 0), 1); }

Word random_word(std::mt19937_64& rng, std::size_t max_len, int k = 2) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> sym(0, k - 1);
  std::vector<int> s(len(rng));
  for (int& c : s) c = sym(rng);
  return Word(std::move(s), k);
}

// Distinct random words, sorted.
std::vector<Word> random_set(std::mt19937_64& rng, std::size_t size, std::size_t max_len) {
  std::set<Word> out;
  while (out.size() < size) out.insert(random_word(rng, max_len));
  return {out.begin(), out.end()};
}

std::string str(const Word& w) { return "\"" + to_string(w) + "\""; }

Outcome rotation() {
  for (long d = 0; d <= 20; ++d)
    for (long t = 1; t <= 20; ++t) {
      const auto m = rotation_machine(d, t);
      const double p1 = run(m, unary(d)).accept_probability;
      const double p0 = run(m, unary(d + t)).accept_probability;
      if (std::abs(p1 - 1.0) > 1e-9 || p0 > 1e-9)
        return {false, "d=" + std::to_string(d) + " t=" + std::to_string(t)};
    }
  return {true, "441 machines"};
}

Outcome swap_pair() {
  const auto m = swap_pair_machine();
  const auto ab = final_state(m, parse_word("ab"));
  const auto ba = final_state(m, parse_word("ba"));
  const Vector<Complex> e1{1.0, 0.0}, e2{0.0, 1.0};
  const bool ok = (max_abs_diff(ab, e1) <= 1e-12 && max_abs_diff(ba, e2) <= 1e-12) ||
                  (max_abs_diff(ab, e2) <= 1e-12 && max_abs_diff(ba, e1) <= 1e-12);
  return {ok, "ab -> (" + to_string(ab[0].real()) + ", " + to_string(ab[1].real()) + "), ba -> (" +
                  to_string(ba[0].real()) + ", " + to_string(ba[1].real()) + ")"};
}

Outcome orthogonal_obstruction() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> blocks(0, 6);
  auto orth = [&] {
    const double c = std::cos(angle(rng)), s = std::sqrt(1.0 - c * c) * (coin(rng) ? 1.0 : -1.0);
    return coin(rng) ? Matrix<Complex>(2, 2, {c, s, s, -c}) : Matrix<Complex>(2, 2, {c, -s, s, c});
  };
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double t0 = angle(rng);
    const Mcqfa<Complex> m({orth(), orth()}, {std::cos(t0), std::sin(t0)}, {0});
    const int total = blocks(rng);
    const int na = std::uniform_int_distribution<int>(0, total)(rng);
    std::vector<int> pattern(static_cast<std::size_t>(total), 1);
    std::fill(pattern.begin(), pattern.begin() + na, 0);
    auto build = [&] {
      std::shuffle(pattern.begin(), pattern.end(), rng);
      std::vector<int> s;
      for (int b : pattern) s.insert(s.end(), {b, b});
      return Word(std::move(s), 2);
    };
    const Word x = build(), y = build();
    worst = std::max(worst, theorem2_obstruction_check(m, x, y));
  }
  return {worst <= 1e-9, "max gap " + to_string(worst)};
}

Outcome subtraction() {
  for (long d = 0; d <= 50; ++d)
    for (long t = 1; t <= 50; ++t) {
      const auto m = subtraction_machine(d, t);
      if (run(m, unary(d)).accept_probability != 1 || run(m, unary(d + t)).accept_probability != 0)
        return {false, "d=" + std::to_string(d) + " t=" + std::to_string(t)};
    }
  return {true, "2550 machines, exact"};
}

Outcome encoding_pairs() {
  const auto words = all_words(2, 8);
  std::size_t pairs = 0;
  for (const auto& x : words)
    for (const auto& y : words) {
      if (x == y) continue;
      const auto m = encoding_machine(x, y);
      if (run(m, x).accept_probability != 1 || run(m, y).accept_probability != 0)
        return {false, str(x) + " vs " + str(y)};
      ++pairs;
    }
  return {true, std::to_string(pairs) + " ordered pairs, exact"};
}

// Sweeps x (|x| <= 5) against z (|z| <= 7) for a family of machines and a
// per-scale bound, plus a ternary spot check.
Outcome bounded_sweep(const std::function<Afa(const Word&, long)>& make, const std::function<Rational(long)>& bound,
                      bool also_two_thirds) {
  Rational worst = 0;
  auto sweep = [&](int k_alpha, std::size_t x_len, std::size_t z_len) -> Outcome {
    const auto xs = all_words(k_alpha, x_len);
    const auto zs = all_words(k_alpha, z_len);
    for (long k : {1L, 10L, 100L}) {
      const Rational b = bound(k);
      for (const auto& x : xs) {
        const Afa m = make(x, k);
        if (run(m, x).accept_probability != 1) return {false, "member " + str(x) + " k=" + std::to_string(k)};
        for (const auto& z : zs) {
          if (z == x) continue;
          const Rational p = run(m, z).accept_probability;
          if (p > b || (also_two_thirds && k == 1 && p > fraction(2, 3)))
            return {false, str(x) + " accepts " + str(z) + " with " + p.get_str() + " at k=" + std::to_string(k)};
          if (k == 1) worst = std::max(worst, p);
        }
      }
    }
    return {true, ""};
  };
  if (auto r = sweep(2, 5, 7); !r.ok) return r;
  if (auto r = sweep(3, 3, 4); !r.ok) return r;
  return {true, "max non-member acceptance at k=1: " + worst.get_str()};
}

Outcome singleton_vs_set() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> ysize(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto all = random_set(rng, ysize(rng) + 1, 8);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const std::size_t xi = pick(rng);
    std::vector<Word> ys;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != xi) ys.push_back(all[i]);
    const auto m = singleton_vs_set_machine(all[xi], ys);
    if (run(m, all[xi]).accept_probability != 1) return {false, "x = " + str(all[xi])};
    for (const auto& y : ys)
      if (run(m, y).accept_probability != 0) return {false, "y = " + str(y)};
  }
  return {true, "200 instances, exact"};
}

Outcome set_machines() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> xsize(1, 3);
  const auto zs = all_words(2, 7);
  Rational worst_plain = 0, worst_sharp = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto xs = random_set(rng, xsize(rng), 6);
    const auto plain = set_machine(xs);
    const auto sharp = set_machine(xs, 100, true);
    for (const auto& z : zs) {
      const bool member = std::binary_search(xs.begin(), xs.end(), z);
      const Rational p = run(plain, z).accept_probability;
      const Rational q = run(sharp, z).accept_probability;
      if (member && (p != 1 || q != 1)) return {false, "member " + str(z) + " not accepted"};
      if (!member) {
        if (p > fraction(2, 3) || q > fraction(2, 201)) return {false, "non-member " + str(z)};
        worst_plain = std::max(worst_plain, p);
        worst_sharp = std::max(worst_sharp, q);
      }
    }
  }
  return {true, "max non-member " + worst_plain.get_str() + " plain, " + worst_sharp.get_str() + " sharpened"};
}

Outcome banach_tarski_exact() {
  const auto xs = all_words(2, 5);
  const auto ys = all_words(2, 7);
  Rational smallest = 1;
  for (const auto& x : xs) {
    const auto m = banach_tarski_machine(x);
    if (run(m, x).accept_probability != 0) return {false, "x = " + str(x)};
    for (const auto& y : ys) {
      if (y == x) continue;
      const Rational p = run(m, y).accept_probability;
      if (p <= 0) return {false, str(x) + " vs " + str(y)};
      smallest = std::min(smallest, p);
    }
  }
  return {true, "smallest nonzero " + to_string(smallest.get_d())};
}

Outcome tensor_sets() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> xsize(1, 3);
  const auto zs = all_words(2, 6);
  double smallest = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto xs = random_set(rng, xsize(rng), 6);
    std::vector<Mcqfa<Rational>> exact_parts;
    std::vector<Mcqfa<Complex>> lifted_parts;
    for (const auto& x : xs) {
      exact_parts.push_back(banach_tarski_machine(x));
      lifted_parts.push_back(su2_lift(x));
    }
    const auto exact = tensor_machines(exact_parts, AcceptRule::AllComponents);
    const auto lifted = tensor_machines(lifted_parts, AcceptRule::AllComponents);
    if (lifted.states() != (std::size_t{1} << xs.size())) return {false, "lifted machine has wrong size"};
    std::vector<Word> checked = zs;
    checked.insert(checked.end(), xs.begin(), xs.end());
    for (const auto& z : checked) {
      const bool member = std::binary_search(xs.begin(), xs.end(), z);
      const Rational p = run(exact, z).accept_probability;
      const double q = run(lifted, z).accept_probability;
      if (member != (p == 0)) return {false, "exact machine wrong on " + str(z)};
      if (member ? q > 1e-9 : q <= 1e-6)
        return {false, "lifted machine gives " + to_string(q) + " on " + str(z) + " (member=" + (member ? "1" : "0") + ")"};
      if (!member) smallest = std::min(smallest, q);
    }
  }
  return {true, "smallest lifted non-member acceptance " + to_string(smallest)};
}

Outcome derived_series() {
  const auto words = all_words(2, 6);
  for (const auto& x : words)
    for (const auto& y : words) {
      if (x == y) continue;
      const FreeWord w = pair_to_element(x, y);
      if (in_derived2(w) || in_derived1(w) != !is_easy_pair(x, y)) return {false, str(x) + " vs " + str(y)};
    }
  return {true, std::to_string(words.size() * (words.size() - 1)) + " ordered pairs"};
}

Outcome freeness() {
  const auto& u = free_rotations();
  const std::array<Matrix<Rational>, 4> gens{u[0], transpose(u[0]), u[1], transpose(u[1])};
  const Matrix<Rational> id = Matrix<Rational>::identity(3);
  std::size_t count = 0;
  std::function<bool(const Matrix<Rational>&, int, int)> extend = [&](const Matrix<Rational>& p, int last, int len) {
    if (len == 8) return true;
    for (int g = 0; g < 4; ++g) {
      if (last >= 0 && (g ^ 1) == last) continue;  // would cancel
      const auto q = mat_mul(p, gens[static_cast<std::size_t>(g)]);
      ++count;
      if (q == id) return false;
      if (!extend(q, g, len + 1)) return false;
    }
    return true;
  };
  const bool ok = extend(id, -1, 0);
  return {ok, std::to_string(count) + " reduced words"};
}

Outcome inner_identity() {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Word x = random_word(rng, 8), y = random_word(rng, 8);
    Vector<Complex> u0{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
    const double n = std::sqrt(l2_norm_sq(u0));
    for (auto& c : u0) c /= n;
    worst = std::max(worst, inner_product_identity_check(x, y, random_su2(rng), random_su2(rng), u0));
  }
  return {worst <= 1e-10, "max error " + to_string(worst)};
}

Outcome wordmap_regression() {
  const Word x = parse_word("ab"), y = parse_word("ba");
  SearchOptions opt;
  opt.restarts = 64;
  opt.seed = 0;
  const auto est = estimate_alpha(pair_to_element(x, y), opt);
  if (est.alpha_hat < std::numbers::pi / 2 - 1e-3) return {false, "alpha_hat " + to_string(est.alpha_hat)};
  const auto cert = build_separating_mcqfa(x, y, est);
  return {cert.residual <= 1e-6,
          "alpha_hat " + to_string(est.alpha_hat) + ", residual " + to_string(cert.residual)};
}

bool brute_force_separates(const Word& x, const Word& y, std::size_t n) {
  Dfa d{n, x.alphabet_size(), std::vector<std::size_t>(n * static_cast<std::size_t>(x.alphabet_size()), 0)};
  while (true) {
    if (d.separates(x, y)) return true;
    std::size_t i = 0;
    while (i < d.table.size() && ++d.table[i] == n) d.table[i++] = 0;
    if (i == d.table.size()) return false;
  }
}

Outcome baseline() {
  for (const auto& [xs, ys] : {std::pair{"ab", "ba"}, std::pair{"a", "aa"}}) {
    const Word x = parse_word(xs), y = parse_word(ys);
    const auto n = min_separating_dfa_size(x, y, 4);
    std::optional<std::size_t> truth;
    for (std::size_t k = 1; k <= 4 && !truth; ++k)
      if (brute_force_separates(x, y, k)) truth = k;
    if (n != std::optional<std::size_t>(2) || truth != n) return {false, std::string(xs) + " vs " + ys};
  }
  return {true, "both pairs need 2 states"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rotation machines R_{d,t}, d,t <= 20", 1, rotation},
      {2, "real 2-state machine for (ab, ba)", 1, swap_pair},
      {3, "real orthogonal machines cannot split {aa,bb}* pairs", 5, orthogonal_obstruction},
      {4, "subtraction AfA S_{d,t}, d,t <= 50", 5, subtraction},
      {5, "encoding AfA E_{x,y}, binary pairs up to length 8", 60, encoding_pairs},
      {6, "bounded AfA B_x, |x| <= 5 vs |z| <= 7",
       120, [] {
         return bounded_sweep([](const Word& x, long k) { return bounded_machine(x, k); },
                              [](long k) { return fraction(k + 1, 2 * k + 1); }, true);
       }},
      {7, "three-state AfA, |x| <= 5 vs |z| <= 7",
       120, [] {
         return bounded_sweep([](const Word& x, long k) { return three_state_machine(x, k); },
                              [](long k) { return fraction(2, 2 * k + 1); }, false);
       }},
      {8, "singleton vs set AfA E_{x,Y}", 30, singleton_vs_set},
      {9, "set AfA B'_X, plain and sharpened", 120, set_machines},
      {10, "exact 3-state MCQFA M_x, |x| <= 5 vs |y| <= 7", 60, banach_tarski_exact},
      {11, "tensor of M_x and its SU(2) lift", 60, tensor_sets},
      {12, "second derived subgroup excludes pair elements", 60, derived_series},
      {13, "free rotations: no reduced word of length <= 8 is trivial", 30, freeness},
      {14, "inner-product identity", 5, inner_identity},
      {15, "word-map regression for (ab, ba)", 60, wordmap_regression},
      {16, "minimal separating DFA baseline", 5, baseline},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= c.limit_s) {
      out.ok = false;
      out.detail += " (over time limit " + to_string(c.limit_s) + " s)";
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %2d %s: %s [%.3f s]\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
