// Separates a small set of binary words from everything else up to length 4
// with three machines: the sharpened affine set machine, the exact tensor
// of 3-state quantum machines, and its 2-state-per-word SU(2) lift.

#include <cstdio>

#include "wordsep/wordsep.hpp"

using namespace wordsep;

int main() {
  const std::vector<Word> xs{parse_word("ab"), parse_word("ba"), parse_word("abba")};
  const auto affine = set_machine(xs, 10, true);

  std::vector<Mcqfa<Rational>> exact_parts;
  std::vector<Mcqfa<Complex>> lifted_parts;
  for (const auto& x : xs) {
    exact_parts.push_back(banach_tarski_machine(x));
    lifted_parts.push_back(su2_lift(x));
  }
  const auto exact = tensor_machines(exact_parts, AcceptRule::AllComponents);
  const auto lifted = tensor_machines(lifted_parts, AcceptRule::AllComponents);

  std::printf("X = {ab, ba, abba}\n");
  std::printf("affine: %zu states, quantum exact: %zu states, quantum lifted: %zu states\n\n", affine.states(),
              exact.states(), lifted.states());
  std::printf("%-6s %-7s %-12s %-14s %s\n", "word", "in X", "affine", "quantum exact", "quantum lifted");
  for (const auto& z : all_words(2, 4)) {
    const bool member = std::find(xs.begin(), xs.end(), z) != xs.end();
    const Rational pa = run(affine, z).accept_probability;
    const Rational pe = run(exact, z).accept_probability;
    const double pl = run(lifted, z).accept_probability;
    std::printf("%-6s %-7s %-12s %-14.6g %.6g\n", z.size() ? to_string(z).c_str() : "eps", member ? "yes" : "no",
                pa.get_str().c_str(), pe.get_d(), pl);
  }
  std::printf("\nMembers of X get affine acceptance 1 and quantum acceptance 0;\n"
              "every other word gets affine acceptance <= 2/21 and quantum acceptance > 0.\n");
}
