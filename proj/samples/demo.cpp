// Walks through the local dihedral-type algebra: band word, v, Omega^2 and the verdict.

#include "sbcert/sbcert.hpp"

#include <iostream>

using namespace sbcert;

int main() {
  auto parsed = parse_presentation(R"(
[quiver]
vertices: v0
x: v0 -> v0
y: v0 -> v0
[sigma]
(x y) @ 2
[socle]
v0 = p:1 q:2
)");
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) std::cerr << d.to_string() << "\n";
    return 2;
  }
  const auto& alg = *parsed.algebra;

  auto w = enumerate_minimal_band_words(alg).front();
  std::cout << "band word   " << word_to_text(alg, w) << "\n";
  std::cout << "v symbolic  " << v_symbolic(alg, w).to_string() << "\n";
  std::cout << "v           " << to_string(v_parameter(alg, w)) << "\n";

  auto trace = omega_n(alg, build_band_module(alg, w, Rational(1)).rep, 4);
  std::cout << "dim Omega^n";
  for (int d : trace.dimensions) std::cout << " " << d;
  std::cout << "\n";

  auto rep = verify_omega_squared(alg, w, Rational(1));
  std::cout << "Omega^2 M(1) ~ M(" << to_string(rep.v) << "): " << (rep.iso_verified ? "yes" : "no") << "\n";

  auto verdict = theorem_verdict(alg);
  std::cout << "graph       " << to_string(verdict.graph_verdict.kind) << "\n";
  std::cout << "conclusion  " << to_string(verdict.conclusion) << "\n";
  return 0;
}
