// Coboundaries and an eigenvalue certificate for a Chacon-like substitution,
// then a refutation for Thue-Morse.
#include <iostream>

#include "sadic.hpp"

int main() {
  using namespace sadic;  // NOLINT(build/namespaces)

  auto cm = parse_directive("0 -> 010\n1 -> 21\n2 -> 210\n");
  auto cob = coboundary_space(cm, 0);
  std::cout << "coboundary dim " << cob.dim() << '\n';

  QuadNumber lb = parse_quad("3/2 - 1/2*sqrt(5)");
  if (auto cert = certify_eigenvalue(cm, lb)) {
    std::cout << "certified at level " << cert->level << ", w =";
    for (auto const& x : cert->w) {
      std::cout << ' ' << to_string(x);
    }
    std::cout << '\n';
  }

  auto tm  = parse_directive("0 -> 01\n1 -> 10\n");
  auto rep = host_diagnostic(tm, parse_quad("1/3"), 8);
  std::cout << "Thue-Morse, 1/3: " << to_string(rep.verdict) << '\n';
}
