// Lefschetz invariants: the five-point poset, chain counts and realizing an element.

#include <iostream>

#include "monoburn/catalog.hpp"
#include "monoburn/lefschetz.hpp"
#include "monoburn/random.hpp"

using namespace monoburn;

int main() {
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 3);

  MonomialPoset W = minus_one_poset(G, 3);
  std::cout << "five-point poset: Lambda = " << lefschetz(t, W).str() << "\n";

  Rng rng(2024);
  MonomialPoset X = random_poset(G, 3, rng);
  LefschetzReport r = lefschetz_report(t, X);
  std::cout << "\nrandom poset with " << X.size() << " vertices\n";
  for (const auto& c : r.tallies) std::cout << "  chains of length " << c.n << ": " << c.chains << " in " << c.orbits << " orbits\n";
  std::cout << "  Lambda = " << r.element.str() << "\n";
  std::cout << "  reduced = " << reduced_lefschetz(t, X).str() << "\n";
  std::cout << "  opposite poset gives " << lefschetz(t, opposite(X)).str() << "\n";
  std::cout << "  through vertex stabilizers: " << lefschetz_by_vertices(t, X).str() << "\n";

  Element a = 2 * Element::basis(t, 1) - Element::basis(t, t->num_classes() - 1);
  MonomialPoset R = realize(a);
  std::cout << "\nrealizing " << a.str() << " with " << R.size() << " vertices: Lambda = " << lefschetz(t, R).str()
            << "\n";
  MonomialPoset RX = realize(r.element);
  std::cout << "a realization of Lambda(X) with " << RX.size() << " vertices has the marks of X: "
            << (equal_by_marks(t, X, RX) ? "yes" : "no") << "\n";
}
