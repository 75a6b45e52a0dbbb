// Subcharacters, the ring structure and marks for S3 with coefficients in Z/2.

#include <iostream>

#include "monoburn/burnside.hpp"
#include "monoburn/catalog.hpp"

using namespace monoburn;

int main() {
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 2);
  std::cout << "S3, C = Z/2: " << t->num_classes() << " basis elements\n";
  for (int i = 0; i < t->num_classes(); ++i) std::cout << "  " << i << ": " << t->describe(i) << "\n";

  std::cout << "\ntable of marks (row = where, column = basis element)\n";
  for (const auto& row : mark_matrix(*t)) {
    for (long long m : row) std::cout << "  " << m;
    std::cout << "\n";
  }

  // products of the sign character on S3 with the regular element
  Element a = Element::basis(t, t->num_classes() - 1), b = Element::basis(t, 0);
  std::cout << "\n" << a.str() << " * " << b.str() << " = " << (a * b).str() << "\n";
  Element sq = a * a;
  std::cout << a.str() << " squared = " << sq.str() << "\n";

  auto units = find_units(t, 1);
  std::cout << "\n" << units.size() << " units with marks in {-1, 1}\n";
  for (const auto& u : units) std::cout << "  " << u.str() << "\n";
}
