// Tensor induction from the trivial group to C2 and along a random (C2, S3)-biset.

#include <iostream>

#include "monoburn/catalog.hpp"
#include "monoburn/tensor_induction.hpp"

using namespace monoburn;

int main() {
  GroupPtr C1 = catalog_group("C1"), C2 = catalog_group("C2"), S3 = catalog_group("S3");

  // C2 acting on itself: squaring a set of two points gives four points, two of them swapped
  const Group& h = *C2;
  Biset U = biset_from_action(C1, C2, 2, 2, [&](Elt, Elt b, int u) { return h.mul(u, h.inv(b)); });
  auto t1 = make_table(C1, 2), t2 = make_table(C2, 2);
  Element two = 2 * Element::one(t1);
  std::cout << "T(" << two.str() << ") = " << tensor_induce_ring(U, two, t2).str() << "\n";
  std::cout << "T(" << (-Element::one(t1)).str() << ") = " << tensor_induce_ring(U, -Element::one(t1), t2).str() << "\n";

  Rng rng(5);
  Biset B = random_biset(C2, S3, 2, rng, 6);
  auto t3 = make_table(S3, 2);
  std::cout << "\nrandom (C2, S3)-biset with " << B.size() << " points\n";
  MonomialPoset X = random_poset(C2, 2, rng, PosetShape{2, 2, 3, 2});
  TensorInduction T = tensor_induce(B, X);
  std::cout << "  X has " << X.size() << " vertices, T(X) has " << T.poset.size() << "\n";
  std::cout << "  Lambda of T(X) = " << lefschetz(t3, T.poset).str() << "\n";
  std::cout << "  ring map on Lambda(X) = " << tensor_induce_ring(B, lefschetz(t2, X), t3).str() << "\n";

  NonFreeSetup s = non_free_setup(C2, 2);
  std::vector<MonomialPoset> cands;
  for (int i = 0; i < t2->num_classes(); ++i) cands.push_back(coset_poset(C2, 2, t2->rep(i)));
  CounterexampleReport r = non_free_counterexample(s, cands);
  std::cout << "\nnon left free composite is the identity biset: " << (r.composite_is_identity ? "yes" : "no") << "\n";
  if (r.found)
    std::cout << "  but a " << r.witness->size() << "-vertex poset goes to one with " << r.image->size()
              << " vertices\n";
}
