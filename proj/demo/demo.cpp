// Walk-through: normal ordering, the commutator with the generic Dirac
// operator, an index pairing, and the degree-one calculus.

#include "nct/nct.hpp"

#include <iostream>

int main() {
  using namespace nct;
  const Rational q(1, 2);
  const auto a = AlgebraElement::alpha(q), as = AlgebraElement::alpha_star(q), b = AlgebraElement::beta(q),
             bs = AlgebraElement::beta_star(q);

  std::cout << "q = " << to_string(q) << "\n";
  std::cout << "alpha* alpha        = " << (as * a).str() << "\n";
  std::cout << "alpha alpha*        = " << (a * as).str() << "\n";
  std::cout << "beta alpha          = " << (b * a).str() << "\n";
  std::cout << "alpha* alpha + beta* beta = " << (as * a + bs * b).str() << "\n\n";

  auto sc = symbolic_commutator(a * b);
  std::cout << "[D, pi(alpha beta)] = " << sc.s_coeff.str() << " (x) S + " << sc.plain.str() << " + tails\n";
  auto d = differential(a * a * bs);
  std::cout << "d(alpha^2 beta*) in Omega^1: " << d.str() << "\n\n";

  auto idx = stabilized_index(u_against_dirac(DiracSpec::generic()), 8);
  std::cout << "index P u P against the generic D: " << idx.index << " (windows " << idx.windows[0].m_row << ", "
            << idx.windows[1].m_row << ")\n";
  auto sphere = sphere_index_pairing(8);
  std::cout << "sphere pairing with P0: " << sphere.index << "\n\n";

  auto w = UniversalForm::d(a) * as;
  auto s = sigma_form(w);
  std::cout << "sigma(d alpha alpha*) = " << s.str() << ", (w, w) = " << to_string(l2_inner_product(s, s)) << "\n";
  return 0;
}
