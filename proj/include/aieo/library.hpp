#ifndef AIEO_LIBRARY_HPP
#define AIEO_LIBRARY_HPP

// Derivations shipped with the kernel. Every entry is checked by
// check_derivation before it is returned.

#include <string>
#include <vector>

#include "aieo/kernel.hpp"

namespace aieo {

struct NamedDerivation {
  std::string name;
  Derivation derivation;
};

// Both directions of
//   P(eps x. P(x)) -||- ~~P(tau x. ~P(x))
//   P(tau x. P(x)) -||- ~~P(eps x. ~P(x))
std::vector<NamedDerivation> derive_dual_equivalences();

// With quantifiers expanded:
//   P(eps S), S(eps S) |- exists x. (S(x) & P(x))
//   S(eps S), forall y. (S(y) -> P(y)) |- P(eps S)
std::vector<NamedDerivation> derive_witness_entailments();

// Contradictory and subaltern proofs for S(S,P) under P(tau S) -> P(eps S)
// and for S(S,~P) under P(eps S) -> P(tau S).
std::vector<NamedDerivation> derive_square_proofs();

// The theories that make P bivalent with respect to S in each direction.
Formula tau_to_eps_axiom();  // P(tau x. S(x)) -> P(eps x. S(x))
Formula eps_to_tau_axiom();  // P(eps x. S(x)) -> P(tau x. S(x))

std::vector<NamedDerivation> shipped_derivations();

}  // namespace aieo

#endif  // AIEO_LIBRARY_HPP
