#pragma once

// Concrete groups and automorphisms: the affine counterexample over GF(125)
// and the named families used by the test corpus.
//
// Instance spec JSON:
//   {"id": str?, "name": family, "params": {...}, "automorphism": recipe?}
// Families and params:
//   cyclic {m}            rotation of m points
//   dihedral {m}          rotation r, reflection s on m points (m >= 3)
//   symmetric {m}         (0 1 ... m-1), (0 1)
//   heisenberg {p}        unitriangular 3x3 over F_p acting on F_p^3; x, y
//   modular {p}           <a,b | a^(p^2), b^p, a^b = a^(1+p)> on Z/p^2
//   quaternion {m}        dicyclic group of order 4m, regular; a, b
//   additive {p,k}        translations of GF(p^k) by 1, t, ..., t^(k-1)
//   affine {p,k,m?}       x -> x+1 and x -> g x, g of order m (default p^k-1)
//   direct_product {factors: [spec...]}   generators concatenated
//   permutations {degree, generators}
// Automorphism recipes ({"recipe": ...}):
//   identity | power {k} | swap | cycle | frobenius | images {images}
//   inner {word} | factorwise {factors: [recipe...]}
// Raw group JSON ({"degree", "generators", "automorphism": {"images"}}) is
// accepted wherever an instance spec is.

#include <optional>
#include <string>
#include <vector>

#include "cplab/automorphism.hpp"
#include "cplab/field.hpp"
#include "cplab/group.hpp"
#include "json.hpp"

namespace cplab {

struct GlaubermanExample {
  FiniteField field;
  FiniteField::Elem multiplier;  // generator of GF(125)^*
  GroupPtr group;                // translation, scaling
  Automorphism phi;              // translation -> translation, scaling -> scaling^5
  Permutation frobenius;         // x -> x^5 on field codes
};

GlaubermanExample build_glauberman_example();

struct Instance {
  std::string id;
  GroupPtr group;
  std::optional<Automorphism> phi;
  nlohmann::json spec;
};

// Throws UnknownSpec, CapExceeded, ParseError.
Instance build_corpus_instance(const nlohmann::json& spec, std::size_t cap = kDefaultCap);

// Named constructors (generator order documented above).
GroupPtr cyclic_group(std::size_t m);
GroupPtr dihedral_group(std::size_t m);
GroupPtr symmetric_group(std::size_t m);
GroupPtr heisenberg_group(std::uint32_t p);
GroupPtr modular_group(std::uint32_t p);
GroupPtr quaternion_group(std::size_t m);

}  // namespace cplab
