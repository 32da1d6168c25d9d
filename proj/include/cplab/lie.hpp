#pragma once

// Jennings-Lazard-Zassenhaus series of a finite p-group, the graded Lie
// algebra over F_p built from its layers, and the checks that run on it:
// the restricted-power identity for ad, powerfulness of the term past the
// Lie class, the span L(G,H), fixed points of an induced automorphism, and
// eigenspace decomposition after adjoining an n-th root of unity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cplab/automorphism.hpp"
#include "cplab/field.hpp"
#include "cplab/group.hpp"
#include "cplab/linalg.hpp"

namespace cplab {

// Descending series G = terms[0] >= terms[1] >= ... of nontrivial
// subgroups; term(i) is 1-based and trivial past the end.
struct NpSeries {
  GroupPtr group;
  std::uint64_t p;
  std::vector<Subgroup> terms;

  std::size_t length() const { return terms.size(); }
  Subgroup term(std::size_t i) const;
};

// D_i = prod over j p^k >= i of power_subgroup(gamma_j, p^k). Throws
// NotAPGroup.
NpSeries jlz_series(const Subgroup& g, std::uint64_t p);

struct NpSeriesReport {
  bool pass = true;
  std::vector<std::string> violations;  // e.g. "[D1,D1] not in D2"
};

NpSeriesReport verify_np_series(const NpSeries& series);

struct LieLayer {
  std::size_t dim = 0;
  std::vector<Elem> basis;  // coset representatives in D_i
  // Coordinate code (base-p digits, basis[0] least significant) of x D_{i+1}
  // for x in D_i; -1 elsewhere.
  std::vector<std::int64_t> code_of;
};

struct StructureConstant {
  std::size_t i, a, j, b, k, c;  // [e_{i,a}, e_{j,b}] has coefficient c on e_{k, index}
  std::size_t index;
};

class GradedLieAlgebra {
 public:
  // Throws NotElementaryAbelianLayer when a quotient D_i/D_{i+1} is not
  // elementary abelian, PreconditionViolated when commutators leave the
  // expected layer.
  explicit GradedLieAlgebra(NpSeries series);

  std::uint64_t p() const { return series_.p; }
  const FiniteField& field() const { return field_; }
  const NpSeries& series() const { return series_; }
  const FiniteGroup& group() const { return *series_.group; }
  // Layers are 1-based to match the series.
  std::size_t num_layers() const { return layers_.size(); }
  const LieLayer& layer(std::size_t i) const { return layers_[i - 1]; }
  std::size_t offset(std::size_t i) const { return offsets_[i - 1]; }
  std::size_t dim() const { return dim_; }
  std::vector<std::size_t> layer_dims() const;
  std::size_t layer_of_index(std::size_t idx) const;

  // Structure constant: coefficient of basis vector k in [e_a, e_b].
  FiniteField::Elem constant(std::size_t a, std::size_t b, std::size_t k) const {
    return structure_[(a * dim_ + b) * dim_ + k];
  }
  std::vector<StructureConstant> sparse_constants() const;

  Vec zero() const { return Vec(dim_, 0); }
  Vec unit(std::size_t idx) const;
  Vec bracket(const Vec& u, const Vec& v) const;
  // Right-normed ad: rows are [e_j, a].
  Matrix ad(const Vec& a) const;

  // Depth i with x in D_i \ D_{i+1}; 0 for the identity.
  std::size_t depth(Elem x) const;
  // Layer-coordinate vector of x D_{i+1}; requires x in D_i.
  Vec layer_coords(std::size_t i, Elem x) const;
  // The same, embedded in the full algebra.
  Vec homogeneous(std::size_t i, Elem x) const;
  Vec embed(std::size_t i, const Vec& layer_vec) const;
  Vec restrict_to_layer(std::size_t i, const Vec& v) const;

  // L_p(G) = subalgebra generated by L_1, as an RREF basis per layer
  // (layer coordinates).
  const Matrix& generated_layer(std::size_t i) const { return generated_[i - 1]; }
  const std::vector<bool>& generated_flags() const { return generated_flags_; }
  // Nilpotency class of L_p(G) from its own lower central series.
  std::size_t generated_class() const { return generated_class_; }

  // Rows of the matrix: images phi(b_a) in layer coordinates.
  Matrix layer_action(std::size_t i, const Automorphism& phi) const;

 private:
  NpSeries series_;
  FiniteField field_;
  std::vector<LieLayer> layers_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
  std::vector<FiniteField::Elem> structure_;
  std::vector<Matrix> generated_;
  std::vector<bool> generated_flags_;
  std::size_t generated_class_ = 0;
};

GradedLieAlgebra build_graded_lie(NpSeries series);

// Both checks over all basis pairs / triples.
bool is_antisymmetric(const GradedLieAlgebra& a);
bool satisfies_jacobi(const GradedLieAlgebra& a);

// Least n >= 1 with (ad a)^n = 0.
std::size_t ad_nilpotency_index(const GradedLieAlgebra& a, const Vec& element);

struct LazardReport {
  Elem x;
  std::size_t depth;
  bool power_in_layer;  // x^p has a nonzero image in layer p*depth
  bool pass;
};

// (ad x*)^p against ad (x^p)*, where (x^p)* is taken in layer p*i and is 0
// when x^p lies deeper. The identity passes trivially.
LazardReport check_lazard(const GradedLieAlgebra& a, Elem x);

struct RileyReport {
  std::size_t lie_class;
  std::size_t powerful_term_order;  // |D_{c+1}|
  bool powerful;
  std::uint64_t group_exponent;
  std::uint64_t term_exponent;
  // exp(G) divides exp(D_{c+1}) * p^c
  bool exponent_split;
};

// Throws NotAPGroup.
RileyReport check_riley(const Subgroup& g, std::uint64_t p);
RileyReport check_riley(const GradedLieAlgebra& a);

struct SubalgebraLGH {
  std::vector<Matrix> layers;  // RREF basis of K n L_i in layer coordinates
  std::vector<std::size_t> dims;
  bool closed;                 // [K, K] in K
  std::size_t u;               // least u with [DL(G), K, ..., K] = 0 (u copies)
};

SubalgebraLGH subalgebra_LGH(const GradedLieAlgebra& a, const Subgroup& h);

struct LieFixedPointsReport {
  std::vector<std::size_t> centralizer_dims;  // C_{L_p(G)}(phi) per layer
  std::vector<std::size_t> span_dims;         // L_p(G, C_G(phi)) per layer
  bool pass;
};

// Throws NotCoprime.
LieFixedPointsReport lie_fixed_points(const GradedLieAlgebra& a, const Automorphism& phi);

struct EigenSpace {
  std::uint64_t power;             // eigenvalue omega^power
  FiniteField::Elem eigenvalue;
  Matrix basis;                    // layer coordinates over F_p[omega]
};

struct ExtendedLayer {
  std::size_t dim;
  Matrix action;  // over F_p[omega]
  std::vector<EigenSpace> eigenspaces;  // one per power 0..n-1
  std::size_t eigen_dim_sum() const;
};

struct ExtendedAlgebra {
  std::uint64_t n;
  FiniteField field;  // F_p[omega]
  FiniteField::Elem omega;
  std::vector<ExtendedLayer> layers;
  std::size_t bracket_pairs_checked = 0;
  bool bracket_rule_holds = true;
  bool dims_sum_ok = true;
};

// Smallest-code monic irreducible factor of the n-th cyclotomic polynomial
// over F_p. Throws NotCoprimeToP.
poly::Poly cyclotomic_factor(std::uint64_t n, std::uint32_t p);

// Throws NotCoprimeToP, PreconditionViolated (phi^n != 1 on the algebra).
ExtendedAlgebra extend_and_eigendecompose(const GradedLieAlgebra& a, const Automorphism& phi,
                                          std::uint64_t n);

}  // namespace cplab
