#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cplab/group.hpp"

namespace cplab {

// An automorphism given by the images of the generators as words. The full
// element table is extended along the BFS tree of the group.
class Automorphism {
 public:
  // Throws NotBijective, NotHomomorphism (with a witness pair in the
  // message) or InvalidWord.
  static Automorphism build(GroupPtr group, std::vector<Word> gen_images);
  static Automorphism identity(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Word>& gen_images() const { return gen_images_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }
  Elem apply_power(Elem x, std::uint64_t k) const;
  std::uint64_t order() const { return order_; }
  bool is_coprime() const;

  bool leaves_invariant(const Subgroup& h) const;

 private:
  Automorphism(GroupPtr group, std::vector<Word> images, std::vector<Elem> table,
               std::uint64_t order)
      : group_(std::move(group)),
        gen_images_(std::move(images)),
        table_(std::move(table)),
        order_(order) {}

  GroupPtr group_;
  std::vector<Word> gen_images_;
  std::vector<Elem> table_;
  std::uint64_t order_;
};

struct TwistedData {
  Subgroup fixed;              // G_phi
  std::vector<Elem> twisted;   // G_{-phi} = {x^-1 x^phi}, sorted
  Subgroup commutator_phi;     // [G, phi]
  bool coprime;
};

TwistedData twisted_data(const Automorphism& phi);

Elem twist(const Automorphism& phi, Elem x);  // x^-1 x^phi

// {h^-1 h^phi : h in h} and the subgroup it generates.
std::vector<Elem> twisted_set(const Automorphism& phi, const Subgroup& h);
Subgroup commutator_with(const Subgroup& h, const Automorphism& phi);
Subgroup fixed_points(const Subgroup& h, const Automorphism& phi);

// Smallest phi-invariant subgroup containing seeds.
Subgroup phi_invariant_closure(const Automorphism& phi, std::span<const Elem> seeds);

// phi restricted to a phi-invariant subgroup, as an automorphism of the
// subgroup viewed as its own permutation group.
struct RestrictedAutomorphism {
  SubgroupAsGroup sub;
  Automorphism phi;
};
// Throws NotInvariant.
RestrictedAutomorphism restrict_to(const Automorphism& phi, const Subgroup& h);

// phi acting on G/N; the quotient shares G's generator order so the same
// generator words apply.
Automorphism induced_on_quotient(const Automorphism& phi, const QuotientGroup& q);

struct FamilyMemberCheck {
  std::string label;
  std::size_t order;
  bool pass;
  std::string detail;
};

struct CoprimeFactsReport {
  bool commutator_stable;  // [G,phi,phi] = [G,phi]
  std::vector<FamilyMemberCheck> quotient_fixed_points;
  std::vector<FamilyMemberCheck> centralizing;
  bool pass() const;
};

struct LabeledSubgroup {
  std::string label;
  Subgroup subgroup;
};

// Normal phi-invariant subgroups used by the coprime checks: terms of the
// derived and lower central series, center, Fitting subgroup, [G,phi], and
// the normal subgroups Z(G) n G_phi and core(G_phi) which lie inside G_phi.
// Duplicates are removed.
std::vector<LabeledSubgroup> default_normal_family(const Automorphism& phi,
                                                   const TwistedData& data);

// Throws NotCoprime.
CoprimeFactsReport check_coprime_facts(const Automorphism& phi, const TwistedData& data,
                                       const std::vector<LabeledSubgroup>& family);

// Throws NotCoprime; throws NotFound only if no invariant conjugate exists.
Subgroup phi_invariant_sylow(const Automorphism& phi, std::uint64_t p,
                             const std::optional<Subgroup>& contain = std::nullopt);

struct FactorizationWitness {
  Elem a;  // nontrivial fixed element
  Elem b;  // b^-1 b^phi = c^-1 a c
  Elem c;
};

struct FactorizationStatus {
  bool product_covers;
  bool criterion_holds;
  std::size_t product_size;
  std::optional<FactorizationWitness> witness;
};

// Throws NotCoprime.
FactorizationStatus factorization_status(const Automorphism& phi, const TwistedData& data);

struct Decomposition {
  Elem g;  // in G_{-phi}
  Elem h;  // in G_phi
};

// Throws NotNilpotent / NotCoprime, and NonUnique / NotFound when the
// decomposition theorem's conclusion fails.
Decomposition nilpotent_decompose(const Automorphism& phi, Elem x);
// Same scan with prevalidated data; the caller vouches for the hypotheses.
Decomposition decompose_scan(const Automorphism& phi, const TwistedData& data, Elem x);

struct FixedGenerationResult {
  std::vector<Elem> s;  // sorted
  bool generates;
};

// Throws PreconditionViolated naming the failed hypothesis.
FixedGenerationResult fixed_generation_S(const Automorphism& phi);

struct ProductFixedPointsReport {
  std::size_t product_order;
  std::size_t fixed_order;      // |N_phi|
  std::size_t generated_order;  // |<(N_i)_phi>|
  bool pass;
};

// Throws NotCoprime, NotNormal, NotInvariant.
ProductFixedPointsReport fixed_points_of_product(const Automorphism& phi,
                                                 const std::vector<Subgroup>& family);

struct SolubleExponentProbe {
  std::size_t d;
  std::uint64_t e;
  std::uint64_t exponent;
};

// Throws PreconditionViolated.
SolubleExponentProbe soluble_exponent_probe(const Automorphism& phi);

}  // namespace cplab
