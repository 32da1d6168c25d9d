#include "cplab/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cplab/error.hpp"
#include "cplab/structure.hpp"

namespace cplab {

namespace {

void require_coprime(const Automorphism& phi) {
  if (!phi.is_coprime()) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(|G|, n) != 1 for |G| = " + std::to_string(phi.group().order()) +
                    ", n = " + std::to_string(phi.order()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Automorphism

Automorphism Automorphism::build(GroupPtr group, std::vector<Word> gen_images) {
  const FiniteGroup& G = *group;
  const std::size_t ngens = G.num_generators();
  if (gen_images.size() != ngens) {
    throw Error(ErrorCode::InvalidWord, std::to_string(gen_images.size()) +
                                            " generator images for " + std::to_string(ngens) +
                                            " generators");
  }
  std::vector<Elem> images(ngens);
  for (std::size_t s = 0; s < ngens; ++s) images[s] = G.evaluate(gen_images[s]);

  std::vector<Elem> table(G.order());
  table[kIdentity] = kIdentity;
  for (Elem x = 1; x < G.order(); ++x) {
    table[x] = G.mul(table[G.bfs_parent(x)], images[G.bfs_generator(x)]);
  }

  std::vector<bool> hit(G.order(), false);
  for (Elem y : table) {
    if (hit[y]) {
      throw Error(ErrorCode::NotBijective, "two elements share the image " + std::to_string(y));
    }
    hit[y] = true;
  }

  // Generator-wise law: phi(x s) = phi(x) phi(s) for all x and generators s.
  for (Elem x = 0; x < G.order(); ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      if (table[G.mul(x, G.generator(s))] != G.mul(table[x], images[s])) {
        throw Error(ErrorCode::NotHomomorphism,
                    "witness pair (element " + std::to_string(x) + ", generator " +
                        std::to_string(s + 1) + ")");
      }
    }
  }

  std::uint64_t order = 1;
  std::vector<bool> seen(G.order(), false);
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Elem y = x; !seen[y]; y = table[y]) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return Automorphism(std::move(group), std::move(gen_images), std::move(table), order);
}

Automorphism Automorphism::identity(GroupPtr group) {
  std::vector<Word> images;
  for (std::size_t s = 0; s < group->num_generators(); ++s) {
    images.push_back({static_cast<int>(s) + 1});
  }
  return build(std::move(group), std::move(images));
}

Elem Automorphism::apply_power(Elem x, std::uint64_t k) const {
  for (std::uint64_t i = 0; i < k % order_; ++i) x = table_[x];
  return x;
}

bool Automorphism::is_coprime() const { return std::gcd(group_->order(), order_) == 1; }

bool Automorphism::leaves_invariant(const Subgroup& h) const {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Elem g) { return h.contains(table_[g]); });
}

// ---------------------------------------------------------------------------
// Fixed points, twisted set, [G, phi]

Elem twist(const Automorphism& phi, Elem x) {
  const FiniteGroup& G = phi.group();
  return G.mul(G.inv(x), phi(x));
}

std::vector<Elem> twisted_set(const Automorphism& phi, const Subgroup& h) {
  std::vector<bool> mark(phi.group().order(), false);
  for (Elem x : h.members()) mark[twist(phi, x)] = true;
  std::vector<Elem> out;
  for (Elem y = 0; y < mark.size(); ++y) {
    if (mark[y]) out.push_back(y);
  }
  return out;
}

Subgroup commutator_with(const Subgroup& h, const Automorphism& phi) {
  return subgroup_generated(h.group_ptr(), twisted_set(phi, h));
}

Subgroup fixed_points(const Subgroup& h, const Automorphism& phi) {
  std::vector<Elem> fixed;
  for (Elem x : h.members()) {
    if (phi(x) == x) fixed.push_back(x);
  }
  return Subgroup::from_members(h.group_ptr(), std::move(fixed));
}

TwistedData twisted_data(const Automorphism& phi) {
  Subgroup whole = Subgroup::whole(phi.group_ptr());
  std::vector<Elem> twisted = twisted_set(phi, whole);
  Subgroup commutator = subgroup_generated(phi.group_ptr(), twisted);
  return TwistedData{fixed_points(whole, phi), std::move(twisted), std::move(commutator),
                     phi.is_coprime()};
}

Subgroup phi_invariant_closure(const Automorphism& phi, std::span<const Elem> seeds) {
  SubgroupBuilder builder(phi.group_ptr());
  builder.add_all(seeds);
  for (std::size_t i = 0; i < builder.generators().size(); ++i) {
    builder.add(phi(builder.generators()[i]));
  }
  return builder.build();
}

RestrictedAutomorphism restrict_to(const Automorphism& phi, const Subgroup& h) {
  if (!phi.leaves_invariant(h)) {
    throw Error(ErrorCode::NotInvariant, "subgroup is not phi-invariant");
  }
  SubgroupAsGroup sub = subgroup_as_group(h);
  const FiniteGroup& G = phi.group();
  const FiniteGroup& H = *sub.group;
  std::vector<Word> images;
  for (std::size_t s = 0; s < H.num_generators(); ++s) {
    Elem image_in_parent = phi(h.generators()[s]);
    Elem image = *H.find(G.images(image_in_parent));
    images.push_back(H.word(image));
  }
  Automorphism restricted = Automorphism::build(sub.group, std::move(images));
  return RestrictedAutomorphism{std::move(sub), std::move(restricted)};
}

Automorphism induced_on_quotient(const Automorphism& phi, const QuotientGroup& q) {
  return Automorphism::build(q.quotient, phi.gen_images());
}

// ---------------------------------------------------------------------------
// Coprime facts

bool CoprimeFactsReport::pass() const {
  auto ok = [](const FamilyMemberCheck& c) { return c.pass; };
  return commutator_stable && std::all_of(quotient_fixed_points.begin(),
                                          quotient_fixed_points.end(), ok) &&
         std::all_of(centralizing.begin(), centralizing.end(), ok);
}

std::vector<LabeledSubgroup> default_normal_family(const Automorphism& phi,
                                                   const TwistedData& data) {
  const GroupPtr& g = phi.group_ptr();
  Subgroup whole = Subgroup::whole(g);
  std::vector<LabeledSubgroup> family;
  auto push = [&family](std::string label, Subgroup s) {
    for (const auto& existing : family) {
      if (existing.subgroup == s) return;
    }
    family.push_back({std::move(label), std::move(s)});
  };

  auto derived = derived_series(whole);
  for (std::size_t i = 0; i < derived.terms.size(); ++i) {
    push("derived[" + std::to_string(i) + "]", derived.terms[i]);
  }
  auto lower = lower_central_series(whole);
  for (std::size_t i = 0; i < lower.terms.size(); ++i) {
    push("lower_central[" + std::to_string(i + 1) + "]", lower.terms[i]);
  }
  Subgroup z = center(g);
  push("center", z);
  push("fitting", fitting_subgroup(whole));
  push("commutator_phi", data.commutator_phi);
  push("center_fixed", intersection(z, data.fixed));
  push("core_fixed", normal_core(data.fixed, whole));
  push("trivial", Subgroup::trivial(g));
  return family;
}

CoprimeFactsReport check_coprime_facts(const Automorphism& phi, const TwistedData& data,
                                       const std::vector<LabeledSubgroup>& family) {
  require_coprime(phi);
  const FiniteGroup& G = phi.group();
  const GroupPtr& g = phi.group_ptr();
  Subgroup whole = Subgroup::whole(g);
  CoprimeFactsReport report;
  report.commutator_stable = commutator_with(data.commutator_phi, phi) == data.commutator_phi;

  for (const auto& [label, n] : family) {
    if (!is_normal_in(n, whole)) throw Error(ErrorCode::NotNormal, label + " is not normal");
    if (!phi.leaves_invariant(n)) {
      throw Error(ErrorCode::NotInvariant, label + " is not phi-invariant");
    }

    QuotientGroup q = quotient_group(g, n);
    Automorphism induced = induced_on_quotient(phi, q);
    std::vector<bool> image(q.quotient->order(), false);
    for (Elem x : data.fixed.members()) image[q.project(x)] = true;
    bool equal = true;
    std::size_t quotient_fixed = 0;
    for (Elem y = 0; y < q.quotient->order(); ++y) {
      const bool fixed = induced(y) == y;
      quotient_fixed += fixed ? 1 : 0;
      if (fixed != image[y]) equal = false;
    }
    report.quotient_fixed_points.push_back(
        {label, n.order(), equal,
         "|(G/N)_phi| = " + std::to_string(quotient_fixed)});

    if (n.is_subset_of(data.fixed)) {
      bool centralizes = true;
      for (Elem a : data.commutator_phi.generators()) {
        for (Elem m : n.generators()) {
          if (G.mul(a, m) != G.mul(m, a)) centralizes = false;
        }
      }
      report.centralizing.push_back({label, n.order(), centralizes, ""});
    }
  }
  return report;
}

Subgroup phi_invariant_sylow(const Automorphism& phi, std::uint64_t p,
                             const std::optional<Subgroup>& contain) {
  require_coprime(phi);
  const FiniteGroup& G = phi.group();
  const GroupPtr& g = phi.group_ptr();
  Subgroup sylow = sylow_subgroup(Subgroup::whole(g), p);
  if (sylow.is_trivial() && !contain) return sylow;

  // Scan conjugates P^c = c^-1 P c. A generator x of P^c has the form
  // c^-1 y c; P^c is invariant iff c phi(x) c^-1 lies in P.
  std::vector<Elem> conj_gens(sylow.generators().size());
  for (Elem c = 0; c < G.order(); ++c) {
    const Elem c_inv = G.inv(c);
    for (std::size_t i = 0; i < conj_gens.size(); ++i) {
      conj_gens[i] = G.conj(sylow.generators()[i], c);
    }
    bool ok = std::all_of(conj_gens.begin(), conj_gens.end(), [&](Elem x) {
      return sylow.contains(G.conj(phi(x), c_inv));
    });
    if (ok && contain) {
      ok = std::all_of(contain->generators().begin(), contain->generators().end(),
                       [&](Elem h) { return sylow.contains(G.conj(h, c_inv)); });
    }
    if (ok) {
      std::vector<Elem> members;
      members.reserve(sylow.order());
      for (Elem y : sylow.members()) members.push_back(G.conj(y, c));
      std::sort(members.begin(), members.end());
      return Subgroup(g, std::move(members), std::move(conj_gens));
    }
  }
  throw Error(ErrorCode::NotFound, "no phi-invariant Sylow subgroup");
}

// ---------------------------------------------------------------------------
// Factorization G = G_{-phi} G_phi

FactorizationStatus factorization_status(const Automorphism& phi, const TwistedData& data) {
  require_coprime(phi);
  const FiniteGroup& G = phi.group();
  FactorizationStatus status{};

  std::vector<bool> product(G.order(), false);
  for (Elem t : data.twisted) {
    for (Elem h : data.fixed.members()) product[G.mul(t, h)] = true;
  }
  status.product_size = static_cast<std::size_t>(std::count(product.begin(), product.end(), true));
  status.product_covers = status.product_size == G.order();

  const auto& class_ids = G.conjugacy_class_ids();
  constexpr Elem kNone = std::numeric_limits<Elem>::max();
  std::vector<Elem> least_fixed_in_class(G.order(), kNone);
  for (Elem a : data.fixed.members()) {
    if (a == kIdentity) continue;
    Elem& slot = least_fixed_in_class[class_ids[a]];
    if (slot == kNone) slot = a;
  }

  status.criterion_holds = true;
  for (Elem t : data.twisted) {
    if (t == kIdentity) continue;
    Elem a = least_fixed_in_class[class_ids[t]];
    if (a == kNone) continue;
    status.criterion_holds = false;
    Elem c = *are_conjugate(G, a, t);
    Elem b = 0;
    while (twist(phi, b) != t) ++b;
    status.witness = FactorizationWitness{a, b, c};
    break;
  }
  return status;
}

// ---------------------------------------------------------------------------
// Unique decomposition for nilpotent groups

Decomposition decompose_scan(const Automorphism& phi, const TwistedData& data, Elem x) {
  const FiniteGroup& G = phi.group();
  std::optional<Decomposition> found;
  for (Elem g : data.twisted) {
    Elem h = G.mul(G.inv(g), x);
    if (!data.fixed.contains(h)) continue;
    if (found) {
      throw Error(ErrorCode::NonUnique,
                  "element " + std::to_string(x) + " has two decompositions");
    }
    found = Decomposition{g, h};
  }
  if (!found) {
    throw Error(ErrorCode::NotFound, "element " + std::to_string(x) + " has no decomposition");
  }
  return *found;
}

Decomposition nilpotent_decompose(const Automorphism& phi, Elem x) {
  require_coprime(phi);
  if (!is_nilpotent(Subgroup::whole(phi.group_ptr()))) {
    throw Error(ErrorCode::NotNilpotent, "decomposition needs a nilpotent group");
  }
  return decompose_scan(phi, twisted_data(phi), x);
}

// ---------------------------------------------------------------------------
// Generation by fixed points, fixed points of products, solubility

FixedGenerationResult fixed_generation_S(const Automorphism& phi) {
  if (!phi.is_coprime()) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'coprime action' fails");
  }
  const GroupPtr& g = phi.group_ptr();
  if (!is_nilpotent(Subgroup::whole(g))) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'G nilpotent' fails");
  }
  TwistedData data = twisted_data(phi);
  if (data.commutator_phi.order() != g->order()) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'G = [G,phi]' fails");
  }

  std::vector<bool> in_s(g->order(), false);
  std::size_t s_size = 0;
  const auto& tw = data.twisted;
  for (std::size_t i = 0; i < tw.size() && s_size < data.fixed.order(); ++i) {
    for (std::size_t j = i; j < tw.size() && s_size < data.fixed.order(); ++j) {
      const Elem seeds[2] = {tw[i], tw[j]};
      Subgroup k = phi_invariant_closure(phi, seeds);
      for (Elem h : k.members()) {
        if (data.fixed.contains(h) && !in_s[h]) {
          in_s[h] = true;
          ++s_size;
        }
      }
    }
  }
  FixedGenerationResult result;
  for (Elem h = 0; h < in_s.size(); ++h) {
    if (in_s[h]) result.s.push_back(h);
  }
  result.generates = subgroup_generated(g, result.s) == data.fixed;
  return result;
}

ProductFixedPointsReport fixed_points_of_product(const Automorphism& phi,
                                                 const std::vector<Subgroup>& family) {
  require_coprime(phi);
  const GroupPtr& g = phi.group_ptr();
  Subgroup whole = Subgroup::whole(g);
  SubgroupBuilder product(g);
  SubgroupBuilder generated(g);
  for (const Subgroup& n : family) {
    if (!is_normal_in(n, whole)) throw Error(ErrorCode::NotNormal, "family member not normal");
    if (!phi.leaves_invariant(n)) {
      throw Error(ErrorCode::NotInvariant, "family member not phi-invariant");
    }
    product.add_all(n.generators());
    generated.add_all(fixed_points(n, phi).generators());
  }
  Subgroup n = product.build();
  Subgroup fixed = fixed_points(n, phi);
  Subgroup gen = generated.build();
  return ProductFixedPointsReport{n.order(), fixed.order(), gen.order(), fixed == gen};
}

SolubleExponentProbe soluble_exponent_probe(const Automorphism& phi) {
  if (!phi.is_coprime()) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'coprime action' fails");
  }
  const GroupPtr& g = phi.group_ptr();
  Subgroup whole = Subgroup::whole(g);
  auto series = derived_series(whole);
  if (!series.reaches_trivial()) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'G soluble' fails");
  }
  TwistedData data = twisted_data(phi);
  if (data.commutator_phi.order() != g->order()) {
    throw Error(ErrorCode::PreconditionViolated, "hypothesis 'G = [G,phi]' fails");
  }
  std::uint64_t e = 1;
  for (Elem x : data.twisted) e = std::lcm(e, g->element_order(x));
  return SolubleExponentProbe{series.length(), e, g->exponent()};
}

}  // namespace cplab
