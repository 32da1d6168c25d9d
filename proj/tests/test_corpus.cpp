#include <gtest/gtest.h>

#include <set>

#include "cplab/corpus.hpp"
#include "cplab/error.hpp"
#include "cplab/harness.hpp"
#include "cplab/structure.hpp"

using namespace cplab;

namespace {

ErrorCode code_of(const json& spec, std::size_t cap = kDefaultCap) {
  try {
    build_corpus_instance(spec, cap);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << spec.dump();
  return ErrorCode::NotFound;
}

std::size_t order_of(const json& spec) { return build_corpus_instance(spec).group->order(); }

const GlaubermanExample& glauberman() {
  static const GlaubermanExample ex = build_glauberman_example();
  return ex;
}

}  // namespace

TEST(Families, Orders) {
  EXPECT_EQ(order_of({{"name", "cyclic"}, {"params", {{"m", 12}}}}), 12u);
  EXPECT_EQ(order_of({{"name", "cyclic"}, {"params", {{"m", 1}}}}), 1u);
  EXPECT_EQ(order_of({{"name", "dihedral"}, {"params", {{"m", 7}}}}), 14u);
  EXPECT_EQ(order_of({{"name", "symmetric"}, {"params", {{"m", 5}}}}), 120u);
  EXPECT_EQ(order_of({{"name", "heisenberg"}, {"params", {{"p", 5}}}}), 125u);
  EXPECT_EQ(order_of({{"name", "modular"}, {"params", {{"p", 3}}}}), 27u);
  EXPECT_EQ(order_of({{"name", "quaternion"}, {"params", {{"m", 2}}}}), 8u);
  EXPECT_EQ(order_of({{"name", "quaternion"}, {"params", {{"m", 3}}}}), 12u);
  EXPECT_EQ(order_of({{"name", "additive"}, {"params", {{"p", 2}, {"k", 3}}}}), 8u);
  EXPECT_EQ(order_of({{"name", "affine"}, {"params", {{"p", 7}, {"k", 1}, {"m", 3}}}}), 21u);
  EXPECT_EQ(order_of({{"name", "affine"}, {"params", {{"p", 3}, {"k", 2}}}}), 72u);
  EXPECT_EQ(order_of({{"name", "glauberman"}}), 15500u);
  EXPECT_EQ(order_of({{"degree", 4}, {"generators", {{1, 2, 0, 3}, {1, 2, 3, 0}}}}), 24u);
  EXPECT_EQ(order_of(json::parse(R"({"name": "direct_product", "params": {"factors": [
      {"name": "cyclic", "params": {"m": 4}}, {"name": "dihedral", "params": {"m": 3}}]}})")),
            24u);
}

TEST(Families, QuaternionStructure) {
  const auto q8 = quaternion_group(2);
  EXPECT_EQ(center(q8).order(), 2u);
  std::size_t involutions = 0;
  for (Elem x = 0; x < q8->order(); ++x) involutions += q8->element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(q8->exponent(), 4u);
}

TEST(Families, HeisenbergAndModular) {
  const auto he = heisenberg_group(3);
  EXPECT_EQ(he->exponent(), 3u);
  EXPECT_EQ(center(he).order(), 3u);
  const auto m = modular_group(3);
  EXPECT_EQ(m->exponent(), 9u);
  EXPECT_EQ(center(m).order(), 3u);  // <a^p>
  EXPECT_EQ(derived_length(Subgroup::whole(m)), 2u);
}

TEST(Specs, Errors) {
  EXPECT_EQ(code_of({{"name", "tetrahedral"}}), ErrorCode::UnknownSpec);
  EXPECT_EQ(code_of({{"params", {{"m", 3}}}}), ErrorCode::ParseError);
  EXPECT_EQ(code_of({{"name", "cyclic"}}), ErrorCode::ParseError);
  EXPECT_EQ(code_of({{"name", "cyclic"}, {"params", {{"m", -2}}}}), ErrorCode::ParseError);
  EXPECT_EQ(code_of({{"name", "heisenberg"}, {"params", {{"p", 4}}}}), ErrorCode::ParseError);
  EXPECT_EQ(code_of({{"name", "affine"}, {"params", {{"p", 5}, {"k", 1}, {"m", 3}}}}), ErrorCode::ParseError);
  EXPECT_EQ(code_of({{"degree", 3}, {"generators", {{0, 0, 1}}}}), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of({{"name", "cyclic"}, {"params", {{"m", 5}}}, {"automorphism", {{"recipe", "twist"}}}}),
            ErrorCode::UnknownSpec);
  EXPECT_EQ(code_of({{"name", "cyclic"}, {"params", {{"m", 5}}}, {"automorphism", {{"recipe", "swap"}}}}),
            ErrorCode::UnknownSpec);
  EXPECT_EQ(code_of({{"name", "cyclic"}, {"params", {{"m", 5}}}, {"automorphism", {{"recipe", "frobenius"}}}}),
            ErrorCode::UnknownSpec);
  EXPECT_EQ(code_of({{"name", "cyclic"}, {"params", {{"m", 6}}}, {"automorphism", {{"recipe", "power"}, {"k", 2}}}}),
            ErrorCode::NotBijective);
  EXPECT_EQ(code_of({{"name", "symmetric"}, {"params", {{"m", 6}}}}, 500), ErrorCode::CapExceeded);
  EXPECT_EQ(code_of("not an object"), ErrorCode::ParseError);
}

TEST(Specs, Recipes) {
  const Instance inv = build_corpus_instance(
      {{"name", "cyclic"}, {"params", {{"m", 9}}}, {"automorphism", {{"recipe", "power"}, {"k", -1}}}});
  for (Elem x = 0; x < 9; ++x) EXPECT_EQ((*inv.phi)(x), inv.group->inv(x));

  const Instance cyc = build_corpus_instance(json::parse(R"({"name": "direct_product",
      "params": {"factors": [{"name": "cyclic", "params": {"m": 2}}, {"name": "cyclic", "params": {"m": 2}},
                             {"name": "cyclic", "params": {"m": 2}}]},
      "automorphism": {"recipe": "cycle"}})"));
  EXPECT_EQ(cyc.phi->order(), 3u);
  EXPECT_EQ((*cyc.phi)(cyc.group->generator(0)), cyc.group->generator(1));
  EXPECT_EQ((*cyc.phi)(cyc.group->generator(2)), cyc.group->generator(0));

  const Instance frob = build_corpus_instance(
      {{"name", "additive"}, {"params", {{"p", 5}, {"k", 3}}}, {"automorphism", {{"recipe", "frobenius"}}}});
  EXPECT_EQ(frob.phi->order(), 3u);
  EXPECT_EQ(twisted_data(*frob.phi).fixed.order(), 5u);

  const Instance inner = build_corpus_instance(
      {{"name", "symmetric"}, {"params", {{"m", 3}}}, {"automorphism", {{"recipe", "inner"}, {"word", {2}}}}});
  const Elem c = inner.group->generator(1);
  for (Elem x = 0; x < 6; ++x) EXPECT_EQ((*inner.phi)(x), inner.group->conj(x, c));

  const Instance raw = build_corpus_instance(
      {{"degree", 3}, {"generators", {{1, 2, 0}}}, {"automorphism", {{"images", {{1, 1}}}}}});
  EXPECT_EQ(raw.phi->order(), 2u);
  EXPECT_EQ(raw.id, "group");
}

TEST(Glauberman, FieldAndShape) {
  const auto& ex = glauberman();
  EXPECT_EQ(ex.field.size(), 125u);
  EXPECT_EQ(ex.field.modulus(), (poly::Poly{1, 1, 0, 1}));
  EXPECT_EQ(ex.field.multiplicative_order(ex.multiplier), 124u);
  EXPECT_EQ(ex.group->degree(), 125u);
  EXPECT_EQ(ex.phi.order(), 3u);
  EXPECT_TRUE(ex.phi.is_coprime());
  // phi is conjugation by the Frobenius map x -> x^5.
  for (Elem g = 0; g < ex.group->order(); g += 37) {
    const Permutation lhs = ex.frobenius.inverse().then(ex.group->permutation(g)).then(ex.frobenius);
    EXPECT_EQ(ex.group->permutation(ex.phi(g)), lhs);
  }
}

TEST(Glauberman, TranslationSubgroup) {
  const auto& ex = glauberman();
  const GroupPtr g = ex.group;
  const Subgroup a = normal_closure(std::vector<Elem>{g->generator(0)}, Subgroup::whole(g));
  ASSERT_EQ(a.order(), 125u);
  EXPECT_TRUE(is_normal_in(a, Subgroup::whole(g)));
  EXPECT_EQ(subgroup_exponent(a), 5u);
  EXPECT_EQ(center_of(a).order(), 125u);
  for (Elem x : a.members()) {
    const auto im = g->images(x);
    for (Point p = 0; p < 125; ++p) ASSERT_EQ(im[p], ex.field.add(p, im[0]));
  }

  const TwistedData d = twisted_data(ex.phi);
  const Subgroup a_fixed = intersection(a, d.fixed);
  EXPECT_EQ(a_fixed.order(), 5u);
  std::vector<Elem> a_twisted;
  for (Elem t : d.twisted)
    if (a.contains(t)) a_twisted.push_back(t);
  EXPECT_EQ(a_twisted.size(), 25u);
  // Every nontrivial translation in A_{-phi} is conjugate to one in A_phi.
  for (Elem t : a_twisted) {
    if (t == kIdentity) continue;
    bool hit = false;
    for (Elem f : a_fixed.members()) {
      if (f != kIdentity && are_conjugate(*g, t, f)) {
        hit = true;
        break;
      }
    }
    EXPECT_TRUE(hit) << t;
  }
}

TEST(Glauberman, ScalingIsTransitiveOnNonzero) {
  const auto& ex = glauberman();
  const Elem s = ex.group->generator(1);
  EXPECT_EQ(ex.group->element_order(s), 124u);
  std::set<Point> orbit;
  Point x = 1;
  for (int i = 0; i < 124; ++i) {
    orbit.insert(x);
    x = ex.group->images(s)[x];
  }
  EXPECT_EQ(orbit.size(), 124u);
  EXPECT_FALSE(orbit.count(0));
  EXPECT_EQ(ex.group->images(s)[1], ex.multiplier);
}

TEST(Corpus, ShippedFileBuilds) {
  const json corpus = load_json_file(CPLAB_CORPUS);
  ASSERT_EQ(corpus["schema"], 1);
  std::set<std::string> ids;
  std::size_t coprime = 0;
  for (const auto& spec : corpus["instances"]) {
    const Instance inst = build_corpus_instance(spec);
    EXPECT_TRUE(ids.insert(inst.id).second) << "duplicate id " << inst.id;
    coprime += inst.phi && inst.phi->is_coprime();
  }
  EXPECT_GE(ids.size(), 30u);
  EXPECT_GE(coprime, 30u);
}
