#include <gtest/gtest.h>

#include <random>

#include "cplab/corpus.hpp"
#include "cplab/error.hpp"
#include "cplab/harness.hpp"
#include "cplab/lie.hpp"
#include "cplab/structure.hpp"
#include "oracles.hpp"

using namespace cplab;

namespace {

GradedLieAlgebra algebra(const GroupPtr& g, std::uint64_t p) {
  return build_graded_lie(jlz_series(Subgroup::whole(g), p));
}

struct PGroup {
  std::string name;
  GroupPtr group;
  std::uint64_t p;
};

std::vector<PGroup> p_groups() {
  return {{"c9", cyclic_group(9), 3},          {"c27", cyclic_group(27), 3},
          {"he3", heisenberg_group(3), 3},     {"he5", heisenberg_group(5), 5},
          {"m27", modular_group(3), 3},        {"m125", modular_group(5), 5},
          {"q8", quaternion_group(2), 2},      {"q16", quaternion_group(4), 2},
          {"d8", dihedral_group(4), 2},        {"d16", dihedral_group(8), 2},
          {"d32", dihedral_group(16), 2}};
}

Instance make(const std::string& text) { return build_corpus_instance(json::parse(text)); }

}  // namespace

TEST(Jlz, MatchesOracle) {
  for (const auto& [name, g, p] : p_groups()) {
    const NpSeries s = jlz_series(Subgroup::whole(g), p);
    const auto ref = oracle::jlz(oracle::all_perms(*g), p, g->degree());
    ASSERT_EQ(s.length(), ref.size()) << name;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(oracle::perms_of(*g, s.terms[i].members()), ref[i]) << name << " D" << i + 1;
    }
    EXPECT_TRUE(s.term(s.length() + 1).is_trivial());
    EXPECT_TRUE(verify_np_series(s).pass) << name;
  }
}

TEST(Jlz, RejectsNonPGroups) {
  EXPECT_THROW(jlz_series(Subgroup::whole(symmetric_group(3)), 3), Error);
  EXPECT_THROW(jlz_series(Subgroup::whole(cyclic_group(9)), 2), Error);
}

TEST(Jlz, GoldenDims) {
  EXPECT_EQ(algebra(cyclic_group(9), 3).layer_dims(), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(algebra(heisenberg_group(3), 3).layer_dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(algebra(modular_group(3), 3).layer_dims(), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(algebra(quaternion_group(2), 2).layer_dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(algebra(cyclic_group(1), 3).layer_dims().empty());
}

TEST(Jlz, VerifyDetectsBadSeries) {
  // C9 > 1 is not an N_p series: D1^3 must lie in D3.
  const auto g = cyclic_group(9);
  NpSeries bad{g, 3, {Subgroup::whole(g)}};
  EXPECT_FALSE(verify_np_series(bad).pass);
  EXPECT_FALSE(verify_np_series(bad).violations.empty());
  // He3 > Z > 1 is its lower central series and has exponent 3, so it is.
  const auto he = heisenberg_group(3);
  NpSeries good{he, 3, {Subgroup::whole(he), center(he)}};
  EXPECT_TRUE(verify_np_series(good).pass);
  // He3 > 1 fails: [D1, D1] is not in D2.
  NpSeries short_series{he, 3, {Subgroup::whole(he)}};
  EXPECT_FALSE(verify_np_series(short_series).pass);
}

TEST(Lie, HeisenbergBracket) {
  const GradedLieAlgebra a = algebra(heisenberg_group(3), 3);
  ASSERT_EQ(a.dim(), 3u);
  const Vec xy = a.bracket(a.unit(0), a.unit(1));
  EXPECT_TRUE(linalg::is_zero(a.restrict_to_layer(1, xy)));
  EXPECT_FALSE(linalg::is_zero(a.restrict_to_layer(2, xy)));
  EXPECT_EQ(a.generated_class(), 2u);
  EXPECT_TRUE(is_antisymmetric(a));
  EXPECT_TRUE(satisfies_jacobi(a));
  EXPECT_EQ(ad_nilpotency_index(a, a.unit(0)), 2u);
  EXPECT_EQ(ad_nilpotency_index(a, a.unit(2)), 1u);
  EXPECT_EQ(ad_nilpotency_index(algebra(cyclic_group(27), 3), Vec{1, 0, 0}), 1u);
}

TEST(Lie, AbelianAlgebrasForAbelianGroups) {
  const GradedLieAlgebra a = algebra(cyclic_group(27), 3);
  EXPECT_EQ(a.layer_dims(), (std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(a.generated_class(), 1u);
  EXPECT_TRUE(a.sparse_constants().empty());
  // L_1 generates only itself; one flag per basis vector.
  EXPECT_EQ(a.generated_flags(), (std::vector<bool>{true, false, false}));
}

// Coordinates of [x, y] equal the bracket of the coordinates, for
// homogeneous elements away from the chosen basis.
TEST(Properties, BracketMatchesGroupCommutators) {
  std::mt19937 rng(2718);
  for (const auto& [name, g, p] : p_groups()) {
    const GradedLieAlgebra a = algebra(g, p);
    for (int t = 0; t < 200; ++t) {
      const Elem x = static_cast<Elem>(rng() % g->order()), y = static_cast<Elem>(rng() % g->order());
      const std::size_t i = a.depth(x), j = a.depth(y);
      if (i == 0 || j == 0) continue;
      const Vec lhs = a.bracket(a.homogeneous(i, x), a.homogeneous(j, y));
      const Elem c = g->commutator(x, y);
      Vec rhs = a.zero();
      if (i + j > a.num_layers()) {
        ASSERT_EQ(c, kIdentity) << name;
      } else {
        ASSERT_GE(a.layer(i + j).code_of[c], 0) << name << ": [x,y] outside D_{i+j}";
        rhs = a.homogeneous(i + j, c);
      }
      EXPECT_EQ(lhs, rhs) << name << " x=" << x << " y=" << y;
    }
  }
}

TEST(Properties, LazardOnAllElements) {
  for (const auto& [name, g, p] : p_groups()) {
    const GradedLieAlgebra a = algebra(g, p);
    for (Elem x = 0; x < g->order(); ++x) EXPECT_TRUE(check_lazard(a, x).pass) << name << " x=" << x;
  }
  const GradedLieAlgebra c9 = algebra(cyclic_group(9), 3);
  const LazardReport r = check_lazard(c9, cyclic_group(9)->generator(0));
  EXPECT_EQ(r.depth, 1u);
  EXPECT_TRUE(r.power_in_layer);
}

TEST(Properties, RileyOnPGroups) {
  for (const auto& [name, g, p] : p_groups()) {
    const RileyReport r = check_riley(Subgroup::whole(g), p);
    EXPECT_TRUE(r.powerful) << name;
    EXPECT_TRUE(r.exponent_split) << name;
    EXPECT_EQ(r.group_exponent, g->exponent()) << name;
  }
  const RileyReport he = check_riley(Subgroup::whole(heisenberg_group(3)), 3);
  EXPECT_EQ(he.lie_class, 2u);
  EXPECT_EQ(he.powerful_term_order, 1u);
  const RileyReport c27 = check_riley(Subgroup::whole(cyclic_group(27)), 3);
  EXPECT_EQ(c27.lie_class, 1u);
  EXPECT_EQ(c27.powerful_term_order, 9u);
}

TEST(Lgh, Examples) {
  const auto he = heisenberg_group(3);
  const GradedLieAlgebra a = algebra(he, 3);
  const SubalgebraLGH trivial = subalgebra_LGH(a, Subgroup::trivial(he));
  EXPECT_EQ(trivial.dims, (std::vector<std::size_t>{0, 0}));
  EXPECT_TRUE(trivial.closed);
  EXPECT_EQ(trivial.u, 1u);

  const SubalgebraLGH z = subalgebra_LGH(a, center(he));
  EXPECT_EQ(z.dims, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(z.u, 1u);

  const SubalgebraLGH whole = subalgebra_LGH(a, Subgroup::whole(he));
  EXPECT_EQ(whole.dims, (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(whole.closed);
  EXPECT_EQ(whole.u, 2u);  // [L,L] = L_2, [L,L,L] = 0

  const SubalgebraLGH line = subalgebra_LGH(a, subgroup_generated(he, std::vector<Elem>{he->generator(0)}));
  EXPECT_EQ(line.dims, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(line.closed);
}

TEST(LieFixedPoints, Examples) {
  const auto he = heisenberg_group(3);
  const GradedLieAlgebra a = algebra(he, 3);
  const LieFixedPointsReport id = lie_fixed_points(a, Automorphism::identity(he));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.centralizer_dims, (std::vector<std::size_t>{2, 1}));

  const Instance inv = make(R"({"name": "heisenberg", "params": {"p": 3}, "automorphism": {"images": [[-1], [-2]]}})");
  const LieFixedPointsReport r = lie_fixed_points(algebra(inv.group, 3), *inv.phi);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.centralizer_dims, (std::vector<std::size_t>{0, 1}));

  const Instance add = make(R"({"name": "additive", "params": {"p": 5, "k": 3}, "automorphism": {"recipe": "frobenius"}})");
  const GradedLieAlgebra b = algebra(add.group, 5);
  const LieFixedPointsReport f = lie_fixed_points(b, *add.phi);
  EXPECT_TRUE(f.pass);
  EXPECT_EQ(f.centralizer_dims, (std::vector<std::size_t>{1}));

  const Instance d4 = make(R"({"name": "dihedral", "params": {"m": 4}, "automorphism": {"recipe": "inner", "word": [1]}})");
  EXPECT_THROW(lie_fixed_points(algebra(d4.group, 2), *d4.phi), Error);
}

TEST(Eigen, CyclotomicFactor) {
  EXPECT_EQ(cyclotomic_factor(3, 5), (poly::Poly{1, 1, 1}));
  EXPECT_EQ(poly::degree(cyclotomic_factor(3, 7)), 1);
  EXPECT_EQ(poly::degree(cyclotomic_factor(31, 5)), 3);
  EXPECT_THROW(cyclotomic_factor(6, 3), Error);
}

TEST(Eigen, Examples) {
  const Instance c7 = make(R"({"name": "cyclic", "params": {"m": 7}, "automorphism": {"recipe": "power", "k": 2}})");
  const ExtendedAlgebra e = extend_and_eigendecompose(algebra(c7.group, 7), *c7.phi, 3);
  EXPECT_EQ(e.field.size(), 7u);
  EXPECT_EQ(e.field.multiplicative_order(e.omega), 3u);
  ASSERT_EQ(e.layers.size(), 1u);
  std::size_t nonzero = 0;
  for (const auto& s : e.layers[0].eigenspaces) {
    if (s.basis.rows() == 0) continue;
    ++nonzero;
    EXPECT_EQ(s.eigenvalue, 2u);
  }
  EXPECT_EQ(nonzero, 1u);
  EXPECT_TRUE(e.dims_sum_ok);

  const ExtendedAlgebra one = extend_and_eigendecompose(algebra(c7.group, 7), Automorphism::identity(c7.group), 1);
  EXPECT_EQ(one.layers[0].eigenspaces.size(), 1u);
  EXPECT_EQ(one.layers[0].eigenspaces[0].basis.rows(), 1u);

  const Instance add = make(R"({"name": "additive", "params": {"p": 5, "k": 3}, "automorphism": {"recipe": "frobenius"}})");
  const ExtendedAlgebra f = extend_and_eigendecompose(algebra(add.group, 5), *add.phi, 3);
  EXPECT_EQ(f.field.size(), 25u);
  for (const auto& s : f.layers[0].eigenspaces) EXPECT_EQ(s.basis.rows(), 1u);
  EXPECT_TRUE(f.bracket_rule_holds);

  EXPECT_THROW(extend_and_eigendecompose(algebra(c7.group, 7), *c7.phi, 7), Error);
  EXPECT_THROW(extend_and_eigendecompose(algebra(c7.group, 7), *c7.phi, 2), Error);  // phi^2 != 1
}

TEST(Eigen, BracketRuleOnCorpus) {
  const json corpus = load_json_file(CPLAB_CORPUS);
  std::size_t checked = 0;
  for (const auto& spec : corpus["instances"]) {
    const Instance inst = build_corpus_instance(spec);
    const auto primes = prime_divisors(inst.group->order());
    if (!inst.phi || !inst.phi->is_coprime() || primes.size() != 1) continue;
    const GradedLieAlgebra a = algebra(inst.group, primes[0]);
    const ExtendedAlgebra e = extend_and_eigendecompose(a, *inst.phi, inst.phi->order());
    EXPECT_TRUE(e.bracket_rule_holds) << inst.id;
    EXPECT_TRUE(e.dims_sum_ok) << inst.id;
    ++checked;
  }
  EXPECT_GE(checked, 10u);
}
