#include "cplab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "cplab/error.hpp"
#include "cplab/field.hpp"
#include "cplab/structure.hpp"

namespace cplab {

std::string skipped(const std::string& reason) { return "skipped: " + reason; }

json element_json(const FiniteGroup& g, Elem x) {
  return {{"index", x}, {"word", g.word(x)}, {"order", g.element_order(x)}};
}

namespace {

std::optional<std::uint64_t> prime_of_p_group(std::uint64_t order) {
  if (order <= 1) return std::nullopt;
  auto primes = prime_divisors(order);
  if (primes.size() != 1) return std::nullopt;
  return primes[0];
}

std::size_t omega_with_multiplicity(std::uint64_t n) {
  std::size_t count = 0;
  for (std::uint64_t p : prime_divisors(n)) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return count;
}

void walk_failures(const json& node, const std::string& path, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) walk_failures(value, path + "/" + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) walk_failures(node[i], path + "/" + std::to_string(i), out);
  } else if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    if (s == kFail || s.rfind("error", 0) == 0) out.push_back(path + ": " + s);
  }
}

bool divides(std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; }

}  // namespace

json group_stats(const GroupPtr& g) {
  const Subgroup whole = Subgroup::whole(g);
  json out;
  out["degree"] = g->degree();
  out["order"] = g->order();
  out["generators"] = g->num_generators();
  out["exponent"] = g->exponent();
  out["prime_divisors"] = prime_divisors(g->order());
  out["center_order"] = center(g).order();
  const bool nilpotent = is_nilpotent(whole);
  out["nilpotent"] = nilpotent;
  out["nilpotency_class"] = nilpotent ? json(nilpotency_class(whole)) : json(nullptr);
  const bool soluble = is_soluble(whole);
  out["soluble"] = soluble;
  out["derived_length"] = soluble ? json(derived_length(whole)) : json(nullptr);
  out["fitting_order"] = fitting_subgroup(whole).order();
  out["fitting_height"] = soluble ? json(fitting_height(g)) : json(nullptr);
  auto p = prime_of_p_group(g->order());
  out["p_group"] = p ? json(*p) : json(nullptr);

  json verdicts;
  verdicts["nilpotent_implies_soluble"] = nilpotent ? verdict(soluble) : skipped("not nilpotent");
  verdicts["derived_length_bound"] =
      nilpotent ? verdict(derived_length(whole) <= nilpotency_class(whole) + 1) : skipped("not nilpotent");
  if (p) {
    verdicts["powerful_exponent"] = skipped("not powerful");
    if (is_powerful(whole, *p)) {
      // In a powerful p-group the elements of order dividing p^k form a
      // subgroup of exponent p^k.
      bool ok = true;
      for (std::uint64_t m = *p; m <= g->exponent(); m *= *p) {
        std::vector<Elem> seeds;
        for (Elem x = 0; x < g->order(); ++x) {
          if (m % g->element_order(x) == 0) seeds.push_back(x);
        }
        if (!divides(subgroup_exponent(subgroup_generated(g, seeds)), m)) ok = false;
      }
      verdicts["powerful_exponent"] = verdict(ok);
    }
  }
  out["verdicts"] = verdicts;
  return out;
}

std::vector<std::string> collect_failures(const json& report) {
  std::vector<std::string> out;
  walk_failures(report, "", out);
  return out;
}

// ---------------------------------------------------------------------------
// Probes

json theorem1_probe(const Automorphism& phi) {
  if (!phi.is_coprime()) throw Error(ErrorCode::NotCoprime, "theorem1 probe needs a coprime automorphism");
  const FiniteGroup& G = phi.group();
  const TwistedData data = twisted_data(phi);
  std::vector<Elem> xs = data.fixed.members();
  xs.insert(xs.end(), data.twisted.begin(), data.twisted.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::uint64_t e = 1;
  std::size_t scanned = 0;
  for (Elem x : xs) {
    if (e == G.exponent()) break;  // e divides exp(G); it cannot grow further
    ++scanned;
    if (x == kIdentity) continue;
    const Elem seed[] = {x};
    e = std::lcm(e, subgroup_exponent(phi_invariant_closure(phi, seed)));
  }
  return {{"e", e},
          {"n", phi.order()},
          {"group_exponent", G.exponent()},
          {"elements_total", xs.size()},
          {"elements_scanned", scanned},
          {"e_divides_exponent", verdict(divides(e, G.exponent()))}};
}

json theorem2_probe(const Automorphism& phi, const TwistedData& data) {
  if (!phi.is_coprime()) throw Error(ErrorCode::NotCoprime, "theorem2 probe needs a coprime automorphism");
  if (!is_nilpotent(data.fixed)) return json(skipped("fixed-point subgroup is not nilpotent"));
  const FiniteGroup& G = phi.group();

  std::uint64_t e = 1;
  for (Elem x : data.twisted) e = std::lcm(e, G.element_order(x));
  const std::uint64_t comm_exp = subgroup_exponent(data.commutator_phi);
  // Every closure lies in [G,phi], so its derived length bounds d.
  const std::size_t d_max = derived_length(data.commutator_phi);

  const std::size_t t = data.twisted.size();
  const std::uint64_t pairs = std::uint64_t{t} * (t + 1) / 2;
  std::uint64_t stride = 1;
  if (t > kFullPairLimit && pairs > kPairCap) stride = (pairs + kPairCap - 1) / kPairCap;

  std::size_t d = 0;
  std::uint64_t counter = 0, visited = 0;
  bool early = false;
  for (std::size_t i = 0; i < t && !early; ++i) {
    for (std::size_t j = i; j < t; ++j, ++counter) {
      if (counter % stride != 0) continue;
      ++visited;
      const Elem seeds[] = {data.twisted[i], data.twisted[j]};
      d = std::max(d, derived_length(phi_invariant_closure(phi, seeds)));
      if (d == d_max) {
        early = true;
        break;
      }
    }
  }
  const bool lower_bound = stride > 1 && !early;
  return {{"c", nilpotency_class(data.fixed)},
          {"d", d},
          {"d_lower_bound", lower_bound},
          {"d_display", (lower_bound ? ">=" : "") + std::to_string(d)},
          {"pairs_total", pairs},
          {"pairs_visited", visited},
          {"e", e},
          {"n", phi.order()},
          {"commutator_exponent", comm_exp},
          {"e_divides_exponent", verdict(divides(e, G.exponent()))},
          {"commutator_exponent_divides", verdict(divides(comm_exp, G.exponent()))}};
}

json thompson_probe(const Automorphism& phi) {
  if (!phi.is_coprime()) throw Error(ErrorCode::NotCoprime, "thompson probe needs a coprime automorphism");
  const Subgroup whole = Subgroup::whole(phi.group_ptr());
  if (!is_soluble(whole)) throw Error(ErrorCode::NotSoluble, "thompson probe needs a soluble group");
  const std::size_t h = fitting_height(phi.group_ptr());
  return {{"n", phi.order()},
          {"omega_n", omega_with_multiplicity(phi.order())},
          {"fitting_height", h},
          {"fitting_height_finite", verdict(h <= phi.group().order())}};
}

// ---------------------------------------------------------------------------
// Automorphism section

json automorphism_report(const Automorphism& phi) {
  const FiniteGroup& G = phi.group();
  const GroupPtr& gp = phi.group_ptr();
  const Subgroup whole = Subgroup::whole(gp);
  const TwistedData data = twisted_data(phi);
  const bool coprime = data.coprime;
  const std::string not_coprime = skipped("automorphism order not coprime to |G|");

  json out;
  out["gen_images"] = phi.gen_images();
  out["order"] = phi.order();
  out["coprime"] = coprime;
  out["fixed_order"] = data.fixed.order();
  out["twisted_size"] = data.twisted.size();
  out["commutator_order"] = data.commutator_phi.order();
  out["commutator_exponent"] = subgroup_exponent(data.commutator_phi);

  json v;
  v["orbit_count"] = verdict(data.twisted.size() * data.fixed.order() == G.order());
  bool twisted_inside = true;
  for (Elem x : data.twisted) twisted_inside = twisted_inside && data.commutator_phi.contains(x);
  v["twisted_in_commutator"] = verdict(twisted_inside);
  v["commutator_normal_invariant"] =
      verdict(is_normal_in(data.commutator_phi, whole) && phi.leaves_invariant(data.commutator_phi));
  v["commutator_exponent_divides"] = verdict(divides(subgroup_exponent(data.commutator_phi), G.exponent()));

  const bool nilpotent = is_nilpotent(whole);
  const bool fixed_nilpotent = is_nilpotent(data.fixed);

  if (!coprime) {
    for (const char* key : {"factorization_equivalence", "commutator_stable", "quotient_fixed_points",
                            "centralizing", "fixed_points_of_product", "unique_decomposition",
                            "fixed_generation", "soluble_when_fixed_nilpotent", "invariant_sylow"}) {
      v[key] = not_coprime;
    }
    out["verdicts"] = v;
    return out;
  }

  const FactorizationStatus fs = factorization_status(phi, data);
  json fact{{"product_covers", fs.product_covers},
            {"criterion_holds", fs.criterion_holds},
            {"product_size", fs.product_size}};
  if (fs.witness) {
    fact["witness"] = {{"a", element_json(G, fs.witness->a)},
                       {"b", element_json(G, fs.witness->b)},
                       {"c", element_json(G, fs.witness->c)}};
    const Elem lhs = twist(phi, fs.witness->b);
    v["factorization_witness"] = verdict(fs.witness->a != kIdentity && data.fixed.contains(fs.witness->a) &&
                                         lhs == G.conj(fs.witness->a, fs.witness->c));
  }
  out["factorization"] = fact;
  v["factorization_equivalence"] = verdict(fs.product_covers == fs.criterion_holds);

  const auto family = default_normal_family(phi, data);
  const CoprimeFactsReport facts = check_coprime_facts(phi, data, family);
  v["commutator_stable"] = verdict(facts.commutator_stable);
  auto member_list = [](const std::vector<FamilyMemberCheck>& checks, bool& all) {
    json arr = json::array();
    all = true;
    for (const auto& c : checks) {
      arr.push_back({{"label", c.label}, {"order", c.order}, {"verdict", verdict(c.pass)}});
      all = all && c.pass;
    }
    return arr;
  };
  bool qfp = true, cent = true;
  out["coprime_facts"] = {{"quotient_fixed_points", member_list(facts.quotient_fixed_points, qfp)},
                          {"centralizing", member_list(facts.centralizing, cent)}};
  v["quotient_fixed_points"] = verdict(qfp);
  v["centralizing"] = facts.centralizing.empty() ? skipped("no family member inside the fixed points")
                                                 : verdict(cent);

  std::vector<Subgroup> members;
  for (const auto& m : family) members.push_back(m.subgroup);
  const ProductFixedPointsReport prod = fixed_points_of_product(phi, members);
  out["fixed_points_of_product"] = {{"product_order", prod.product_order},
                                    {"fixed_order", prod.fixed_order},
                                    {"generated_order", prod.generated_order}};
  v["fixed_points_of_product"] = verdict(prod.pass);

  bool sylow_ok = true;
  json sylows = json::object();
  for (std::uint64_t p : prime_divisors(G.order())) {
    const Subgroup s = phi_invariant_sylow(phi, p);
    sylows[std::to_string(p)] = s.order();
    sylow_ok = sylow_ok && phi.leaves_invariant(s) && s.order() == p_part(G.order(), p);
  }
  out["invariant_sylow_orders"] = sylows;
  v["invariant_sylow"] = verdict(sylow_ok);

  if (nilpotent) {
    bool unique = true;
    std::string detail;
    for (Elem x = 0; x < G.order() && unique; ++x) {
      try {
        const Decomposition dec = decompose_scan(phi, data, x);
        unique = G.mul(dec.g, dec.h) == x;
      } catch (const Error& e) {
        unique = false;
        detail = e.what();
      }
    }
    out["decomposition"] = {{"elements_checked", G.order()}};
    if (!detail.empty()) out["decomposition"]["error"] = detail;
    v["unique_decomposition"] = verdict(unique);

    // Restrict to [G,phi], which satisfies H = [H,phi] under coprime action.
    const RestrictedAutomorphism r = restrict_to(phi, data.commutator_phi);
    try {
      const FixedGenerationResult fg = fixed_generation_S(r.phi);
      out["fixed_generation"] = {{"s_size", fg.s.size()},
                                 {"subgroup_order", r.sub.group->order()}};
      v["fixed_generation"] = verdict(fg.generates);
    } catch (const Error& e) {
      out["fixed_generation"] = {{"error", e.what()}};
      v["fixed_generation"] = kFail;
    }
  } else {
    v["unique_decomposition"] = skipped("group is not nilpotent");
    v["fixed_generation"] = skipped("group is not nilpotent");
  }

  v["soluble_when_fixed_nilpotent"] =
      fixed_nilpotent ? verdict(is_soluble(whole)) : skipped("fixed-point subgroup is not nilpotent");

  if (is_soluble(data.commutator_phi)) {
    const RestrictedAutomorphism r = restrict_to(phi, data.commutator_phi);
    const SolubleExponentProbe probe = soluble_exponent_probe(r.phi);
    out["soluble_exponent"] = {{"d", probe.d}, {"e", probe.e}, {"exponent", probe.exponent}};
    v["soluble_exponent_divides"] = verdict(divides(probe.e, probe.exponent) || probe.exponent == 1);
  } else {
    v["soluble_exponent_divides"] = skipped("[G,phi] is not soluble");
  }

  out["verdicts"] = v;
  return out;
}

// ---------------------------------------------------------------------------
// Lie section

json eigen_report(const ExtendedAlgebra& e) {
  json layers = json::array();
  for (const auto& l : e.layers) {
    json dims = json::array();
    for (const auto& s : l.eigenspaces) dims.push_back(s.basis.rows());
    layers.push_back({{"dim", l.dim}, {"eigen_dims", dims}});
  }
  return {{"n", e.n},
          {"modulus", e.field.modulus()},
          {"omega", e.omega},
          {"field_size", e.field.size()},
          {"layers", layers},
          {"bracket_pairs_checked", e.bracket_pairs_checked},
          {"bracket_rule", verdict(e.bracket_rule_holds)},
          {"dims_sum", verdict(e.dims_sum_ok)}};
}

json lie_report(const GradedLieAlgebra& a, const Automorphism* phi, bool all_elements) {
  const FiniteGroup& G = a.group();
  json out;
  out["p"] = a.p();
  out["dims"] = a.layer_dims();
  out["dim"] = a.dim();
  out["lie_class"] = a.generated_class();
  json gen_dims = json::array();
  for (std::size_t i = 1; i <= a.num_layers(); ++i) gen_dims.push_back(a.generated_layer(i).rows());
  out["generated_dims"] = gen_dims;
  json constants = json::array();
  for (const auto& c : a.sparse_constants()) {
    constants.push_back({{"i", c.i}, {"a", c.a}, {"j", c.j}, {"b", c.b}, {"k", c.k}, {"index", c.index},
                         {"c", c.c}});
  }
  out["structure_constants"] = constants;

  json v;
  const NpSeriesReport np = verify_np_series(a.series());
  v["np_series"] = verdict(np.pass);
  if (!np.pass) out["np_violations"] = np.violations;
  v["antisymmetric"] = verdict(is_antisymmetric(a));
  v["jacobi"] = verdict(satisfies_jacobi(a));

  if (all_elements) {
    std::size_t checked = 0, in_layer = 0;
    json failures = json::array();
    for (Elem x = 1; x < G.order(); ++x) {
      const LazardReport r = check_lazard(a, x);
      ++checked;
      if (r.power_in_layer) ++in_layer;
      if (!r.pass && failures.size() < 5) failures.push_back(element_json(G, x));
    }
    out["lazard"] = {{"elements_checked", checked}, {"power_in_layer", in_layer}};
    if (!failures.empty()) out["lazard"]["failures"] = failures;
    v["lazard"] = verdict(failures.empty());
  }

  const RileyReport riley = check_riley(a);
  out["riley"] = {{"powerful_term_order", riley.powerful_term_order},
                  {"group_exponent", riley.group_exponent},
                  {"term_exponent", riley.term_exponent}};
  v["riley_powerful"] = verdict(riley.powerful);
  v["exponent_split"] = verdict(riley.exponent_split);

  if (phi != nullptr && phi->is_coprime()) {
    const Subgroup fixed = fixed_points(Subgroup::whole(phi->group_ptr()), *phi);
    const SubalgebraLGH lgh = subalgebra_LGH(a, fixed);
    out["lgh_fixed"] = {{"dims", lgh.dims}, {"u", lgh.u}};
    v["lgh_closed"] = verdict(lgh.closed);

    const LieFixedPointsReport fp = lie_fixed_points(a, *phi);
    out["fixed_points"] = {{"centralizer_dims", fp.centralizer_dims}, {"span_dims", fp.span_dims}};
    v["lie_fixed_points"] = verdict(fp.pass);

    const ExtendedAlgebra ext = extend_and_eigendecompose(a, *phi, phi->order());
    out["eigen"] = eigen_report(ext);
    v["eigen_bracket_rule"] = verdict(ext.bracket_rule_holds);
    v["eigen_dims_sum"] = verdict(ext.dims_sum_ok);
  } else {
    const std::string reason = phi == nullptr ? "no automorphism" : "automorphism not coprime";
    for (const char* key : {"lgh_closed", "lie_fixed_points", "eigen_bracket_rule", "eigen_dims_sum"}) {
      v[key] = skipped(reason);
    }
  }
  out["verdicts"] = v;
  return out;
}

// ---------------------------------------------------------------------------
// Instances and the suite

json analyze_instance(const Instance& inst) {
  json out;
  out["id"] = inst.id;
  out["status"] = "ok";
  out["group"] = group_stats(inst.group);
  const Subgroup whole = Subgroup::whole(inst.group);

  const Automorphism* phi = inst.phi ? &*inst.phi : nullptr;
  if (phi != nullptr) {
    out["automorphism"] = automorphism_report(*phi);
  } else {
    out["automorphism"] = skipped("no automorphism");
  }

  if (auto p = prime_of_p_group(inst.group->order())) {
    const GradedLieAlgebra a(jlz_series(whole, *p));
    out["lie"] = lie_report(a, phi);
  } else {
    out["lie"] = skipped("not a nontrivial p-group");
  }

  json probes;
  if (phi != nullptr && phi->is_coprime()) {
    probes["theorem1"] = theorem1_probe(*phi);
    probes["theorem2"] = theorem2_probe(*phi, twisted_data(*phi));
    probes["thompson"] = is_soluble(whole) ? thompson_probe(*phi) : json(skipped("group is not soluble"));
  } else {
    const std::string reason = phi == nullptr ? "no automorphism" : "automorphism not coprime";
    probes = {{"theorem1", skipped(reason)}, {"theorem2", skipped(reason)}, {"thompson", skipped(reason)}};
  }
  out["probes"] = probes;

  out["failures"] = collect_failures(out);
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SuiteResult run_suite(const json& corpus, unsigned jobs, std::size_t cap) {
  if (!corpus.is_object() || !corpus.contains("instances") || !corpus["instances"].is_array()) {
    throw Error(ErrorCode::ParseError, "corpus must be an object with an \"instances\" array");
  }
  if (corpus.value("schema", 0) != 1) {
    throw Error(ErrorCode::ParseError, "unsupported corpus schema (expected \"schema\": 1)");
  }
  const json& specs = corpus["instances"];
  const std::size_t count = specs.size();
  std::vector<json> reports(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < count; k = next++) {
      const json& spec = specs[k];
      const std::string id = spec.is_object() && spec.contains("id") ? spec["id"].get<std::string>()
                                                                     : "instance-" + std::to_string(k);
      json report;
      try {
        Instance inst = build_corpus_instance(spec, cap);
        inst.id = id;
        report = analyze_instance(inst);
      } catch (const Error& e) {
        report = {{"id", id}};
        if (e.code() == ErrorCode::CapExceeded) {
          report["status"] = skipped(e.what());
          report["failures"] = json::array();
        } else {
          report["status"] = std::string("error: ") + e.what();
          report["failures"] = {std::string("/status: error: ") + e.what()};
        }
      } catch (const std::exception& e) {
        report = {{"id", id}, {"status", std::string("error: ") + e.what()}};
        report["failures"] = {std::string("/status: error: ") + e.what()};
      }
      reports[k] = std::move(report);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult result;
  std::size_t pass = 0, fail = 0, skip = 0, failed_instances = 0;
  std::function<void(const json&)> tally = [&](const json& node) {
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) tally(value);
    } else if (node.is_array()) {
      for (const auto& value : node) tally(value);
    } else if (node.is_string()) {
      const auto& s = node.get_ref<const std::string&>();
      if (s == kPass) ++pass;
      else if (s == kFail) ++fail;
      else if (s.rfind("skipped: ", 0) == 0) ++skip;
    }
  };
  json instances = json::array();
  for (auto& r : reports) {
    if (!r["failures"].empty()) ++failed_instances;
    tally(r);
    instances.push_back(std::move(r));
  }
  result.hard_failure = failed_instances > 0;
  result.bundle = {{"schema", 1},
                   {"instances", instances},
                   {"summary",
                    {{"instances", count},
                     {"failed_instances", failed_instances},
                     {"verdicts", {{"pass", pass}, {"fail", fail}, {"skipped", skip}}},
                     {"hard_failure", result.hard_failure}}}};
  return result;
}

}  // namespace cplab
