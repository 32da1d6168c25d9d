// cplab: command-line front end. JSON report on stdout, short summary on
// stderr. Exit 0 ok, 1 invariant failure, 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cplab/automorphism.hpp"
#include "cplab/corpus.hpp"
#include "cplab/error.hpp"
#include "cplab/harness.hpp"
#include "cplab/lie.hpp"
#include "cplab/structure.hpp"

using namespace cplab;

namespace {

constexpr int kOk = 0;
constexpr int kInvariant = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

int finish(const json& out) {
  emit(out);
  const auto failures = collect_failures(out);
  for (const auto& f : failures) std::cerr << "FAIL " << f << "\n";
  return failures.empty() ? kOk : kInvariant;
}

Instance load_instance(const std::string& path, std::size_t cap = kDefaultCap) {
  json spec = load_json_file(path);
  if (spec.contains("instances")) throw UsageError(path + " is a corpus; use `suite`");
  Instance inst = build_corpus_instance(spec, cap);
  if (inst.id.empty()) inst.id = path;
  return inst;
}

// "1,2,-1", "1 2 -1" or "" (identity).
Word parse_word(const std::string& text) {
  Word w;
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    if (tok == "e" || tok == "1_G") continue;
    try {
      std::size_t used = 0;
      const int letter = std::stoi(tok, &used);
      if (used != tok.size() || letter == 0) throw std::invalid_argument(tok);
      w.push_back(letter);
    } catch (const std::exception&) {
      throw UsageError("bad letter '" + tok + "' in word");
    }
  }
  return w;
}

std::uint64_t p_of(const FiniteGroup& g) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 1) throw Error(ErrorCode::NotAPGroup, "order " + std::to_string(g.order()));
  return primes[0];
}

int cmd_info(const std::string& file) {
  const Instance inst = load_instance(file);
  json out{{"id", inst.id}, {"group", group_stats(inst.group)}};
  const json& g = out["group"];
  std::cerr << inst.id << ": order " << g["order"] << ", exponent " << g["exponent"]
            << (g["nilpotent"].get<bool>() ? ", nilpotent of class " + g["nilpotency_class"].dump()
                                           : std::string(", not nilpotent"))
            << (g["soluble"].get<bool>() ? ", derived length " + g["derived_length"].dump()
                                         : std::string(", insoluble"))
            << "\n";
  return finish(out);
}

int cmd_auto(const std::string& file) {
  const Instance inst = load_instance(file);
  if (!inst.phi) throw UsageError(file + " has no automorphism");
  json out{{"id", inst.id}, {"group", group_stats(inst.group)}, {"automorphism", automorphism_report(*inst.phi)}};
  const json& a = out["automorphism"];
  std::cerr << inst.id << ": |phi| = " << a["order"] << (a["coprime"].get<bool>() ? " (coprime)" : " (not coprime)")
            << ", |G_phi| = " << a["fixed_order"] << ", |G_-phi| = " << a["twisted_size"]
            << ", |[G,phi]| = " << a["commutator_order"] << "\n";
  return finish(out);
}

int cmd_decompose(const std::string& file, const std::string& word_text) {
  const Instance inst = load_instance(file);
  if (!inst.phi) throw UsageError(file + " has no automorphism");
  const FiniteGroup& G = *inst.group;
  const Word w = parse_word(word_text);
  Elem x;
  try {
    x = G.evaluate(w);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const Decomposition d = nilpotent_decompose(*inst.phi, x);
  const bool ok = G.mul(d.g, d.h) == x && (*inst.phi)(d.h) == d.h;
  json out{{"id", inst.id},
           {"x", element_json(G, x)},
           {"g", element_json(G, d.g)},
           {"h", element_json(G, d.h)},
           {"verified", verdict(ok)}};
  std::cerr << "x = g h with g = " << out["g"]["word"].dump() << ", h = " << out["h"]["word"].dump() << "\n";
  return finish(out);
}

int cmd_lie(const std::string& file, std::uint64_t p) {
  const Instance inst = load_instance(file);
  const GradedLieAlgebra a(jlz_series(Subgroup::whole(inst.group), p));
  json out{{"id", inst.id}, {"lie", lie_report(a, inst.phi ? &*inst.phi : nullptr)}};
  std::cerr << inst.id << ": layer dims " << out["lie"]["dims"].dump() << ", Lie class "
            << out["lie"]["lie_class"] << "\n";
  return finish(out);
}

int cmd_eigen(const std::string& file, std::uint64_t n) {
  const Instance inst = load_instance(file);
  if (!inst.phi) throw UsageError(file + " has no automorphism");
  const std::uint64_t p = p_of(*inst.group);
  const GradedLieAlgebra a(jlz_series(Subgroup::whole(inst.group), p));
  const ExtendedAlgebra ext = extend_and_eigendecompose(a, *inst.phi, n);
  json out{{"id", inst.id}, {"p", p}, {"dims", a.layer_dims()}, {"eigen", eigen_report(ext)}};
  std::cerr << inst.id << ": F_" << ext.field.size() << ", eigen dims per layer";
  for (const auto& l : out["eigen"]["layers"]) std::cerr << " " << l["eigen_dims"].dump();
  std::cerr << "\n";
  return finish(out);
}

int cmd_glauberman() {
  const GlaubermanExample ex = build_glauberman_example();
  const FiniteGroup& G = *ex.group;
  const TwistedData data = twisted_data(ex.phi);
  const FactorizationStatus fs = factorization_status(ex.phi, data);

  json out;
  out["field"] = {{"p", ex.field.characteristic()},
                  {"degree", ex.field.degree()},
                  {"modulus", ex.field.modulus()},
                  {"multiplier", ex.multiplier}};
  out["order"] = G.order();
  out["phi_order"] = ex.phi.order();
  out["coprime"] = data.coprime;
  out["fixed_order"] = data.fixed.order();
  out["twisted_size"] = data.twisted.size();
  out["commutator_order"] = data.commutator_phi.order();
  out["product_covers"] = fs.product_covers;
  out["criterion_holds"] = fs.criterion_holds;
  out["product_size"] = fs.product_size;

  json checks;
  checks["order"] = verdict(G.order() == 15500);
  checks["phi_order"] = verdict(ex.phi.order() == 3);
  checks["coprime"] = verdict(data.coprime);
  checks["fixed_order"] = verdict(data.fixed.order() == 20);
  checks["twisted_size"] = verdict(data.twisted.size() == 775);
  checks["product_covers_false"] = verdict(!fs.product_covers);
  checks["criterion_fails"] = verdict(!fs.criterion_holds);
  if (fs.witness) {
    const auto& w = *fs.witness;
    out["witness"] = {{"a", element_json(G, w.a)}, {"b", element_json(G, w.b)}, {"c", element_json(G, w.c)}};
    checks["witness"] = verdict(w.a != kIdentity && data.fixed.contains(w.a) &&
                                twist(ex.phi, w.b) == G.conj(w.a, w.c));
  } else {
    checks["witness"] = kFail;
  }
  out["checks"] = checks;
  std::cerr << "glauberman: |G| = " << G.order() << ", |phi| = " << ex.phi.order()
            << ", |G_phi| = " << data.fixed.order() << ", |G_-phi| = " << data.twisted.size()
            << ", product covers: " << (fs.product_covers ? "yes" : "no") << "\n";
  return finish(out);
}

int cmd_suite(const std::string& file, unsigned jobs, std::size_t cap) {
  const json corpus = load_json_file(file);
  const SuiteResult r = run_suite(corpus, jobs, cap);
  emit(r.bundle);
  const json& s = r.bundle["summary"];
  std::cerr << "suite: " << s["instances"] << " instances, " << s["verdicts"]["pass"] << " pass, "
            << s["verdicts"]["fail"] << " fail, " << s["verdicts"]["skipped"] << " skipped\n";
  for (const auto& inst : r.bundle["instances"]) {
    for (const auto& f : inst["failures"]) std::cerr << "FAIL " << inst["id"].get<std::string>() << f.get<std::string>() << "\n";
  }
  return r.hard_failure ? kInvariant : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups with coprime automorphisms"};
  app.require_subcommand(1);
  std::string file, word;
  std::uint64_t p = 0, n = 0;
  unsigned jobs = 1;
  std::size_t cap = kDefaultCap;

  auto* info = app.add_subcommand("info", "group invariants");
  info->add_option("FILE", file, "instance JSON")->required();
  auto* aut = app.add_subcommand("auto", "fixed points, twisted set, lemma checks");
  aut->add_option("FILE", file, "instance JSON")->required();
  auto* dec = app.add_subcommand("decompose", "x = g h with g twisted, h fixed");
  dec->add_option("FILE", file, "instance JSON")->required();
  dec->add_option("--element", word, "word, e.g. 1,-2,1")->required();
  auto* lie = app.add_subcommand("lie", "graded Lie algebra of a p-group");
  lie->add_option("FILE", file, "instance JSON")->required();
  lie->add_option("--p", p, "prime")->required()->check(CLI::PositiveNumber);
  auto* eig = app.add_subcommand("eigen", "eigenspaces over F_p[omega]");
  eig->add_option("FILE", file, "instance JSON")->required();
  eig->add_option("--n", n, "root of unity order")->required()->check(CLI::PositiveNumber);
  auto* gl = app.add_subcommand("glauberman", "the affine example over GF(125)");
  auto* suite = app.add_subcommand("suite", "run every instance of a corpus");
  suite->add_option("FILE", file, "corpus JSON")->required();
  suite->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(file);
    if (*aut) return cmd_auto(file);
    if (*dec) return cmd_decompose(file, word);
    if (*lie) return cmd_lie(file, p);
    if (*eig) return cmd_eigen(file, n);
    if (*gl) return cmd_glauberman();
    if (*suite) return cmd_suite(file, jobs, cap);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    const bool input = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownSpec ||
                       e.code() == ErrorCode::CapExceeded;
    emit({{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    std::cerr << e.what() << "\n";
    return input ? kUsage : kInvariant;
  }
  return kUsage;
}
