#include "cplab/corpus.hpp"

#include <numeric>

#include "cplab/error.hpp"

namespace cplab {

using nlohmann::json;

namespace {

// Everything a recipe may need to know about how a group was put together.
struct Construction {
  std::string family;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<Construction> factors;
  std::optional<FiniteField> field;
  bool affine = false;
};

std::uint64_t param(const json& params, const char* key) {
  if (!params.is_object() || !params.contains(key) || !params[key].is_number_integer() ||
      params[key].get<std::int64_t>() < 0) {
    throw Error(ErrorCode::ParseError, std::string("missing or invalid parameter '") + key + "'");
  }
  return params[key].get<std::uint64_t>();
}

std::vector<Point> points_from_json(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "generator must be an array");
  std::vector<Point> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<Point>::max()) {
      throw Error(ErrorCode::InvalidPermutation, "image out of range");
    }
    out.push_back(v.get<Point>());
  }
  return out;
}

Word word_from_json(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "word must be an array");
  Word w;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "word letter must be an integer");
    w.push_back(v.get<int>());
  }
  return w;
}

Construction from_generators(std::string family, std::size_t degree,
                             std::vector<Permutation> gens) {
  Construction c;
  c.family = std::move(family);
  c.degree = degree;
  c.gens = std::move(gens);
  return c;
}

Construction make_cyclic(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::ParseError, "cyclic needs m >= 1");
  std::vector<Point> images(m);
  for (std::size_t i = 0; i < m; ++i) images[i] = static_cast<Point>((i + 1) % m);
  return from_generators("cyclic", m, {Permutation(std::move(images))});
}

Construction make_dihedral(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::ParseError, "dihedral needs m >= 3");
  std::vector<Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return from_generators("dihedral", m, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

Construction make_symmetric(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::ParseError, "symmetric needs m >= 1");
  std::vector<Point> cycle(m);
  for (std::size_t i = 0; i < m; ++i) cycle[i] = static_cast<Point>((i + 1) % m);
  std::vector<Permutation> gens{Permutation(std::move(cycle))};
  if (m >= 2) gens.push_back(Permutation::from_cycles(m, {{0, 1}}));
  return from_generators("symmetric", m, std::move(gens));
}

Construction make_heisenberg(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::ParseError, "heisenberg needs a prime p");
  // Row vector (v0, v1, v2) times I + E_01 (x) or I + E_12 (y).
  const std::size_t n = std::size_t{p} * p * p;
  std::vector<Point> x(n), y(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t v0 = v % p, v1 = (v / p) % p, v2 = v / (std::size_t{p} * p);
    x[v] = static_cast<Point>(v0 + p * ((v1 + v0) % p) + std::size_t{p} * p * v2);
    y[v] = static_cast<Point>(v0 + p * v1 + std::size_t{p} * p * ((v2 + v1) % p));
  }
  return from_generators("heisenberg", n, {Permutation(std::move(x)), Permutation(std::move(y))});
}

Construction make_modular(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::ParseError, "modular needs a prime p");
  const std::size_t n = std::size_t{p} * p;
  std::vector<Point> a(n), b(n);
  for (std::size_t x = 0; x < n; ++x) {
    a[x] = static_cast<Point>((x + 1) % n);
    b[x] = static_cast<Point>(((1 + p) * x) % n);
  }
  return from_generators("modular", n, {Permutation(std::move(a)), Permutation(std::move(b))});
}

Construction make_quaternion(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::ParseError, "quaternion needs m >= 1");
  // Point a^i b^j has index i + 2m j; generators act by right multiplication.
  const std::size_t two_m = 2 * m;
  auto index = [two_m](std::size_t i, std::size_t j) { return static_cast<Point>(i % two_m + two_m * j); };
  std::vector<Point> a(2 * two_m), b(2 * two_m);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < two_m; ++i) {
      // (a^i b^j) a = a^(i + (-1)^j) b^j
      a[index(i, j)] = index(j == 0 ? i + 1 : i + two_m - 1, j);
      // (a^i b^j) b = a^i b^(j+1), with b^2 = a^m
      b[index(i, j)] = j == 0 ? index(i, 1) : index(i + m, 0);
    }
  }
  return from_generators("quaternion", 2 * two_m, {Permutation(std::move(a)), Permutation(std::move(b))});
}

Construction make_additive(std::uint32_t p, int k) {
  FiniteField field = FiniteField::with_least_modulus(p, k);
  const auto q = static_cast<std::size_t>(field.size());
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) {
    poly::Poly basis(static_cast<std::size_t>(i) + 1, 0);
    basis[i] = 1;
    const auto e = field.from_coeffs(basis);
    std::vector<Point> images(q);
    for (std::size_t x = 0; x < q; ++x) images[x] = static_cast<Point>(field.add(static_cast<FiniteField::Elem>(x), e));
    gens.emplace_back(std::move(images));
  }
  Construction c = from_generators("additive", q, std::move(gens));
  c.field = field;
  return c;
}

Construction make_affine(std::uint32_t p, int k, std::optional<std::uint64_t> m) {
  FiniteField field = FiniteField::with_least_modulus(p, k);
  const auto q = static_cast<std::size_t>(field.size());
  const std::uint64_t mult_order = m.value_or(q - 1);
  if (mult_order < 1 || (q - 1) % mult_order != 0) {
    throw Error(ErrorCode::ParseError, "affine multiplier order must divide p^k - 1");
  }
  const auto g = field.pow(field.multiplicative_generator(), (q - 1) / mult_order);
  std::vector<Point> translate(q), scale(q);
  for (std::size_t x = 0; x < q; ++x) {
    const auto fx = static_cast<FiniteField::Elem>(x);
    translate[x] = static_cast<Point>(field.add(fx, field.one()));
    scale[x] = static_cast<Point>(field.mul(fx, g));
  }
  Construction c = from_generators("affine", q, {Permutation(std::move(translate)), Permutation(std::move(scale))});
  c.field = field;
  c.affine = true;
  return c;
}

Construction make_construction(const json& spec);

Construction make_direct_product(const json& params) {
  if (!params.contains("factors") || !params["factors"].is_array() || params["factors"].empty()) {
    throw Error(ErrorCode::ParseError, "direct_product needs a nonempty 'factors' array");
  }
  Construction c;
  c.family = "direct_product";
  for (const auto& f : params["factors"]) c.factors.push_back(make_construction(f));
  for (const auto& f : c.factors) c.degree += f.degree;
  std::size_t offset = 0;
  for (const auto& f : c.factors) {
    for (const auto& g : f.gens) {
      std::vector<Point> images(c.degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree; ++i) images[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      c.gens.emplace_back(std::move(images));
    }
    offset += f.degree;
  }
  return c;
}

Construction make_permutations(const json& params) {
  const std::size_t degree = param(params, "degree");
  std::vector<Permutation> gens;
  if (params.contains("generators")) {
    for (const auto& g : params["generators"]) gens.emplace_back(points_from_json(g));
  }
  return from_generators("permutations", degree, std::move(gens));
}

Construction make_construction(const json& spec) {
  if (spec.contains("degree")) return make_permutations(spec);
  if (!spec.contains("name") || !spec["name"].is_string()) {
    throw Error(ErrorCode::ParseError, "instance spec needs a 'name'");
  }
  const std::string name = spec["name"];
  const json params = spec.value("params", json::object());
  if (name == "cyclic") return make_cyclic(param(params, "m"));
  if (name == "dihedral") return make_dihedral(param(params, "m"));
  if (name == "symmetric") return make_symmetric(param(params, "m"));
  if (name == "heisenberg") return make_heisenberg(static_cast<std::uint32_t>(param(params, "p")));
  if (name == "modular") return make_modular(static_cast<std::uint32_t>(param(params, "p")));
  if (name == "quaternion") return make_quaternion(param(params, "m"));
  if (name == "additive") {
    return make_additive(static_cast<std::uint32_t>(param(params, "p")),
                         static_cast<int>(param(params, "k")));
  }
  if (name == "affine") {
    std::optional<std::uint64_t> m;
    if (params.contains("m")) m = param(params, "m");
    return make_affine(static_cast<std::uint32_t>(param(params, "p")),
                       static_cast<int>(param(params, "k")), m);
  }
  if (name == "glauberman") return make_affine(5, 3, std::nullopt);
  if (name == "direct_product") return make_direct_product(params);
  if (name == "permutations") return make_permutations(params);
  throw Error(ErrorCode::UnknownSpec, "unknown group family '" + name + "'");
}

Word repeat_letter(int letter, std::uint64_t times) { return Word(times, letter); }

std::vector<Word> recipe_images(const Construction& c, const json& recipe) {
  const std::size_t ngens = c.gens.size();
  const std::string kind = recipe.value("recipe", std::string(recipe.contains("images") ? "images" : ""));
  std::vector<Word> images;

  if (kind == "identity") {
    for (std::size_t s = 0; s < ngens; ++s) images.push_back({static_cast<int>(s) + 1});
  } else if (kind == "power") {
    if (!recipe.contains("k") || !recipe["k"].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "power recipe needs integer 'k'");
    }
    const auto k = recipe["k"].get<std::int64_t>();
    for (std::size_t s = 0; s < ngens; ++s) {
      const int letter = static_cast<int>(s) + 1;
      images.push_back(repeat_letter(k >= 0 ? letter : -letter, static_cast<std::uint64_t>(std::llabs(k))));
    }
  } else if (kind == "swap" || kind == "cycle") {
    if (c.factors.size() < 2 || (kind == "swap" && c.factors.size() != 2)) {
      throw Error(ErrorCode::UnknownSpec, kind + " needs a direct product of matching factors");
    }
    const std::size_t per = c.factors[0].gens.size();
    for (const auto& f : c.factors) {
      if (f.gens.size() != per) throw Error(ErrorCode::UnknownSpec, kind + " needs factors with equal generator counts");
    }
    const std::size_t r = c.factors.size();
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < per; ++i) {
        images.push_back({static_cast<int>(((j + 1) % r) * per + i) + 1});
      }
    }
  } else if (kind == "frobenius") {
    if (!c.field) throw Error(ErrorCode::UnknownSpec, "frobenius needs an additive or affine group");
    const FiniteField& f = *c.field;
    if (c.affine) {
      images.push_back({1});
      images.push_back(repeat_letter(2, f.characteristic()));
    } else {
      for (int i = 0; i < f.degree(); ++i) {
        poly::Poly basis(static_cast<std::size_t>(i) + 1, 0);
        basis[i] = 1;
        const poly::Poly image = f.coeffs(f.frobenius(f.from_coeffs(basis)));
        Word w;
        for (int j = 0; j < f.degree(); ++j) {
          for (std::uint32_t t = 0; t < image[j]; ++t) w.push_back(j + 1);
        }
        images.push_back(std::move(w));
      }
    }
  } else if (kind == "images") {
    if (!recipe.contains("images") || !recipe["images"].is_array()) {
      throw Error(ErrorCode::ParseError, "images recipe needs an 'images' array");
    }
    for (const auto& w : recipe["images"]) images.push_back(word_from_json(w));
  } else if (kind == "inner") {
    const Word w = word_from_json(recipe.value("word", json::array()));
    Word w_inv(w.rbegin(), w.rend());
    for (int& letter : w_inv) letter = -letter;
    for (std::size_t s = 0; s < ngens; ++s) {
      Word img = w_inv;
      img.push_back(static_cast<int>(s) + 1);
      img.insert(img.end(), w.begin(), w.end());
      images.push_back(std::move(img));
    }
  } else if (kind == "factorwise") {
    if (!recipe.contains("factors") || recipe["factors"].size() != c.factors.size()) {
      throw Error(ErrorCode::ParseError, "factorwise needs one recipe per factor");
    }
    int offset = 0;
    for (std::size_t j = 0; j < c.factors.size(); ++j) {
      for (Word w : recipe_images(c.factors[j], recipe["factors"][j])) {
        for (int& letter : w) letter += letter > 0 ? offset : -offset;
        images.push_back(std::move(w));
      }
      offset += static_cast<int>(c.factors[j].gens.size());
    }
  } else {
    throw Error(ErrorCode::UnknownSpec, "unknown automorphism recipe '" + kind + "'");
  }
  return images;
}

}  // namespace

GroupPtr cyclic_group(std::size_t m) {
  auto c = make_cyclic(m);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GroupPtr dihedral_group(std::size_t m) {
  auto c = make_dihedral(m);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GroupPtr symmetric_group(std::size_t m) {
  auto c = make_symmetric(m);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GroupPtr heisenberg_group(std::uint32_t p) {
  auto c = make_heisenberg(p);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GroupPtr modular_group(std::uint32_t p) {
  auto c = make_modular(p);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GroupPtr quaternion_group(std::size_t m) {
  auto c = make_quaternion(m);
  return FiniteGroup::generate(c.degree, std::move(c.gens));
}

GlaubermanExample build_glauberman_example() {
  Construction c = make_affine(5, 3, std::nullopt);
  const FiniteField& field = *c.field;
  const auto multiplier = field.multiplicative_generator();
  std::vector<Point> frob(field.size());
  for (std::size_t x = 0; x < frob.size(); ++x) {
    frob[x] = static_cast<Point>(field.frobenius(static_cast<FiniteField::Elem>(x)));
  }
  GroupPtr group = FiniteGroup::generate(c.degree, c.gens);
  Automorphism phi = Automorphism::build(group, {{1}, {2, 2, 2, 2, 2}});
  if (group->order() != 15500 || phi.order() != 3 || !phi.is_coprime()) {
    throw Error(ErrorCode::PreconditionViolated, "affine group over GF(125) has unexpected shape");
  }
  return GlaubermanExample{field, multiplier, std::move(group), std::move(phi),
                           Permutation(std::move(frob))};
}

Instance build_corpus_instance(const json& spec, std::size_t cap) {
  if (!spec.is_object()) throw Error(ErrorCode::ParseError, "instance spec must be an object");
  Construction c = make_construction(spec);
  Instance inst;
  inst.spec = spec;
  inst.id = spec.value("id", spec.value("name", std::string("group")));
  inst.group = FiniteGroup::generate(c.degree, c.gens, cap);
  if (spec.contains("automorphism") && !spec["automorphism"].is_null()) {
    inst.phi = Automorphism::build(inst.group, recipe_images(c, spec["automorphism"]));
  }
  return inst;
}

}  // namespace cplab
