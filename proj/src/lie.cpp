#include "cplab/lie.hpp"

#include <map>
#include <numeric>

#include "cplab/error.hpp"
#include "cplab/structure.hpp"

namespace cplab {

namespace {

std::string term_name(std::size_t i) { return "D" + std::to_string(i); }

std::uint64_t checked_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Series

Subgroup NpSeries::term(std::size_t i) const {
  if (i >= 1 && i <= terms.size()) return terms[i - 1];
  return Subgroup::trivial(group);
}

NpSeries jlz_series(const Subgroup& g, std::uint64_t p) {
  checked_prime(p);
  if (!is_prime_power_of(g.order(), p)) {
    throw Error(ErrorCode::NotAPGroup, "order " + std::to_string(g.order()) +
                                           " is not a power of " + std::to_string(p));
  }
  NpSeries series{g.group_ptr(), p, {}};
  if (g.is_trivial()) return series;

  const std::uint64_t exponent = subgroup_exponent(g);
  auto gamma = lower_central_series(g).terms;
  gamma.pop_back();  // trivial
  std::map<std::pair<std::size_t, std::uint64_t>, Subgroup> powers;
  auto power_of = [&](std::size_t j, std::uint64_t pk) -> const Subgroup& {
    auto key = std::make_pair(j, pk);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, power_subgroup(gamma[j - 1], pk)).first;
    return it->second;
  };

  for (std::size_t i = 1;; ++i) {
    SubgroupBuilder builder(g.group_ptr());
    for (std::size_t j = 1; j <= gamma.size(); ++j) {
      std::uint64_t pk = 1;
      while (j * pk < i) pk *= p;
      if (pk >= exponent) continue;  // trivial power subgroup
      builder.add_all(power_of(j, pk).generators());
    }
    if (builder.order() == 1) break;
    series.terms.push_back(builder.build());
  }
  return series;
}

NpSeriesReport verify_np_series(const NpSeries& series) {
  NpSeriesReport report;
  const std::size_t m = series.length();
  for (std::size_t i = 1; i <= m; ++i) {
    const Subgroup di = series.term(i);
    if (i > 1 && !di.is_subset_of(series.term(i - 1))) {
      report.violations.push_back(term_name(i) + " not in " + term_name(i - 1));
    }
    for (std::size_t j = i; j <= m; ++j) {
      if (!commutator_subgroup_pair(di, series.term(j)).is_subset_of(series.term(i + j))) {
        report.violations.push_back("[" + term_name(i) + "," + term_name(j) + "] not in " +
                                    term_name(i + j));
      }
    }
    if (!power_subgroup(di, series.p).is_subset_of(series.term(series.p * i))) {
      report.violations.push_back(term_name(i) + "^p not in " + term_name(series.p * i));
    }
  }
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Graded Lie algebra

GradedLieAlgebra::GradedLieAlgebra(NpSeries series)
    : series_(std::move(series)), field_(FiniteField::prime_field(static_cast<std::uint32_t>(series_.p))) {
  const FiniteGroup& G = *series_.group;
  const std::uint64_t p = series_.p;
  const std::size_t m = series_.length();

  for (std::size_t i = 1; i <= m; ++i) {
    const Subgroup di = series_.term(i);
    const Subgroup next = series_.term(i + 1);
    bool elementary = next.is_subset_of(di) && is_normal_in(next, di);
    for (Elem x : di.generators()) {
      if (!next.contains(G.pow(x, static_cast<std::int64_t>(p)))) elementary = false;
      for (Elem y : di.generators()) {
        if (!next.contains(G.commutator(x, y))) elementary = false;
      }
    }
    if (!elementary) {
      throw Error(ErrorCode::NotElementaryAbelianLayer,
                  term_name(i) + "/" + term_name(i + 1) + " is not elementary abelian");
    }

    LieLayer layer;
    SubgroupBuilder builder(next);
    for (Elem x : di.members()) {
      if (builder.add(x)) layer.basis.push_back(x);
    }
    layer.dim = layer.basis.size();
    if (next.order() * ipow(p, static_cast<unsigned>(layer.dim)) != di.order()) {
      throw Error(ErrorCode::NotElementaryAbelianLayer,
                  term_name(i) + "/" + term_name(i + 1) + " index is not p^dim");
    }

    layer.code_of.assign(G.order(), -1);
    const std::uint64_t count = ipow(p, static_cast<unsigned>(layer.dim));
    for (std::uint64_t code = 0; code < count; ++code) {
      Elem rep = kIdentity;
      std::uint64_t rest = code;
      for (std::size_t a = 0; a < layer.dim; ++a) {
        rep = G.mul(rep, G.pow(layer.basis[a], static_cast<std::int64_t>(rest % p)));
        rest /= p;
      }
      for (Elem n : next.members()) layer.code_of[G.mul(rep, n)] = static_cast<std::int64_t>(code);
    }
    offsets_.push_back(dim_);
    dim_ += layer.dim;
    layers_.push_back(std::move(layer));
  }

  structure_.assign(dim_ * dim_ * dim_, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t a = 0; a < layers_[i - 1].dim; ++a) {
        for (std::size_t b = 0; b < layers_[j - 1].dim; ++b) {
          const Elem c = G.commutator(layers_[i - 1].basis[a], layers_[j - 1].basis[b]);
          if (i + j > m) {
            if (c != kIdentity) {
              throw Error(ErrorCode::PreconditionViolated,
                          "commutator escapes the series at " + term_name(i + j));
            }
            continue;
          }
          if (layers_[i + j - 1].code_of[c] < 0) {
            throw Error(ErrorCode::PreconditionViolated,
                        "commutator not in " + term_name(i + j));
          }
          const Vec coords = layer_coords(i + j, c);
          const std::size_t row = (offsets_[i - 1] + a) * dim_ + offsets_[j - 1] + b;
          for (std::size_t k = 0; k < coords.size(); ++k) {
            structure_[row * dim_ + offsets_[i + j - 1] + k] = coords[k];
          }
        }
      }
    }
  }

  // L_p(G): layer k+1 is spanned by [V_k, L_1].
  generated_.resize(m);
  for (std::size_t i = 1; i <= m; ++i) generated_[i - 1] = Matrix(0, layers_[i - 1].dim);
  if (m >= 1) generated_[0] = Matrix::identity(layers_[0].dim);
  for (std::size_t i = 1; i < m; ++i) {
    Matrix span(0, layers_[i].dim);
    for (std::size_t r = 0; r < generated_[i - 1].rows(); ++r) {
      const Vec v = embed(i, generated_[i - 1].row(r));
      for (std::size_t a = 0; a < layers_[0].dim; ++a) {
        span.append_row(restrict_to_layer(i + 1, bracket(v, unit(offsets_[0] + a))));
      }
    }
    generated_[i] = linalg::row_space(field_, span);
  }
  generated_flags_.assign(dim_, false);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t a = 0; a < layers_[i - 1].dim; ++a) {
      Vec e(layers_[i - 1].dim, 0);
      e[a] = 1;
      generated_flags_[offsets_[i - 1] + a] = linalg::in_span(field_, generated_[i - 1], e);
    }
  }

  // Lower central series of L_p(G) itself.
  Matrix lp(0, dim_);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t r = 0; r < generated_[i - 1].rows(); ++r) lp.append_row(embed(i, generated_[i - 1].row(r)));
  }
  Matrix term = lp;
  while (term.rows() > 0) {
    ++generated_class_;
    Matrix next(0, dim_);
    for (std::size_t r = 0; r < term.rows(); ++r) {
      for (std::size_t s = 0; s < lp.rows(); ++s) next.append_row(bracket(term.row(r), lp.row(s)));
    }
    term = linalg::row_space(field_, next);
  }
}

std::vector<std::size_t> GradedLieAlgebra::layer_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& l : layers_) dims.push_back(l.dim);
  return dims;
}

std::size_t GradedLieAlgebra::layer_of_index(std::size_t idx) const {
  for (std::size_t i = layers_.size(); i >= 1; --i) {
    if (idx >= offsets_[i - 1] && layers_[i - 1].dim > 0) return i;
  }
  return 0;
}

std::vector<StructureConstant> GradedLieAlgebra::sparse_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto c = constant(a, b, k);
        if (c == 0) continue;
        const std::size_t li = layer_of_index(a), lj = layer_of_index(b), lk = layer_of_index(k);
        out.push_back({li, a - offsets_[li - 1], lj, b - offsets_[lj - 1], lk, c,
                       k - offsets_[lk - 1]});
      }
    }
  }
  return out;
}

Vec GradedLieAlgebra::unit(std::size_t idx) const {
  Vec v(dim_, 0);
  v[idx] = 1;
  return v;
}

Vec GradedLieAlgebra::bracket(const Vec& u, const Vec& v) const {
  Vec out(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (v[b] == 0) continue;
      const auto uv = field_.mul(u[a], v[b]);
      const std::size_t row = (a * dim_ + b) * dim_;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (structure_[row + k] != 0) out[k] = field_.add(out[k], field_.mul(uv, structure_[row + k]));
      }
    }
  }
  return out;
}

Matrix GradedLieAlgebra::ad(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vec row = bracket(unit(j), a);
    for (std::size_t k = 0; k < dim_; ++k) m.at(j, k) = row[k];
  }
  return m;
}

std::size_t GradedLieAlgebra::depth(Elem x) const {
  if (x == kIdentity) return 0;
  for (std::size_t i = layers_.size(); i >= 1; --i) {
    if (layers_[i - 1].code_of[x] > 0) return i;
  }
  return 0;
}

Vec GradedLieAlgebra::layer_coords(std::size_t i, Elem x) const {
  const LieLayer& layer = layers_.at(i - 1);
  std::int64_t code = layer.code_of[x];
  if (code < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "element " + std::to_string(x) + " is not in " + term_name(i));
  }
  Vec v(layer.dim);
  for (std::size_t a = 0; a < layer.dim; ++a) {
    v[a] = static_cast<FiniteField::Elem>(code % static_cast<std::int64_t>(series_.p));
    code /= static_cast<std::int64_t>(series_.p);
  }
  return v;
}

Vec GradedLieAlgebra::embed(std::size_t i, const Vec& layer_vec) const {
  Vec v(dim_, 0);
  for (std::size_t a = 0; a < layer_vec.size(); ++a) v[offsets_[i - 1] + a] = layer_vec[a];
  return v;
}

Vec GradedLieAlgebra::homogeneous(std::size_t i, Elem x) const { return embed(i, layer_coords(i, x)); }

Vec GradedLieAlgebra::restrict_to_layer(std::size_t i, const Vec& v) const {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(offsets_[i - 1]),
             v.begin() + static_cast<std::ptrdiff_t>(offsets_[i - 1] + layers_[i - 1].dim));
}

Matrix GradedLieAlgebra::layer_action(std::size_t i, const Automorphism& phi) const {
  const LieLayer& layer = layers_.at(i - 1);
  Matrix m(0, layer.dim);
  for (Elem b : layer.basis) m.append_row(layer_coords(i, phi(b)));
  return m;
}

GradedLieAlgebra build_graded_lie(NpSeries series) { return GradedLieAlgebra(std::move(series)); }

bool is_antisymmetric(const GradedLieAlgebra& a) {
  const FiniteField& f = a.field();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    for (std::size_t y = x; y < a.dim(); ++y) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (a.constant(x, y, k) != f.neg(a.constant(y, x, k))) return false;
      }
    }
  }
  return true;
}

bool satisfies_jacobi(const GradedLieAlgebra& a) {
  const FiniteField& f = a.field();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    for (std::size_t y = 0; y < a.dim(); ++y) {
      for (std::size_t z = 0; z < a.dim(); ++z) {
        const Vec ex = a.unit(x), ey = a.unit(y), ez = a.unit(z);
        Vec total = a.bracket(a.bracket(ex, ey), ez);
        total = linalg::add(f, total, a.bracket(a.bracket(ey, ez), ex));
        total = linalg::add(f, total, a.bracket(a.bracket(ez, ex), ey));
        if (!linalg::is_zero(total)) return false;
      }
    }
  }
  return true;
}

std::size_t ad_nilpotency_index(const GradedLieAlgebra& a, const Vec& element) {
  const Matrix ad = a.ad(element);
  Matrix power = ad;
  std::size_t n = 1;
  // Grading bounds the index by the number of layers + 1.
  while (!power.is_zero()) {
    power = linalg::mul(a.field(), power, ad);
    ++n;
    if (n > a.dim() + 1) {
      throw Error(ErrorCode::PreconditionViolated, "ad is not nilpotent on a graded algebra");
    }
  }
  return n;
}

LazardReport check_lazard(const GradedLieAlgebra& a, Elem x) {
  LazardReport report{x, a.depth(x), false, true};
  if (x == kIdentity) return report;
  const std::uint64_t p = a.p();
  const std::size_t i = report.depth;
  const Matrix lhs = linalg::power(a.field(), a.ad(a.homogeneous(i, x)), p);

  Vec power_star = a.zero();
  const std::size_t target = static_cast<std::size_t>(p) * i;
  const Elem xp = a.group().pow(x, static_cast<std::int64_t>(p));
  if (target <= a.num_layers()) {
    if (a.layer(target).code_of[xp] < 0) {
      report.pass = false;  // x^p escaped D_{pi}: the series is not N_p
      return report;
    }
    power_star = a.homogeneous(target, xp);
    report.power_in_layer = !linalg::is_zero(power_star);
  } else if (xp != kIdentity) {
    report.pass = false;
    return report;
  }
  report.pass = lhs == a.ad(power_star);
  return report;
}

RileyReport check_riley(const GradedLieAlgebra& a) {
  const std::size_t c = a.generated_class();
  const Subgroup term = a.series().term(c + 1);
  RileyReport report;
  report.lie_class = c;
  report.powerful_term_order = term.order();
  report.powerful = is_powerful(term, a.p());
  report.group_exponent = a.series().terms.empty() ? 1 : subgroup_exponent(a.series().terms[0]);
  report.term_exponent = subgroup_exponent(term);
  const std::uint64_t bound = report.term_exponent * ipow(a.p(), static_cast<unsigned>(c));
  report.exponent_split = bound % report.group_exponent == 0;
  return report;
}

RileyReport check_riley(const Subgroup& g, std::uint64_t p) {
  return check_riley(build_graded_lie(jlz_series(g, p)));
}

SubalgebraLGH subalgebra_LGH(const GradedLieAlgebra& a, const Subgroup& h) {
  const FiniteField& f = a.field();
  SubalgebraLGH out;
  Matrix k_global(0, a.dim());
  for (std::size_t i = 1; i <= a.num_layers(); ++i) {
    Matrix span(0, a.layer(i).dim);
    for (Elem x : h.members()) {
      if (a.layer(i).code_of[x] >= 0) span.append_row(a.layer_coords(i, x));
    }
    Matrix basis = linalg::row_space(f, span);
    for (std::size_t r = 0; r < basis.rows(); ++r) k_global.append_row(a.embed(i, basis.row(r)));
    out.dims.push_back(basis.rows());
    out.layers.push_back(std::move(basis));
  }

  out.closed = true;
  for (std::size_t r = 0; r < k_global.rows() && out.closed; ++r) {
    for (std::size_t s = 0; s < k_global.rows(); ++s) {
      if (!linalg::in_span(f, k_global, a.bracket(k_global.row(r), k_global.row(s)))) {
        out.closed = false;
        break;
      }
    }
  }

  Matrix w = Matrix::identity(a.dim());
  out.u = 0;
  do {
    ++out.u;
    Matrix next(0, a.dim());
    for (std::size_t r = 0; r < w.rows(); ++r) {
      for (std::size_t s = 0; s < k_global.rows(); ++s) next.append_row(a.bracket(w.row(r), k_global.row(s)));
    }
    w = linalg::row_space(f, next);
  } while (w.rows() > 0);
  return out;
}

LieFixedPointsReport lie_fixed_points(const GradedLieAlgebra& a, const Automorphism& phi) {
  if (!phi.is_coprime()) throw Error(ErrorCode::NotCoprime, "automorphism order shares a factor with |G|");
  const FiniteField& f = a.field();
  Subgroup fixed = fixed_points(Subgroup::whole(phi.group_ptr()), phi);
  SubalgebraLGH span = subalgebra_LGH(a, fixed);
  LieFixedPointsReport report{{}, {}, true};
  for (std::size_t i = 1; i <= a.num_layers(); ++i) {
    const Matrix action = a.layer_action(i, phi);
    const Matrix kernel =
        linalg::left_kernel(f, linalg::sub(f, action, Matrix::identity(action.rows())));
    const Matrix centralizer = linalg::intersect(f, a.generated_layer(i), kernel);
    const Matrix from_group = linalg::intersect(f, a.generated_layer(i), span.layers[i - 1]);
    report.centralizer_dims.push_back(centralizer.rows());
    report.span_dims.push_back(from_group.rows());
    if (!(centralizer == from_group)) report.pass = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Scalar extension and eigenspaces

std::size_t ExtendedLayer::eigen_dim_sum() const {
  std::size_t total = 0;
  for (const auto& e : eigenspaces) total += e.basis.rows();
  return total;
}

poly::Poly cyclotomic_factor(std::uint64_t n, std::uint32_t p) {
  if (n == 0 || std::gcd(n, std::uint64_t{p}) != 1) {
    throw Error(ErrorCode::NotCoprimeToP, "n = " + std::to_string(n) + " shares a factor with p = " +
                                              std::to_string(p));
  }
  const auto degree = static_cast<int>(multiplicative_order_mod(p, n));
  const poly::Poly phi_n = poly::cyclotomic(n, p);
  const std::uint64_t count = ipow(p, static_cast<unsigned>(degree));
  for (std::uint64_t code = 0; code < count; ++code) {
    poly::Poly f = poly::monic_from_code(code, degree, p);
    if (poly::mod(phi_n, f, p).empty() && poly::is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::NotFound, "no irreducible factor of the cyclotomic polynomial");
}

ExtendedAlgebra extend_and_eigendecompose(const GradedLieAlgebra& a, const Automorphism& phi,
                                          std::uint64_t n) {
  const auto p = static_cast<std::uint32_t>(a.p());
  FiniteField ext(p, cyclotomic_factor(n, p));
  ExtendedAlgebra out{n, ext, ext.generator_t(), {}};
  if (ext.multiplicative_order(out.omega) != n) {
    throw Error(ErrorCode::PreconditionViolated, "omega is not a primitive n-th root of unity");
  }

  for (std::size_t i = 1; i <= a.num_layers(); ++i) {
    ExtendedLayer layer;
    layer.dim = a.layer(i).dim;
    layer.action = a.layer_action(i, phi);  // F_p codes embed unchanged
    if (!(linalg::power(ext, layer.action, n) == Matrix::identity(layer.dim))) {
      throw Error(ErrorCode::PreconditionViolated,
                  "phi^" + std::to_string(n) + " is not the identity on " + term_name(i));
    }
    for (std::uint64_t j = 0; j < n; ++j) {
      const auto lambda = ext.pow(out.omega, j);
      const Matrix shifted =
          linalg::sub(ext, layer.action, linalg::scale(ext, Matrix::identity(layer.dim), lambda));
      layer.eigenspaces.push_back({j, lambda, linalg::left_kernel(ext, shifted)});
    }
    if (layer.eigen_dim_sum() != layer.dim) out.dims_sum_ok = false;
    out.layers.push_back(std::move(layer));
  }

  // [E_i(lambda), E_j(mu)] must land in E_{i+j}(lambda mu).
  auto bracket = [&](const Vec& u, const Vec& v) {
    Vec w(a.dim(), 0);
    for (std::size_t x = 0; x < a.dim(); ++x) {
      if (u[x] == 0) continue;
      for (std::size_t y = 0; y < a.dim(); ++y) {
        if (v[y] == 0) continue;
        const auto uv = ext.mul(u[x], v[y]);
        for (std::size_t k = 0; k < a.dim(); ++k) {
          const auto c = a.constant(x, y, k);
          if (c != 0) w[k] = ext.add(w[k], ext.mul(uv, c));
        }
      }
    }
    return w;
  };
  for (std::size_t i = 1; i <= a.num_layers(); ++i) {
    for (std::size_t j = 1; j <= a.num_layers(); ++j) {
      for (const auto& ei : out.layers[i - 1].eigenspaces) {
        for (const auto& ej : out.layers[j - 1].eigenspaces) {
          for (std::size_t r = 0; r < ei.basis.rows(); ++r) {
            for (std::size_t s = 0; s < ej.basis.rows(); ++s) {
              ++out.bracket_pairs_checked;
              const Vec w = bracket(a.embed(i, ei.basis.row(r)), a.embed(j, ej.basis.row(s)));
              if (i + j > a.num_layers()) {
                if (!linalg::is_zero(w)) out.bracket_rule_holds = false;
                continue;
              }
              const Vec wk = a.restrict_to_layer(i + j, w);
              const auto product = ext.mul(ei.eigenvalue, ej.eigenvalue);
              if (linalg::vec_mul(ext, wk, out.layers[i + j - 1].action) != linalg::scale(ext, wk, product)) {
                out.bracket_rule_holds = false;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace cplab
