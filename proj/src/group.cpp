#include "cplab/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "cplab/error.hpp"

namespace cplab {

namespace {

constexpr Elem kEmptySlot = std::numeric_limits<Elem>::max();

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t mix(std::uint64_t h, Point v) {
  h ^= v;
  h *= kFnvPrime;
  return h;
}

inline std::uint64_t finish(std::uint64_t h) { return h ^ (h >> 29); }

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorCode::InvalidPermutation,
                  "image list of length " + std::to_string(images_.size()) +
                      " is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) {
        throw Error(ErrorCode::InvalidPermutation, "cycle point out of range");
      }
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& other) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(Token, std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {}

template <class ImageAt>
std::optional<Elem> FiniteGroup::lookup(ImageAt&& image_at) const {
  std::uint64_t h = kFnvOffset;
  for (std::size_t i = 0; i < base_.size(); ++i) h = mix(h, image_at(base_[i]));
  std::size_t slot = finish(h) & slot_mask_;
  while (true) {
    Elem cand = slots_[slot];
    if (cand == kEmptySlot) return std::nullopt;
    const Point* row = points_.data() + std::size_t{cand} * degree_;
    bool equal = true;
    for (Point b : base_) {
      if (row[b] != image_at(b)) {
        equal = false;
        break;
      }
    }
    if (equal) return cand;
    slot = (slot + 1) & slot_mask_;
  }
}

std::uint64_t FiniteGroup::hash_base_images(Elem e) const {
  const Point* row = points_.data() + std::size_t{e} * degree_;
  std::uint64_t h = kFnvOffset;
  for (Point b : base_) h = mix(h, row[b]);
  return finish(h);
}

void FiniteGroup::insert_index(Elem e) {
  std::size_t slot = hash_base_images(e) & slot_mask_;
  while (slots_[slot] != kEmptySlot) slot = (slot + 1) & slot_mask_;
  slots_[slot] = e;
}

void FiniteGroup::rebuild_index() {
  std::size_t capacity = 16;
  while (capacity < 2 * (order_ + 1)) capacity <<= 1;
  slots_.assign(capacity, kEmptySlot);
  slot_mask_ = capacity - 1;
  for (Elem e = 0; e < order_; ++e) insert_index(e);
}

GroupPtr FiniteGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                               std::size_t cap) {
  if (cap < 1) throw Error(ErrorCode::CapExceeded, "enumeration cap must be at least 1");
  if (degree > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::InvalidPermutation, "degree too large");
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::InvalidPermutation,
                  "generator of degree " + std::to_string(g.degree()) +
                      " in a group of degree " + std::to_string(degree));
    }
  }

  auto group = std::make_shared<FiniteGroup>(Token{}, degree, std::move(generators));
  FiniteGroup& G = *group;
  const std::size_t ngens = G.generators_.size();

  // Enumeration phase: the index keys on every point.
  G.base_.resize(degree);
  std::iota(G.base_.begin(), G.base_.end(), Point{0});
  G.order_ = 1;
  G.points_ = Permutation::identity(degree).images();
  G.parent_ = {0};
  G.parent_gen_ = {0};
  G.rebuild_index();

  std::vector<Point> scratch(degree);
  for (Elem cur = 0; cur < G.order_; ++cur) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const auto& gen = G.generators_[s].images();
      const Point* row = G.points_.data() + std::size_t{cur} * degree;
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = gen[row[i]];
      if (G.lookup([&](Point b) { return scratch[b]; })) continue;
      if (G.order_ >= cap) {
        throw Error(ErrorCode::CapExceeded,
                    "group order exceeds cap of " + std::to_string(cap));
      }
      G.points_.insert(G.points_.end(), scratch.begin(), scratch.end());
      G.parent_.push_back(cur);
      G.parent_gen_.push_back(static_cast<std::uint32_t>(s));
      ++G.order_;
      if (2 * G.order_ + 2 > G.slots_.size()) {
        G.rebuild_index();
      } else {
        G.insert_index(static_cast<Elem>(G.order_ - 1));
      }
    }
  }

  // Greedy base: keep adding moved points until only the identity fixes
  // all of them.
  std::vector<Elem> stabilizer(G.order_);
  std::iota(stabilizer.begin(), stabilizer.end(), Elem{0});
  G.base_.clear();
  for (std::size_t pt = 0; pt < degree && stabilizer.size() > 1; ++pt) {
    std::vector<Elem> next;
    for (Elem e : stabilizer) {
      if (G.points_[std::size_t{e} * degree + pt] == pt) next.push_back(e);
    }
    if (next.size() != stabilizer.size()) {
      G.base_.push_back(static_cast<Point>(pt));
      stabilizer = std::move(next);
    }
  }
  G.rebuild_index();

  G.generator_elems_.resize(ngens);
  for (std::size_t s = 0; s < ngens; ++s) {
    G.generator_elems_[s] = *G.find(G.generators_[s]);
  }

  G.inverse_.resize(G.order_);
  G.orders_.resize(G.order_);
  std::vector<bool> seen(degree);
  for (Elem e = 0; e < G.order_; ++e) {
    const Point* row = G.points_.data() + std::size_t{e} * degree;
    for (std::size_t i = 0; i < degree; ++i) scratch[row[i]] = static_cast<Point>(i);
    G.inverse_[e] = *G.lookup([&](Point b) { return scratch[b]; });

    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < degree; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = row[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    G.orders_[e] = ord;
    G.exponent_ = std::lcm(G.exponent_, ord);
  }
  return group;
}

Permutation FiniteGroup::permutation(Elem x) const {
  auto row = images(x);
  return Permutation(std::vector<Point>(row.begin(), row.end()));
}

std::optional<Elem> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  auto e = lookup([&](Point b) { return images[b]; });
  if (!e) return std::nullopt;
  // Base images only pin down group elements; reject non-members.
  if (!std::equal(images.begin(), images.end(), this->images(*e).begin())) {
    return std::nullopt;
  }
  return e;
}

Elem FiniteGroup::mul(Elem x, Elem y) const {
  const Point* rx = points_.data() + std::size_t{x} * degree_;
  const Point* ry = points_.data() + std::size_t{y} * degree_;
  return *lookup([&](Point b) { return ry[rx[b]]; });
}

Elem FiniteGroup::pow(Elem x, std::int64_t k) const {
  std::uint64_t ord = orders_[x];
  std::int64_t r = k % static_cast<std::int64_t>(ord);
  if (r < 0) r += static_cast<std::int64_t>(ord);
  Elem result = kIdentity;
  Elem base = x;
  auto e = static_cast<std::uint64_t>(r);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Word FiniteGroup::word(Elem x) const {
  Word w;
  while (x != kIdentity) {
    w.push_back(static_cast<int>(parent_gen_[x]) + 1);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Elem FiniteGroup::evaluate(std::span<const int> word) const {
  Elem acc = kIdentity;
  const int ngens = static_cast<int>(generators_.size());
  for (int letter : word) {
    if (letter == 0 || letter > ngens || letter < -ngens) {
      throw Error(ErrorCode::InvalidWord,
                  "letter " + std::to_string(letter) + " outside generator range 1.." +
                      std::to_string(ngens));
    }
    Elem g = generator_elems_[std::abs(letter) - 1];
    acc = mul(acc, letter > 0 ? g : inv(g));
  }
  return acc;
}

const std::vector<std::uint32_t>& FiniteGroup::conjugacy_class_ids() const {
  std::call_once(classes_once_, [this] {
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    class_ids_.assign(order_, kUnset);
    std::uint32_t next_id = 0;
    std::vector<Elem> queue;
    for (Elem x = 0; x < order_; ++x) {
      if (class_ids_[x] != kUnset) continue;
      class_ids_[x] = next_id;
      queue.assign(1, x);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem g : generator_elems_) {
          Elem y = conj(queue[i], g);
          if (class_ids_[y] == kUnset) {
            class_ids_[y] = next_id;
            queue.push_back(y);
          }
        }
      }
      ++next_id;
    }
  });
  return class_ids_;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> sorted_members,
                   std::vector<Elem> generators)
    : group_(std::move(group)),
      members_(std::move(sorted_members)),
      mask_(group_->order(), false),
      generators_(std::move(generators)) {
  for (Elem x : members_) mask_[x] = true;
}

Subgroup Subgroup::trivial(GroupPtr group) {
  return Subgroup(std::move(group), {kIdentity}, {});
}

Subgroup Subgroup::whole(GroupPtr group) {
  std::vector<Elem> all(group->order());
  std::iota(all.begin(), all.end(), Elem{0});
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < group->num_generators(); ++i) {
    Elem g = group->generator(i);
    if (g != kIdentity && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(g);
    }
  }
  return Subgroup(std::move(group), std::move(all), std::move(gens));
}

Subgroup Subgroup::from_members(GroupPtr group, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubgroupBuilder builder(group);
  builder.add_all(members);
  if (builder.order() != members.size()) {
    throw Error(ErrorCode::PreconditionViolated, "member set is not a subgroup");
  }
  return Subgroup(std::move(group), std::move(members), builder.generators());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem x) { return other.contains(x); });
}

// ---------------------------------------------------------------------------
// SubgroupBuilder

SubgroupBuilder::SubgroupBuilder(GroupPtr group)
    : group_(std::move(group)), members_{kIdentity}, mask_(group_->order(), false) {
  mask_[kIdentity] = true;
}

SubgroupBuilder::SubgroupBuilder(const Subgroup& start)
    : group_(start.group_ptr()),
      members_(start.members()),
      mask_(group_->order(), false),
      generators_(start.generators()) {
  for (Elem x : members_) mask_[x] = true;
}

bool SubgroupBuilder::add(Elem x) {
  if (mask_[x]) return false;
  const FiniteGroup& G = *group_;
  generators_.push_back(x);
  const std::size_t old_count = members_.size();
  for (std::size_t i = 0; i < old_count; ++i) {
    Elem y = G.mul(members_[i], x);
    if (!mask_[y]) {
      mask_[y] = true;
      members_.push_back(y);
    }
  }
  for (std::size_t i = old_count; i < members_.size(); ++i) {
    for (Elem g : generators_) {
      Elem y = G.mul(members_[i], g);
      if (!mask_[y]) {
        mask_[y] = true;
        members_.push_back(y);
      }
    }
  }
  return true;
}

Subgroup SubgroupBuilder::build() const {
  std::vector<Elem> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  return Subgroup(group_, std::move(sorted), generators_);
}

// ---------------------------------------------------------------------------
// Operations

std::uint64_t element_order(const FiniteGroup& g, Elem x) { return g.element_order(x); }

std::uint64_t group_exponent(const FiniteGroup& g) { return g.exponent(); }

std::uint64_t subgroup_exponent(const Subgroup& h) {
  std::uint64_t e = 1;
  for (Elem x : h.members()) e = std::lcm(e, h.group().element_order(x));
  return e;
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seeds) {
  SubgroupBuilder builder(g);
  builder.add_all(seeds);
  return builder.build();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> common;
  for (Elem x : a.members()) {
    if (b.contains(x)) common.push_back(x);
  }
  return Subgroup::from_members(a.group_ptr(), std::move(common));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  SubgroupBuilder builder(a);
  builder.add_all(b.generators());
  return builder.build();
}

bool is_normal_in(const Subgroup& normal, const Subgroup& ambient) {
  const FiniteGroup& G = normal.group();
  for (Elem n : normal.generators()) {
    for (Elem c : ambient.generators()) {
      if (!normal.contains(G.conj(n, c))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(std::span<const Elem> seeds, const Subgroup& ambient) {
  const FiniteGroup& G = ambient.group();
  SubgroupBuilder builder(ambient.group_ptr());
  builder.add_all(seeds);
  // generators() grows while we iterate; index-based loop picks up new ones.
  for (std::size_t i = 0; i < builder.generators().size(); ++i) {
    Elem n = builder.generators()[i];
    for (Elem c : ambient.generators()) builder.add(G.conj(n, c));
  }
  return builder.build();
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
  const FiniteGroup& G = *g;
  if (!is_normal_in(n, Subgroup::whole(g))) {
    throw Error(ErrorCode::NotNormal, "kernel is not normal in the parent group");
  }
  QuotientGroup q{g, n, nullptr, {}, {}};
  const std::size_t order = G.order();
  if (n.is_trivial()) {
    q.quotient = g;
    q.coset_of.resize(order);
    std::iota(q.coset_of.begin(), q.coset_of.end(), 0u);
    q.projection.resize(order);
    std::iota(q.projection.begin(), q.projection.end(), Elem{0});
    return q;
  }

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  q.coset_of.assign(order, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (q.coset_of[x] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members()) q.coset_of[G.mul(m, x)] = id;
  }
  const std::size_t ncosets = reps.size();
  if (ncosets > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::CapExceeded, "quotient has too many cosets to act on");
  }

  // Right translation on cosets: Nx -> Nxs.
  std::vector<Permutation> gens;
  std::vector<Elem> gen_elems;
  for (std::size_t s = 0; s < G.num_generators(); ++s) {
    std::vector<Point> images(ncosets);
    for (std::size_t c = 0; c < ncosets; ++c) {
      images[c] = static_cast<Point>(q.coset_of[G.mul(reps[c], G.generator(s))]);
    }
    gens.emplace_back(std::move(images));
  }
  q.quotient = FiniteGroup::generate(ncosets, std::move(gens), order);
  const FiniteGroup& Q = *q.quotient;

  q.projection.resize(order);
  q.projection[kIdentity] = kIdentity;
  for (Elem x = 1; x < order; ++x) {
    q.projection[x] = Q.mul(q.projection[G.bfs_parent(x)], Q.generator(G.bfs_generator(x)));
  }
  if (Q.order() * n.order() != order) {
    throw Error(ErrorCode::NotNormal, "coset count inconsistent with kernel order");
  }
  return q;
}

Subgroup commutator_subgroup_pair(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& G = h.group();
  std::vector<Elem> seeds;
  for (Elem a : h.generators()) {
    for (Elem b : k.generators()) seeds.push_back(G.commutator(a, b));
  }
  Subgroup ambient = join(h, k);
  return normal_closure(seeds, ambient);
}

std::optional<Elem> are_conjugate(const FiniteGroup& g, Elem x, Elem y) {
  if (g.element_order(x) != g.element_order(y)) return std::nullopt;
  for (Elem c = 0; c < g.order(); ++c) {
    if (g.conj(x, c) == y) return c;
  }
  return std::nullopt;
}

Subgroup centralizer_in(const Subgroup& ambient, std::span<const Elem> set) {
  const FiniteGroup& G = ambient.group();
  std::vector<Elem> members;
  for (Elem x : ambient.members()) {
    bool commutes = std::all_of(set.begin(), set.end(),
                                [&](Elem s) { return G.mul(x, s) == G.mul(s, x); });
    if (commutes) members.push_back(x);
  }
  return Subgroup::from_members(ambient.group_ptr(), std::move(members));
}

Subgroup centralizer(const GroupPtr& g, std::span<const Elem> set) {
  return centralizer_in(Subgroup::whole(g), set);
}

Subgroup center_of(const Subgroup& h) { return centralizer_in(h, h.generators()); }

Subgroup center(const GroupPtr& g) { return center_of(Subgroup::whole(g)); }

SubgroupAsGroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& G = h.group();
  std::vector<Permutation> gens;
  for (Elem x : h.generators()) gens.push_back(G.permutation(x));
  SubgroupAsGroup out;
  out.group = FiniteGroup::generate(G.degree(), std::move(gens), h.order());
  out.embedding.resize(out.group->order());
  for (Elem e = 0; e < out.group->order(); ++e) {
    out.embedding[e] = *G.find(out.group->images(e));
  }
  return out;
}

}  // namespace cplab
