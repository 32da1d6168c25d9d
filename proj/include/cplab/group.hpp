#pragma once

// Permutation-based finite group engine. Groups are fully enumerated in
// breadth-first order from their generators; element 0 is always the
// identity. Products are resolved through a base of the permutation domain,
// so a multiplication costs O(base length) rather than O(degree).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace cplab {

using Point = std::uint16_t;
using Elem = std::uint32_t;

// Signed, 1-based generator indices: k means generator k-1, -k its inverse.
using Word = std::vector<int>;

inline constexpr Elem kIdentity = 0;
inline constexpr std::size_t kDefaultCap = 200000;

class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  // Composition in right-action order: apply *this first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
  struct Token {};

 public:
  FiniteGroup(Token, std::size_t degree, std::vector<Permutation> generators);
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  // Breadth-first closure of the generators. Element order is BFS layer
  // order, generator index order within a layer.
  static GroupPtr generate(std::size_t degree,
                           std::vector<Permutation> generators,
                           std::size_t cap = kDefaultCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  Elem generator(std::size_t i) const { return generator_elems_[i]; }

  std::span<const Point> images(Elem x) const {
    return {points_.data() + std::size_t{x} * degree_, degree_};
  }
  Permutation permutation(Elem x) const;
  std::optional<Elem> find(std::span<const Point> images) const;
  std::optional<Elem> find(const Permutation& perm) const {
    return find(std::span<const Point>(perm.images()));
  }

  // x*y acts as x first, then y.
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const { return inverse_[x]; }
  Elem pow(Elem x, std::int64_t k) const;
  // c^-1 x c
  Elem conj(Elem x, Elem c) const { return mul(mul(inv(c), x), c); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  // Factorization of x found during enumeration (positive letters only).
  Word word(Elem x) const;
  // Throws InvalidWord for letters outside the generator range.
  Elem evaluate(std::span<const int> word) const;

  Elem bfs_parent(Elem x) const { return parent_[x]; }
  std::size_t bfs_generator(Elem x) const { return parent_gen_[x]; }

  std::uint64_t element_order(Elem x) const { return orders_[x]; }
  std::uint64_t exponent() const { return exponent_; }

  std::span<const Point> base() const { return base_; }

  // Conjugacy class id per element (ids in order of first appearance).
  const std::vector<std::uint32_t>& conjugacy_class_ids() const;

 private:
  template <class ImageAt>
  std::optional<Elem> lookup(ImageAt&& image_at) const;
  void rebuild_index();
  void insert_index(Elem e);
  std::uint64_t hash_base_images(Elem e) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elems_;
  std::size_t order_ = 0;
  std::vector<Point> points_;  // order_ x degree_ image table
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<Elem> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;

  std::vector<Point> base_;
  std::vector<Elem> slots_;
  std::size_t slot_mask_ = 0;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::uint32_t> class_ids_;
};

// Sorted member set plus a generating set, tied to its parent group.
class Subgroup {
 public:
  Subgroup(GroupPtr group, std::vector<Elem> sorted_members,
           std::vector<Elem> generators);

  static Subgroup trivial(GroupPtr group);
  static Subgroup whole(GroupPtr group);
  // Throws PreconditionViolated if members is not closed under products.
  static Subgroup from_members(GroupPtr group, std::vector<Elem> members);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }
  bool contains(Elem x) const { return mask_[x]; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }

  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  GroupPtr group_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
  std::vector<Elem> generators_;
};

// Incremental subgroup closure. Keeps a short generating list: an element is
// only recorded as a generator when it enlarges the current subgroup.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(GroupPtr group);
  explicit SubgroupBuilder(const Subgroup& start);

  bool add(Elem x);
  template <class Range>
  void add_all(const Range& xs) {
    for (Elem x : xs) add(x);
  }
  bool contains(Elem x) const { return mask_[x]; }
  std::size_t order() const { return members_.size(); }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<Elem>& members_unsorted() const { return members_; }
  Subgroup build() const;

 private:
  GroupPtr group_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
  std::vector<Elem> generators_;
};

struct QuotientGroup {
  GroupPtr parent;
  Subgroup kernel;
  // Acts on coset indices; generator i is the image of parent generator i.
  GroupPtr quotient;
  std::vector<std::uint32_t> coset_of;
  std::vector<Elem> projection;

  Elem project(Elem x) const { return projection[x]; }
};

std::uint64_t element_order(const FiniteGroup& g, Elem x);
std::uint64_t group_exponent(const FiniteGroup& g);
std::uint64_t subgroup_exponent(const Subgroup& h);

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> seeds);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

// True iff c^-1 n c lies in n for every generator n of `normal` and c of
// `ambient`.
bool is_normal_in(const Subgroup& normal, const Subgroup& ambient);

// Smallest subgroup containing seeds and closed under conjugation by the
// ambient generators.
Subgroup normal_closure(std::span<const Elem> seeds, const Subgroup& ambient);

// Throws NotNormal when n is not normal in the parent group.
QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

// [H,K]: generated by all h^-1 k^-1 h k. Computed as the normal closure in
// <H,K> of the commutators of generators.
Subgroup commutator_subgroup_pair(const Subgroup& h, const Subgroup& k);

// Least c (by index) with c^-1 x c = y, if any. O(|G|).
std::optional<Elem> are_conjugate(const FiniteGroup& g, Elem x, Elem y);

Subgroup centralizer(const GroupPtr& g, std::span<const Elem> set);
Subgroup center(const GroupPtr& g);
Subgroup centralizer_in(const Subgroup& ambient, std::span<const Elem> set);
Subgroup center_of(const Subgroup& h);

// The subgroup H as a standalone permutation group generated by the
// permutations of H's generators, plus the index embedding into the parent.
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<Elem> embedding;  // new index -> parent index
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h);

}  // namespace cplab
