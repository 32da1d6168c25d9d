#pragma once

#include <cstdint>
#include <vector>

#include "cplab/group.hpp"

namespace cplab {

enum class SeriesKind { Derived, LowerCentral, Jlz, FittingChain };

// Descending series with strict terms only. The last term is where the
// series stabilized (trivial, or a perfect / non-nilpotent residue).
struct SubgroupSeries {
  SeriesKind kind;
  std::vector<Subgroup> terms;

  std::size_t length() const { return terms.size() - 1; }
  bool reaches_trivial() const { return terms.back().is_trivial(); }
};

SubgroupSeries derived_series(const Subgroup& h);
SubgroupSeries lower_central_series(const Subgroup& h);

bool is_soluble(const Subgroup& h);
// Throws NotSoluble.
std::size_t derived_length(const Subgroup& h);
bool is_nilpotent(const Subgroup& h);
// Class of the trivial group is 0. Throws NotNilpotent.
std::size_t nilpotency_class(const Subgroup& h);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime_power_of(std::uint64_t n, std::uint64_t p);
// The p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// Full Sylow p-subgroup of h, grown one p-step at a time inside
// normalizers. Trivial when p does not divide |h|.
Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p);
Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& s);
// Intersection of all ambient-conjugates of s.
Subgroup normal_core(const Subgroup& s, const Subgroup& ambient);
// O_p(h)
Subgroup largest_normal_p_subgroup(const Subgroup& h, std::uint64_t p);
Subgroup fitting_subgroup(const Subgroup& h);
// Length of the chain G > G/F(G) > ... down to the trivial group. Throws
// NotSoluble.
std::size_t fitting_height(const GroupPtr& g);
std::size_t fitting_height(const Subgroup& h);

Subgroup power_subgroup(const Subgroup& h, std::uint64_t m);
// Throws NotAPGroup unless |h| is a power of p.
bool is_powerful(const Subgroup& h, std::uint64_t p);

}  // namespace cplab
