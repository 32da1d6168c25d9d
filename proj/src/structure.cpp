#include "cplab/structure.hpp"

#include <string>

#include "cplab/error.hpp"

namespace cplab {

namespace {

SubgroupSeries iterate_series(SeriesKind kind, const Subgroup& start,
                              const auto& next_term) {
  SubgroupSeries series{kind, {start}};
  while (true) {
    Subgroup next = next_term(series.terms.back());
    if (next == series.terms.back()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

}  // namespace

SubgroupSeries derived_series(const Subgroup& h) {
  return iterate_series(SeriesKind::Derived, h, [](const Subgroup& term) {
    return commutator_subgroup_pair(term, term);
  });
}

SubgroupSeries lower_central_series(const Subgroup& h) {
  return iterate_series(SeriesKind::LowerCentral, h, [&h](const Subgroup& term) {
    return commutator_subgroup_pair(term, h);
  });
}

bool is_soluble(const Subgroup& h) { return derived_series(h).reaches_trivial(); }

std::size_t derived_length(const Subgroup& h) {
  auto series = derived_series(h);
  if (!series.reaches_trivial()) {
    throw Error(ErrorCode::NotSoluble, "derived series stabilizes at a nontrivial term");
  }
  return series.length();
}

bool is_nilpotent(const Subgroup& h) { return lower_central_series(h).reaches_trivial(); }

std::size_t nilpotency_class(const Subgroup& h) {
  auto series = lower_central_series(h);
  if (!series.reaches_trivial()) {
    throw Error(ErrorCode::NotNilpotent, "lower central series does not reach 1");
  }
  return series.length();
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
  if (p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& s) {
  const FiniteGroup& G = ambient.group();
  std::vector<Elem> members;
  for (Elem x : ambient.members()) {
    bool normalizes = true;
    for (Elem g : s.generators()) {
      if (!s.contains(G.conj(g, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(x);
  }
  return Subgroup::from_members(ambient.group_ptr(), std::move(members));
}

Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p) {
  const FiniteGroup& G = h.group();
  const std::uint64_t target = p_part(h.order(), p);
  Subgroup sylow = Subgroup::trivial(h.group_ptr());
  while (sylow.order() < target) {
    // p divides |N(P) : P| while P is not yet Sylow, so some coset xP of the
    // normalizer quotient has order exactly p.
    Subgroup normalizer = normalizer_in(h, sylow);
    std::optional<Elem> step;
    for (Elem x : normalizer.members()) {
      if (sylow.contains(x)) continue;
      if (sylow.contains(G.pow(x, static_cast<std::int64_t>(p)))) {
        step = x;
        break;
      }
    }
    if (!step) {
      throw Error(ErrorCode::NotFound, "no p-element in the normalizer quotient");
    }
    SubgroupBuilder builder(sylow);
    builder.add(*step);
    sylow = builder.build();
  }
  return sylow;
}

Subgroup normal_core(const Subgroup& s, const Subgroup& ambient) {
  // x lies in the core iff its whole ambient-conjugacy class lies in s; the
  // class is the orbit under conjugation by the ambient generators.
  const FiniteGroup& G = s.group();
  std::vector<bool> keep(G.order(), false);
  for (Elem x : s.members()) keep[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x : s.members()) {
      if (!keep[x]) continue;
      for (Elem c : ambient.generators()) {
        if (!keep[G.conj(x, c)]) {
          keep[x] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Elem> members;
  for (Elem x : s.members()) {
    if (keep[x]) members.push_back(x);
  }
  return Subgroup::from_members(s.group_ptr(), std::move(members));
}

Subgroup largest_normal_p_subgroup(const Subgroup& h, std::uint64_t p) {
  return normal_core(sylow_subgroup(h, p), h);
}

Subgroup fitting_subgroup(const Subgroup& h) {
  SubgroupBuilder builder(h.group_ptr());
  for (std::uint64_t p : prime_divisors(h.order())) {
    builder.add_all(largest_normal_p_subgroup(h, p).generators());
  }
  return builder.build();
}

std::size_t fitting_height(const GroupPtr& g) {
  if (!is_soluble(Subgroup::whole(g))) {
    throw Error(ErrorCode::NotSoluble, "Fitting height needs a soluble group");
  }
  std::size_t height = 0;
  GroupPtr current = g;
  while (current->order() > 1) {
    Subgroup fitting = fitting_subgroup(Subgroup::whole(current));
    current = quotient_group(current, fitting).quotient;
    ++height;
  }
  return height;
}

std::size_t fitting_height(const Subgroup& h) {
  return fitting_height(subgroup_as_group(h).group);
}

Subgroup power_subgroup(const Subgroup& h, std::uint64_t m) {
  const FiniteGroup& G = h.group();
  SubgroupBuilder builder(h.group_ptr());
  for (Elem x : h.members()) builder.add(G.pow(x, static_cast<std::int64_t>(m)));
  return builder.build();
}

bool is_powerful(const Subgroup& h, std::uint64_t p) {
  if (!is_prime_power_of(h.order(), p)) {
    throw Error(ErrorCode::NotAPGroup,
                "order " + std::to_string(h.order()) + " is not a power of " +
                    std::to_string(p));
  }
  Subgroup powers = power_subgroup(h, p == 2 ? 4 : p);
  return commutator_subgroup_pair(h, h).is_subset_of(powers);
}

}  // namespace cplab
