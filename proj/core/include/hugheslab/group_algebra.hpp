#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hugheslab/perm_group.hpp"

namespace hugheslab {

/// A finite set of primes with canonical sorted encoding.
class PrimeSet {
public:
  PrimeSet() = default;
  /// Sorts, deduplicates, and verifies primality of every entry.
  explicit PrimeSet(std::vector<unsigned> primes);
  static PrimeSet of(std::initializer_list<unsigned> primes);

  const std::vector<unsigned>& values() const { return primes_; }
  bool contains(unsigned p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  PrimeSet intersect(const PrimeSet& other) const;
  PrimeSet unite(const PrimeSet& other) const;
  bool subset_of(const PrimeSet& other) const;

  /// All nonempty subsets of size <= max_size, in a deterministic order.
  std::vector<PrimeSet> subsets(std::size_t max_size) const;

  std::string to_string() const; // "{2,3}"
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
  std::vector<unsigned> primes_;
};

/// pi(G): the prime divisors of |G|.
PrimeSet group_primes(const PermGroup& G);

/// A subgroup known to sit inside a parent, with index and normality.
struct SubgroupHandle {
  PermGroup parent;
  PermGroup sub;
  std::uint64_t index = 1;
  bool normal = false;
};

/// Smallest subgroup of `parent` containing `seeds`; empty seeds give the
/// trivial subgroup. Throws InvalidArgumentError if a seed lies outside
/// the parent.
SubgroupHandle generated_subgroup(const PermGroup& parent,
                                  const std::vector<Perm>& seeds);

SubgroupHandle trivial_subgroup(const PermGroup& parent);
SubgroupHandle full_subgroup(const PermGroup& parent);

/// Smallest normal subgroup of G containing `seeds`.
SubgroupHandle normal_closure(const PermGroup& G, const std::vector<Perm>& seeds);

/// [H, H] as a subgroup of H (normal closure in H of the generator
/// commutators).
PermGroup derived_subgroup(const PermGroup& H);

/// {z : zg = gz for all g}; always normal.
SubgroupHandle center(const PermGroup& G);

struct DerivedSeries {
  std::vector<SubgroupHandle> terms; // G = terms[0] > terms[1] > ...
  bool solvable = false;             // last term trivial
  std::size_t derived_length = 0;    // terms.size() - 1 when solvable
};
DerivedSeries derived_series(const PermGroup& G);
bool is_solvable(const PermGroup& G);

struct LowerCentralSeries {
  std::vector<SubgroupHandle> terms;           // gamma_1 = G, gamma_2, ...
  std::optional<unsigned> nilpotence_class;    // nullopt: not nilpotent
};
LowerCentralSeries lower_central_series(const PermGroup& G);

struct ExponentInfo {
  std::uint64_t exponent = 1; // lcm of element orders
  PrimeSet primes;            // pi(G)
};
ExponentInfo exponent_and_primes(const PermGroup& G);

/// Faithful permutation image of G/N acting on the right cosets of N
/// (representatives are the lexicographically minimal coset members).
/// Throws InvalidArgumentError unless N is normal.
PermGroup quotient(const PermGroup& G, const SubgroupHandle& N);

/// Element-set intersection of two subgroups of a common parent.
SubgroupHandle intersect_subgroups(const PermGroup& parent,
                                   const PermGroup& A, const PermGroup& B);

} // namespace hugheslab
