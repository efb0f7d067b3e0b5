#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hugheslab/hughes.hpp"

namespace hugheslab {

/// Certificate that G is a Frobenius group with kernel F: F is a proper
/// nontrivial normal Hall subgroup and the centralizer of every nonidentity
/// element of F lies inside F. No complement subgroup is constructed; its
/// order |G|/|F| suffices.
struct FrobeniusCertificate {
  SubgroupHandle kernel;
  std::uint64_t complement_order = 1;
  bool complement_is_prime = false;
  std::optional<unsigned> kernel_prime; // q when |F| is a q-power
  bool centralizer_condition_checked = false;
};

/// All normal subgroups of G (including 1 and G), computed as joins of
/// subgroups generated by conjugacy classes, sorted by order.
std::vector<SubgroupHandle> normal_subgroups(const PermGroup& G);

std::optional<FrobeniusCertificate> frobenius_decomposition(const PermGroup& G);

/// A candidate automorphism of `domain`, given by one image per generator.
/// Validated by multiplication-table transport over the full element list.
struct AutomorphismSpec {
  PermGroup domain;
  std::vector<Perm> generator_images;
};

/// The map x -> t x t^-1 restricted to K's generators.
AutomorphismSpec conjugation_automorphism(const Perm& t, const PermGroup& K);

bool is_automorphism(const AutomorphismSpec& spec);

/// True iff the map fixes only the identity. Throws InvalidArgumentError
/// when the spec does not define an automorphism.
bool is_fixed_point_free(const AutomorphismSpec& spec);

/// Order of the automorphism as a permutation of the element list.
std::uint64_t automorphism_order(const AutomorphismSpec& spec);

struct Omega1Result {
  SubgroupHandle subgroup;       // <g : g^p = 1>
  bool is_exact_set = false;     // subgroup members == generating set
};
/// Requires G to be a p-group.
Omega1Result omega1(const PermGroup& G, unsigned p);

/// Agemo: <k^p : k in K>.
SubgroupHandle agemo1(const PermGroup& K, unsigned p);

struct RegularityResult {
  bool regular = true;
  std::optional<std::pair<Perm, Perm>> witness; // first failing pair
};

/// Hall regularity test for a p-group: for every ordered pair (x, y),
/// d = (x^p y^p)^-1 (x y)^p must lie in <h^p : h in <x,y>'>. The witness is
/// the lexicographically first failing pair in canonical element order.
RegularityResult is_regular_p_group(const PermGroup& G, unsigned p);

/// When |G| = p^e returns p, otherwise nullopt.
std::optional<unsigned> p_group_prime(const PermGroup& G);

/// Both sides of the classification equivalence for a solvable G with
/// pi = pi(G): the left side is "1 < H_pi(G) < H_p(G) for all p" (i.e. the
/// Exceptional case), the right side is "G is Frobenius with a nonabelian
/// q-group kernel F, 1 < H_q(F) < F, and a prime-order complement".
struct MainTheoremVerdict {
  bool lhs = false;
  bool rhs = false;
  bool equivalence_holds = false;
  bool exceptional = false;
  PiClassification classification;
  std::optional<FrobeniusCertificate> certificate;
  std::optional<unsigned> kernel_hughes_prime;     // q
  std::uint64_t kernel_hughes_order = 0;           // |H_q(F)|
  bool hpi_equals_kernel_hughes = false;           // H_pi(G) = H_q(F)
  bool center_strictly_below_hpi = false;          // Z(F) < H_pi(G)
};

/// Throws InvalidArgumentError when G is not solvable.
MainTheoremVerdict main_theorem_check(const PermGroup& G);

} // namespace hugheslab
