#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hugheslab/group_algebra.hpp"

namespace hugheslab {

enum class HughesKind { Prime, Modulus, Primes };

/// H_p(G) = <x : x^p != 1>, H_n(G) = <x : x^n != 1>, or
/// H_pi(G) = <x : x^p != 1 for all p in pi>, together with how many
/// elements of G qualified as generators.
struct HughesResult {
  HughesKind kind = HughesKind::Prime;
  unsigned prime = 0;              // Prime kind
  std::uint64_t modulus = 0;       // Modulus kind
  PrimeSet requested_primes;       // Primes kind, as passed in
  PrimeSet effective_primes;       // after intersecting with pi(G)
  bool normalized = false;         // whether the intersection was applied
  SubgroupHandle subgroup;
  std::size_t generator_count = 0;
};

HughesResult hughes_p(const PermGroup& G, unsigned p);
HughesResult hughes_n(const PermGroup& G, std::uint64_t n);
HughesResult hughes_pi(const PermGroup& G, const PrimeSet& pi,
                       bool normalize = true);

/// Intersection of all H_p(G) over p in pi(G); requires |pi(G)| >= 2.
SubgroupHandle hughes_intersection(const PermGroup& G);

enum class PiCase { Trivial, Full, EqualsSomeHp, Exceptional };
const char* to_string(PiCase c);

struct PiClassification {
  PiCase kind = PiCase::Trivial;
  unsigned matching_prime = 0; // EqualsSomeHp only
  std::uint64_t hpi_order = 1;
  std::vector<std::pair<unsigned, std::uint64_t>> hp_orders; // per p in pi
  HughesResult hpi;
};

/// Decide which of the four cases holds for H_pi(G) against the H_p(G).
/// Exceptional is reported only after re-verifying 1 < |H_pi| < |H_p| for
/// every p with chain orders.
PiClassification classify_pi(const PermGroup& G, const PrimeSet& pi);

/// The ALL token: classify with pi = pi(G).
PiClassification classify_pi_all(const PermGroup& G);

} // namespace hugheslab
