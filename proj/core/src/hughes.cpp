#include "hugheslab/hughes.hpp"

#include <algorithm>

#include "hugheslab/errors.hpp"
#include "hugheslab/numeric.hpp"

namespace hugheslab {

namespace {

/// Elements of G whose order satisfies `qualifies`; the generating set of
/// every Hughes-style subgroup. Collected by full enumeration (cap-guarded).
template <typename Pred>
std::vector<Perm> qualifying_elements(const PermGroup& G, Pred qualifies) {
  std::vector<Perm> out;
  for (const Perm& g : G.elements()) {
    if (qualifies(g.order())) out.push_back(g);
  }
  return out;
}

} // namespace

const char* to_string(PiCase c) {
  switch (c) {
    case PiCase::Trivial: return "TRIVIAL";
    case PiCase::Full: return "FULL";
    case PiCase::EqualsSomeHp: return "EQUALS_SOME_HP";
    case PiCase::Exceptional: return "EXCEPTIONAL";
  }
  return "?";
}

HughesResult hughes_p(const PermGroup& G, unsigned p) {
  if (!is_prime(p)) throw InvalidArgumentError("hughes_p: p must be prime");
  HughesResult result;
  result.kind = HughesKind::Prime;
  result.prime = p;
  // x^p != 1  <=>  order(x) not in {1, p}.
  auto seeds = qualifying_elements(
      G, [p](std::uint64_t ord) { return ord != 1 && ord != p; });
  result.generator_count = seeds.size();
  result.subgroup = generated_subgroup(G, seeds);
  return result;
}

HughesResult hughes_n(const PermGroup& G, std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("hughes_n: n must be positive");
  HughesResult result;
  result.kind = HughesKind::Modulus;
  result.modulus = n;
  // x^n != 1  <=>  order(x) does not divide n.
  auto seeds = qualifying_elements(
      G, [n](std::uint64_t ord) { return n % ord != 0; });
  result.generator_count = seeds.size();
  result.subgroup = generated_subgroup(G, seeds);
  return result;
}

HughesResult hughes_pi(const PermGroup& G, const PrimeSet& pi, bool normalize) {
  HughesResult result;
  result.kind = HughesKind::Primes;
  result.requested_primes = pi;
  result.effective_primes = normalize ? pi.intersect(group_primes(G)) : pi;
  result.normalized = normalize;
  const PrimeSet& effective = result.effective_primes;
  // x^p != 1 for all p in pi  <=>  order(x) not in {1} union pi.
  auto seeds = qualifying_elements(G, [&effective](std::uint64_t ord) {
    if (ord == 1) return false;
    return !(ord <= 0xffffffffull && effective.contains(static_cast<unsigned>(ord)));
  });
  result.generator_count = seeds.size();
  result.subgroup = generated_subgroup(G, seeds);
  return result;
}

SubgroupHandle hughes_intersection(const PermGroup& G) {
  const PrimeSet primes = group_primes(G);
  if (primes.size() < 2) {
    throw InvalidArgumentError("hughes_intersection requires |pi(G)| >= 2");
  }
  // Element-set intersection of all H_p(G), p in pi(G).
  std::vector<Perm> common = hughes_p(G, primes.values().front()).subgroup.sub.elements();
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const auto& next = hughes_p(G, primes.values()[i]).subgroup.sub.elements();
    std::vector<Perm> merged;
    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                          std::back_inserter(merged));
    common = std::move(merged);
  }
  return generated_subgroup(G, common);
}

PiClassification classify_pi(const PermGroup& G, const PrimeSet& pi) {
  PiClassification cls;
  cls.hpi = hughes_pi(G, pi);
  cls.hpi_order = cls.hpi.subgroup.sub.order();
  for (unsigned p : cls.hpi.effective_primes.values()) {
    cls.hp_orders.emplace_back(p, hughes_p(G, p).subgroup.sub.order());
  }

  if (cls.hpi_order == 1) {
    cls.kind = PiCase::Trivial;
    return cls;
  }
  if (cls.hpi_order == G.order()) {
    cls.kind = PiCase::Full;
    return cls;
  }
  for (unsigned p : cls.hpi.effective_primes.values()) {
    HughesResult hp = hughes_p(G, p);
    if (hp.subgroup.sub.same_group_as(cls.hpi.subgroup.sub)) {
      cls.kind = PiCase::EqualsSomeHp;
      cls.matching_prime = p;
      return cls;
    }
  }
  // Exceptional only after re-verifying both strict inequalities with chain
  // orders.
  for (const auto& [p, hp_order] : cls.hp_orders) {
    (void)p;
    if (!(cls.hpi_order < hp_order)) {
      throw Error("classify_pi: H_pi neither equals nor sits strictly below some H_p");
    }
  }
  if (!(1 < cls.hpi_order)) throw Error("classify_pi: inconsistent trivial order");
  cls.kind = PiCase::Exceptional;
  return cls;
}

PiClassification classify_pi_all(const PermGroup& G) {
  return classify_pi(G, group_primes(G));
}

} // namespace hugheslab
