#include "hugheslab/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hugheslab/errors.hpp"
#include "hugheslab/numeric.hpp"

namespace hugheslab {

PrimeSet::PrimeSet(std::vector<unsigned> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (unsigned p : primes_) {
    if (!is_prime(p)) {
      throw InvalidArgumentError("PrimeSet entry " + std::to_string(p) + " is not prime");
    }
  }
}

PrimeSet PrimeSet::of(std::initializer_list<unsigned> primes) {
  return PrimeSet(std::vector<unsigned>(primes));
}

bool PrimeSet::contains(unsigned p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  std::vector<unsigned> out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(),
                        other.primes_.end(), std::back_inserter(out));
  return PrimeSet(std::move(out));
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  std::vector<unsigned> out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(),
                 other.primes_.end(), std::back_inserter(out));
  return PrimeSet(std::move(out));
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(),
                       primes_.end());
}

std::vector<PrimeSet> PrimeSet::subsets(std::size_t max_size) const {
  std::vector<PrimeSet> out;
  const std::size_t n = primes_.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<unsigned> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) chosen.push_back(primes_[i]);
    }
    if (chosen.size() <= max_size) out.emplace_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end(), [](const PrimeSet& a, const PrimeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.values() < b.values();
  });
  return out;
}

std::string PrimeSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out << ',';
    out << primes_[i];
  }
  out << '}';
  return out.str();
}

PrimeSet group_primes(const PermGroup& G) {
  std::vector<unsigned> primes;
  for (std::uint64_t p : prime_divisors(G.order())) {
    primes.push_back(static_cast<unsigned>(p));
  }
  return PrimeSet(std::move(primes));
}

namespace {

bool is_normal_in(const PermGroup& parent, const PermGroup& sub) {
  for (const Perm& g : parent.generators()) {
    for (const Perm& s : sub.generators()) {
      if (!sub.contains(conjugate(g, s))) return false;
    }
  }
  return true;
}

SubgroupHandle make_handle(const PermGroup& parent, PermGroup sub) {
  SubgroupHandle handle{parent, std::move(sub), 1, false};
  const std::uint64_t parent_order = parent.order();
  const std::uint64_t sub_order = handle.sub.order();
  if (parent_order % sub_order != 0) {
    throw Error("subgroup order does not divide parent order (internal)");
  }
  handle.index = parent_order / sub_order;
  handle.normal = is_normal_in(parent, handle.sub);
  return handle;
}

std::vector<Perm> dedupe_nontrivial(std::size_t degree, const std::vector<Perm>& seeds) {
  std::vector<Perm> out;
  for (const Perm& s : seeds) {
    if (s.degree() != degree) throw InvalidArgumentError("seed degree mismatch");
    if (s.is_identity()) continue;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

} // namespace

SubgroupHandle generated_subgroup(const PermGroup& parent, const std::vector<Perm>& seeds) {
  for (const Perm& s : seeds) {
    if (!parent.contains(s)) {
      throw InvalidArgumentError("generated_subgroup: seed outside parent group");
    }
  }
  std::vector<Perm> gens = dedupe_nontrivial(parent.degree(), seeds);
  return make_handle(parent, PermGroup(parent.degree(), std::move(gens)));
}

SubgroupHandle trivial_subgroup(const PermGroup& parent) {
  return make_handle(parent, PermGroup::trivial(parent.degree()));
}

SubgroupHandle full_subgroup(const PermGroup& parent) {
  return make_handle(parent, parent);
}

SubgroupHandle normal_closure(const PermGroup& G, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens = dedupe_nontrivial(G.degree(), seeds);
  for (const Perm& s : gens) {
    if (!G.contains(s)) throw InvalidArgumentError("normal_closure: seed outside group");
  }
  StabilizerChain chain(G.degree());
  for (const Perm& s : gens) chain.extend(s);
  std::vector<Perm> work = gens;
  while (!work.empty()) {
    Perm t = std::move(work.back());
    work.pop_back();
    for (const Perm& g : G.generators()) {
      Perm c = conjugate(g, t);
      if (!chain.contains(c)) {
        chain.extend(c);
        gens.push_back(c);
        work.push_back(std::move(c));
      }
    }
  }
  return make_handle(G, PermGroup(G.degree(), std::move(gens)));
}

PermGroup derived_subgroup(const PermGroup& H) {
  std::vector<Perm> comms;
  const auto& gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      comms.push_back(commutator(gens[i], gens[j]));
    }
  }
  return normal_closure(H, comms).sub;
}

SubgroupHandle center(const PermGroup& G) {
  std::vector<Perm> central;
  for (const Perm& z : G.elements()) {
    bool commutes = true;
    for (const Perm& g : G.generators()) {
      if (compose(z, g) != compose(g, z)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(z);
  }
  return generated_subgroup(G, central);
}

DerivedSeries derived_series(const PermGroup& G) {
  DerivedSeries series;
  series.terms.push_back(full_subgroup(G));
  while (true) {
    const PermGroup& current = series.terms.back().sub;
    if (current.order() == 1) break;
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) break; // stabilized above 1
    series.terms.push_back(make_handle(G, std::move(next)));
  }
  series.solvable = series.terms.back().sub.order() == 1;
  series.derived_length = series.solvable ? series.terms.size() - 1 : 0;
  return series;
}

bool is_solvable(const PermGroup& G) { return derived_series(G).solvable; }

LowerCentralSeries lower_central_series(const PermGroup& G) {
  LowerCentralSeries series;
  series.terms.push_back(full_subgroup(G));
  while (true) {
    const PermGroup& current = series.terms.back().sub;
    if (current.order() == 1) break;
    std::vector<Perm> comms;
    for (const Perm& x : current.generators()) {
      for (const Perm& g : G.generators()) {
        comms.push_back(commutator(x, g));
      }
    }
    SubgroupHandle next = normal_closure(G, comms);
    if (next.sub.order() == current.order()) {
      // Stabilized above the trivial group: not nilpotent.
      return series;
    }
    series.terms.push_back(std::move(next));
  }
  series.nilpotence_class = static_cast<unsigned>(series.terms.size() - 1);
  return series;
}

ExponentInfo exponent_and_primes(const PermGroup& G) {
  ExponentInfo info;
  for (const Perm& g : G.elements()) {
    info.exponent = std::lcm(info.exponent, g.order());
  }
  info.primes = group_primes(G);
  return info;
}

PermGroup quotient(const PermGroup& G, const SubgroupHandle& N) {
  if (!N.normal) throw InvalidArgumentError("quotient: subgroup is not normal");
  if (!N.sub.is_subgroup_of(G)) {
    throw InvalidArgumentError("quotient: subgroup does not sit inside the group");
  }
  const std::uint64_t index = G.order() / N.sub.order();
  if (index > default_enumeration_cap()) {
    throw CapExceededError("quotient: index exceeds the enumeration cap");
  }

  const auto& all = G.elements();
  const auto& kernel = N.sub.elements();

  // Right cosets Ng; iterating elements in canonical order makes each
  // coset's representative its lexicographically minimal member.
  std::unordered_map<Perm, unsigned, PermHash> coset_of;
  coset_of.reserve(all.size());
  std::vector<Perm> reps;
  for (const Perm& g : all) {
    if (coset_of.contains(g)) continue;
    const unsigned id = static_cast<unsigned>(reps.size());
    reps.push_back(g);
    for (const Perm& n : kernel) {
      coset_of.emplace(compose(n, g), id);
    }
  }
  if (reps.size() != index) throw Error("quotient: coset count mismatch (internal)");

  std::vector<Perm> images;
  images.reserve(G.generators().size());
  for (const Perm& g : G.generators()) {
    std::vector<unsigned> image(reps.size());
    for (unsigned c = 0; c < reps.size(); ++c) {
      image[c] = coset_of.at(compose(reps[c], g));
    }
    images.emplace_back(std::move(image));
  }
  return PermGroup(reps.size(), std::move(images));
}

SubgroupHandle intersect_subgroups(const PermGroup& parent, const PermGroup& A,
                                   const PermGroup& B) {
  std::vector<Perm> common;
  const auto& a = A.elements();
  const auto& b = B.elements();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return generated_subgroup(parent, common);
}

} // namespace hugheslab
