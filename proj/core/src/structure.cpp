#include "hugheslab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hugheslab/errors.hpp"
#include "hugheslab/numeric.hpp"

namespace hugheslab {

namespace {

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& G) {
  const auto& elems = G.elements();
  std::unordered_set<Perm, PermHash> visited;
  std::vector<std::vector<Perm>> classes;
  for (const Perm& e : elems) {
    if (visited.contains(e)) continue;
    std::vector<Perm> orbit{e};
    visited.insert(e);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm& g : G.generators()) {
        Perm c = conjugate(g, orbit[i]);
        if (visited.insert(c).second) orbit.push_back(std::move(c));
      }
    }
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.same_group_as(b);
}

} // namespace

std::vector<SubgroupHandle> normal_subgroups(const PermGroup& G) {
  // Atoms: subgroups generated by single conjugacy classes (each is normal,
  // the class being a conjugation-closed generating set). Every normal
  // subgroup is a join of atoms, so close the atom set under pairwise joins.
  std::vector<PermGroup> found;
  found.push_back(PermGroup::trivial(G.degree()));
  for (const auto& cls : conjugacy_classes(G)) {
    PermGroup atom = generated_subgroup(G, cls).sub;
    if (std::none_of(found.begin(), found.end(),
                     [&](const PermGroup& s) { return same_subgroup(s, atom); })) {
      found.push_back(std::move(atom));
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Perm> gens = found[i].generators();
      const auto& other = found[j].generators();
      gens.insert(gens.end(), other.begin(), other.end());
      PermGroup join = generated_subgroup(G, gens).sub;
      if (std::none_of(found.begin(), found.end(),
                       [&](const PermGroup& s) { return same_subgroup(s, join); })) {
        found.push_back(std::move(join));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  std::vector<SubgroupHandle> handles;
  handles.reserve(found.size());
  for (PermGroup& sub : found) {
    handles.push_back(generated_subgroup(G, sub.generators()));
  }
  return handles;
}

std::optional<FrobeniusCertificate> frobenius_decomposition(const PermGroup& G) {
  const std::uint64_t order = G.order();
  std::optional<FrobeniusCertificate> best;
  for (SubgroupHandle& N : normal_subgroups(G)) {
    const std::uint64_t n_order = N.sub.order();
    if (n_order <= 1 || n_order >= order) continue;
    if (std::gcd(n_order, order / n_order) != 1) continue;

    // Centralizer condition: C_G(x) <= N for every nonidentity x in N.
    bool centralizers_inside = true;
    for (const Perm& x : N.sub.elements()) {
      if (x.is_identity()) continue;
      for (const Perm& g : G.elements()) {
        if (compose(g, x) == compose(x, g) && !N.sub.contains(g)) {
          centralizers_inside = false;
          break;
        }
      }
      if (!centralizers_inside) break;
    }
    if (!centralizers_inside) continue;

    if (!best || best->kernel.sub.order() < n_order) {
      FrobeniusCertificate cert;
      cert.complement_order = order / n_order;
      cert.complement_is_prime = is_prime(cert.complement_order);
      auto factors = factorize(n_order);
      if (factors.size() == 1) cert.kernel_prime = static_cast<unsigned>(factors[0].first);
      cert.centralizer_condition_checked = true;
      cert.kernel = std::move(N);
      best = std::move(cert);
    }
  }
  return best;
}

AutomorphismSpec conjugation_automorphism(const Perm& t, const PermGroup& K) {
  std::vector<Perm> images;
  images.reserve(K.generators().size());
  for (const Perm& k : K.generators()) images.push_back(conjugate(t, k));
  return AutomorphismSpec{K, std::move(images)};
}

namespace {

/// Multiplication-table transport: extend the generator map along the Cayley
/// graph and check consistency on every (element, generator) product. The
/// checks force the extension to be a homomorphism; bijectivity then makes
/// it an automorphism.
std::optional<std::unordered_map<Perm, Perm, PermHash>> transport_table(
    const AutomorphismSpec& spec) {
  const PermGroup& G = spec.domain;
  const auto& gens = G.generators();
  if (spec.generator_images.size() != gens.size()) return std::nullopt;
  for (const Perm& image : spec.generator_images) {
    if (image.degree() != G.degree() || !G.contains(image)) return std::nullopt;
  }

  std::unordered_map<Perm, Perm, PermHash> table;
  const auto& elems = G.elements();
  table.reserve(elems.size());
  Perm identity(G.degree());
  table.emplace(identity, identity);
  std::vector<Perm> queue{identity};
  while (!queue.empty()) {
    Perm x = std::move(queue.back());
    queue.pop_back();
    const Perm fx = table.at(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm y = compose(x, gens[i]);
      Perm fy = compose(fx, spec.generator_images[i]);
      auto it = table.find(y);
      if (it == table.end()) {
        table.emplace(y, std::move(fy));
        queue.push_back(std::move(y));
      } else if (it->second != fy) {
        return std::nullopt; // transport inconsistency: not a homomorphism
      }
    }
  }
  if (table.size() != elems.size()) return std::nullopt;

  std::unordered_set<Perm, PermHash> values;
  values.reserve(table.size());
  for (const auto& [x, fx] : table) {
    (void)x;
    values.insert(fx);
  }
  if (values.size() != table.size()) return std::nullopt; // not injective
  return table;
}

} // namespace

bool is_automorphism(const AutomorphismSpec& spec) {
  return transport_table(spec).has_value();
}

bool is_fixed_point_free(const AutomorphismSpec& spec) {
  auto table = transport_table(spec);
  if (!table) throw InvalidArgumentError("spec does not define an automorphism");
  for (const auto& [x, fx] : *table) {
    if (!x.is_identity() && x == fx) return false;
  }
  return true;
}

std::uint64_t automorphism_order(const AutomorphismSpec& spec) {
  auto table = transport_table(spec);
  if (!table) throw InvalidArgumentError("spec does not define an automorphism");
  // View the automorphism as a permutation of the canonical element list.
  const auto& elems = spec.domain.elements();
  std::unordered_map<Perm, unsigned, PermHash> index;
  index.reserve(elems.size());
  for (unsigned i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<unsigned> images(elems.size());
  for (unsigned i = 0; i < elems.size(); ++i) {
    images[i] = index.at(table->at(elems[i]));
  }
  return Perm(std::move(images)).order();
}

std::optional<unsigned> p_group_prime(const PermGroup& G) {
  auto factors = factorize(G.order());
  if (factors.size() != 1) return std::nullopt;
  return static_cast<unsigned>(factors[0].first);
}

Omega1Result omega1(const PermGroup& G, unsigned p) {
  auto prime = p_group_prime(G);
  if (!prime || *prime != p) {
    throw InvalidArgumentError("omega1: group is not a p-group for the given p");
  }
  std::vector<Perm> torsion;
  for (const Perm& g : G.elements()) {
    if (g.power(p).is_identity()) torsion.push_back(g);
  }
  Omega1Result result;
  result.subgroup = generated_subgroup(G, torsion);
  result.is_exact_set = result.subgroup.sub.order() == torsion.size();
  return result;
}

SubgroupHandle agemo1(const PermGroup& K, unsigned p) {
  std::vector<Perm> powers;
  for (const Perm& k : K.elements()) powers.push_back(k.power(p));
  return generated_subgroup(K, powers);
}

namespace {

/// d = (x^p y^p)^-1 (x y)^p must lie in <h^p : h in <x,y>'>. The derived
/// subgroup of <x,y> is the closure of [x,y] under conjugation by x and y.
bool pair_is_regular(const PermGroup& G, const Perm& x, const Perm& y, unsigned p,
                     const Perm& xp, const Perm& yp) {
  Perm d = compose(compose(xp, yp).inverse(), compose(x, y).power(p));
  if (d.is_identity()) return true;

  StabilizerChain derived(G.degree());
  std::vector<Perm> work;
  Perm c = commutator(x, y);
  if (!c.is_identity()) {
    derived.extend(c);
    work.push_back(std::move(c));
  }
  std::vector<Perm> derived_gens = work;
  while (!work.empty()) {
    Perm t = std::move(work.back());
    work.pop_back();
    for (const Perm* g : {&x, &y}) {
      Perm conj = conjugate(*g, t);
      if (!derived.contains(conj)) {
        derived.extend(conj);
        derived_gens.push_back(conj);
        work.push_back(std::move(conj));
      }
    }
  }

  PermGroup derived_group(G.degree(), derived_gens);
  StabilizerChain agemo(G.degree());
  for (const Perm& h : derived_group.elements()) agemo.extend(h.power(p));
  return agemo.contains(d);
}

} // namespace

RegularityResult is_regular_p_group(const PermGroup& G, unsigned p) {
  auto prime = p_group_prime(G);
  if (!prime || *prime != p) {
    throw InvalidArgumentError("is_regular_p_group: group is not a p-group for the given p");
  }
  const auto& elems = G.elements();
  std::vector<Perm> pth_powers;
  pth_powers.reserve(elems.size());
  for (const Perm& e : elems) pth_powers.push_back(e.power(p));

  RegularityResult result;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Perm& x = elems[i];
      const Perm& y = elems[j];
      if (compose(x, y) == compose(y, x)) continue; // d = identity
      if (!pair_is_regular(G, x, y, p, pth_powers[i], pth_powers[j])) {
        result.regular = false;
        result.witness = std::make_pair(x, y);
        return result;
      }
    }
  }
  return result;
}

MainTheoremVerdict main_theorem_check(const PermGroup& G) {
  if (!is_solvable(G)) {
    throw InvalidArgumentError("main_theorem_check requires a solvable group");
  }
  MainTheoremVerdict verdict;
  verdict.classification = classify_pi_all(G);
  verdict.lhs = verdict.classification.kind == PiCase::Exceptional;
  verdict.exceptional = verdict.lhs;

  verdict.certificate = frobenius_decomposition(G);
  if (verdict.certificate) {
    const FrobeniusCertificate& cert = *verdict.certificate;
    const PermGroup& F = cert.kernel.sub;
    if (cert.complement_is_prime && cert.kernel_prime && !F.is_abelian()) {
      const unsigned q = *cert.kernel_prime;
      HughesResult hq = hughes_p(F, q);
      verdict.kernel_hughes_prime = q;
      verdict.kernel_hughes_order = hq.subgroup.sub.order();
      verdict.rhs =
          verdict.kernel_hughes_order > 1 && verdict.kernel_hughes_order < F.order();
      if (verdict.lhs) {
        verdict.hpi_equals_kernel_hughes =
            hq.subgroup.sub.same_group_as(verdict.classification.hpi.subgroup.sub);
        SubgroupHandle zf = center(F);
        verdict.center_strictly_below_hpi =
            zf.sub.is_subgroup_of(verdict.classification.hpi.subgroup.sub) &&
            zf.sub.order() < verdict.classification.hpi.subgroup.sub.order();
      }
    }
  }
  verdict.equivalence_holds = verdict.lhs == verdict.rhs;
  return verdict;
}

} // namespace hugheslab
