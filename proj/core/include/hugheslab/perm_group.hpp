#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hugheslab/perm.hpp"
#include "hugheslab/stabilizer_chain.hpp"

namespace hugheslab {

/// Process-wide default cap for full element enumeration (default 200000).
/// Overridable via set_default_enumeration_cap (the CLI wires --cap and the
/// HUGHESLAB_CAP environment variable to this).
std::size_t default_enumeration_cap();
void set_default_enumeration_cap(std::size_t cap);

/// A permutation group given by generators, with a lazily built stabilizer
/// chain (exact order, membership) and a lazily cached full element list.
///
/// Immutable after construction; copies share the underlying state, and the
/// lazy members are built under a lock, so instances can be shared across
/// threads read-only.
class PermGroup {
public:
  /// Generators must share `degree`. An empty list yields the trivial group.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  Perm identity() const { return Perm(degree()); }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  /// True when every generator of this group lies in `other`.
  bool is_subgroup_of(const PermGroup& other) const;
  /// Mutual generator membership (the cheap subgroup-equality test).
  bool same_group_as(const PermGroup& other) const;

  /// Complete duplicate-free element list, sorted lexicographically on
  /// image arrays. Computed by breadth-first closure over generator
  /// multiplication from the identity — deliberately independent of the
  /// stabilizer chain, so the two routes can be cross-checked.
  ///
  /// `cap` of 0 means the process default. Throws CapExceededError instead
  /// of truncating.
  const std::vector<Perm>& elements(std::size_t cap = 0) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

} // namespace hugheslab
