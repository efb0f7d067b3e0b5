#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hugheslab/perm.hpp"

namespace hugheslab {

/// Deterministic Schreier-Sims stabilizer chain: exact order and membership
/// for the group generated by the permutations passed to extend().
///
/// Base points are the first non-fixed points in increasing order; no
/// randomization anywhere, so identical generator sequences produce
/// identical chains.
class StabilizerChain {
public:
  explicit StabilizerChain(std::size_t degree);

  std::size_t degree() const { return degree_; }

  /// Add g to the generated group. Returns true if the group grew.
  bool extend(const Perm& g);

  bool contains(const Perm& g) const;
  std::uint64_t order() const;

  std::vector<unsigned> base() const;

private:
  struct Level {
    unsigned base_point;
    std::vector<Perm> generators;
    std::vector<int> transversal_slot; // point -> index into transversal, -1 outside orbit
    std::vector<Perm> transversal;     // u with u(base_point) = orbit point
    std::vector<unsigned> orbit;       // discovery order
  };

  // Sift h through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels_.size() when all transversals applied).
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t from) const;

  void add_strong_generator(std::size_t level, const Perm& h);
  void rebuild_orbit(Level& level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace hugheslab
