#include "hugheslab/stabilizer_chain.hpp"

#include "hugheslab/errors.hpp"

namespace hugheslab {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

std::pair<Perm, std::size_t> StabilizerChain::sift(Perm h, std::size_t from) const {
  for (std::size_t level = from; level < levels_.size(); ++level) {
    if (h.is_identity()) return {std::move(h), level};
    const Level& L = levels_[level];
    unsigned image = h[L.base_point];
    int slot = L.transversal_slot[image];
    if (slot < 0) return {std::move(h), level};
    h = compose(L.transversal[static_cast<std::size_t>(slot)].inverse(), std::move(h));
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g, 0);
  return level == levels_.size() && residue.is_identity();
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const Level& level : levels_) {
    result *= static_cast<std::uint64_t>(level.orbit.size());
  }
  return result;
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> points;
  points.reserve(levels_.size());
  for (const Level& level : levels_) points.push_back(level.base_point);
  return points;
}

bool StabilizerChain::extend(const Perm& g) {
  if (g.degree() != degree_) {
    throw InvalidArgumentError("stabilizer chain: generator degree mismatch");
  }
  auto [residue, level] = sift(g, 0);
  if (residue.is_identity()) return false;
  add_strong_generator(level, residue);
  return true;
}

void StabilizerChain::rebuild_orbit(Level& level) {
  level.transversal_slot.assign(degree_, -1);
  level.transversal.clear();
  level.orbit.clear();

  level.orbit.push_back(level.base_point);
  level.transversal_slot[level.base_point] = 0;
  level.transversal.emplace_back(degree_);

  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    unsigned point = level.orbit[i];
    const Perm u = level.transversal[static_cast<std::size_t>(level.transversal_slot[point])];
    for (const Perm& s : level.generators) {
      unsigned image = s[point];
      if (level.transversal_slot[image] < 0) {
        level.transversal_slot[image] = static_cast<int>(level.transversal.size());
        level.transversal.push_back(compose(s, u));
        level.orbit.push_back(image);
      }
    }
  }
}

void StabilizerChain::add_strong_generator(std::size_t level, const Perm& h) {
  if (h.is_identity()) return;
  if (level == levels_.size()) {
    // New base point: the first point h moves, keeping the base the list of
    // first non-fixed points in increasing order.
    unsigned base_point = 0;
    while (h[base_point] == base_point) ++base_point;
    Level fresh;
    fresh.base_point = base_point;
    levels_.push_back(std::move(fresh));
  }

  levels_[level].generators.push_back(h);
  rebuild_orbit(levels_[level]);

  // Restore the chain property below this level: every Schreier generator
  // of the enlarged level must sift through the deeper chain. Recursive
  // calls only touch deeper levels but may reallocate levels_, so access
  // by index and copy what the iteration needs.
  const std::size_t orbit_size = levels_[level].orbit.size();
  const std::size_t gen_count = levels_[level].generators.size();
  for (std::size_t oi = 0; oi < orbit_size; ++oi) {
    for (std::size_t gi = 0; gi < gen_count; ++gi) {
      const Level& L = levels_[level];
      unsigned point = L.orbit[oi];
      const Perm u = L.transversal[static_cast<std::size_t>(L.transversal_slot[point])];
      const Perm s = L.generators[gi];
      unsigned image = s[point];
      const Perm u_image =
          L.transversal[static_cast<std::size_t>(L.transversal_slot[image])];
      Perm schreier = compose(u_image.inverse(), compose(s, u));
      auto [residue, stop] = sift(std::move(schreier), level + 1);
      if (!residue.is_identity()) add_strong_generator(stop, residue);
    }
  }
}

} // namespace hugheslab
