#include "hugheslab/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "hugheslab/errors.hpp"

namespace hugheslab {

namespace {
std::atomic<std::size_t> g_default_cap{200000};
} // namespace

std::size_t default_enumeration_cap() { return g_default_cap.load(); }

void set_default_enumeration_cap(std::size_t cap) {
  if (cap == 0) throw InvalidArgumentError("enumeration cap must be positive");
  g_default_cap.store(cap);
}

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  mutable std::mutex mutex;
  mutable std::optional<StabilizerChain> chain;
  mutable std::optional<std::vector<Perm>> elements;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : impl_(std::make_shared<Impl>()) {
  impl_->degree = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgumentError("group generators must share the degree");
    }
  }
  if (generators.empty()) generators.emplace_back(degree);
  impl_->generators = std::move(generators);
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {Perm(degree)});
}

std::size_t PermGroup::degree() const { return impl_->degree; }

const std::vector<Perm>& PermGroup::generators() const { return impl_->generators; }

const StabilizerChain& PermGroup::chain() const {
  std::lock_guard lock(impl_->mutex);
  if (!impl_->chain) {
    StabilizerChain chain(impl_->degree);
    for (const Perm& g : impl_->generators) chain.extend(g);
    impl_->chain.emplace(std::move(chain));
  }
  return *impl_->chain;
}

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  for (const Perm& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  if (order() != other.order()) return false;
  return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

const std::vector<Perm>& PermGroup::elements(std::size_t cap) const {
  const std::size_t effective_cap = cap == 0 ? default_enumeration_cap() : cap;
  std::lock_guard lock(impl_->mutex);
  if (!impl_->elements) {
    // Breadth-first closure over generator multiplication from the identity.
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> queue;
    Perm identity(impl_->degree);
    seen.insert(identity);
    queue.push_back(std::move(identity));
    while (!queue.empty()) {
      Perm current = std::move(queue.front());
      queue.pop_front();
      for (const Perm& s : impl_->generators) {
        Perm next = compose(current, s);
        if (seen.insert(next).second) {
          if (seen.size() > effective_cap) {
            std::ostringstream msg;
            msg << "element enumeration exceeds cap " << effective_cap;
            throw CapExceededError(msg.str());
          }
          queue.push_back(std::move(next));
        }
      }
    }
    std::vector<Perm> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    impl_->elements = std::move(sorted);
  }
  if (impl_->elements->size() > effective_cap) {
    std::ostringstream msg;
    msg << "group order " << impl_->elements->size() << " exceeds cap " << effective_cap;
    throw CapExceededError(msg.str());
  }
  return *impl_->elements;
}

} // namespace hugheslab
