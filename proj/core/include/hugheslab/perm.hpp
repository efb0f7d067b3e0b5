#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hugheslab {

/// A permutation of {0, ..., degree-1}, stored as a dense image array.
///
/// The composition convention is fixed throughout the library:
/// compose(a, b) maps i to a(b(i)), i.e. the right factor acts first.
/// All group products anywhere in the library go through compose().
class Perm {
public:
  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);

  /// From an image array; throws InvalidArgumentError unless it is a
  /// bijection on {0..degree-1}.
  explicit Perm(std::vector<unsigned> images);

  /// Parse disjoint cycle notation, e.g. "(0 1 2)(3 4)". The identity is
  /// "()" or the empty string. Points may be separated by spaces or commas.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm power(std::uint64_t e) const;

  /// Least n >= 1 with g^n = id; the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Nontrivial cycles, each rotated to start at its smallest point,
  /// sorted by that point.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Disjoint-cycle form; the identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<unsigned> images_;
};

/// a(b(i)) — the right factor acts first. Throws on degree mismatch.
Perm compose(const Perm& a, const Perm& b);

/// g h g^-1.
Perm conjugate(const Perm& g, const Perm& h);

/// x^-1 y^-1 x y.
Perm commutator(const Perm& x, const Perm& y);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace hugheslab
