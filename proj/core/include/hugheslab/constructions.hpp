#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hugheslab/perm_group.hpp"

namespace hugheslab {

/// GF(p^k) with a fixed modulus: the lexicographically first monic
/// irreducible polynomial of degree k (coefficients compared from the
/// x^(k-1) coefficient down to the constant). For GF(27) this is
/// x^3 + 2x + 1, so x^3 reduces to x + 2.
///
/// Elements are indices 0..p^k-1; index sum(c_i p^i) encodes the
/// coefficient vector (c_0, ..., c_{k-1}) of 1, x, ..., x^{k-1}.
class FiniteField {
public:
  /// Requires p prime and p^k <= 10^6.
  FiniteField(unsigned p, unsigned k);

  using Element = std::uint32_t;

  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }
  std::uint64_t size() const { return q_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// Throws InvalidArgumentError for a = 0.
  Element inverse(Element a) const;

  std::vector<unsigned> coefficients(Element a) const;
  Element from_coefficients(const std::vector<unsigned>& coeffs) const;

  /// Lexicographically first primitive element (multiplicative order q-1).
  Element generator() const { return generator_; }
  std::uint64_t multiplicative_order(Element a) const;

  /// Human-readable modulus, e.g. "x^3 + 2x + 1".
  std::string modulus_string() const;

private:
  unsigned p_ = 0, k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<unsigned> modulus_; // monic, length k+1, low degree first
  Element generator_ = 0;
};

/// <translations, one multiplication of order m> acting on the p^k field
/// elements: the semidirect product N x| C_m of order p^k * m, a Frobenius
/// group for every m > 1 dividing p^k - 1. The multiplier is w = g^((q-1)/m)
/// with g the lexicographically first primitive element (for m = 13 over
/// GF(27) this is the square of that element).
PermGroup affine_frobenius(unsigned p, unsigned k, std::uint64_t m);

/// The 27-point tower over GF(27): gamma0 = N x| C_13 (order 351) and
/// gamma = <gamma0, y -> y^3> (order 1053).
struct GammaTower {
  PermGroup gamma0;
  PermGroup gamma;
  std::vector<Perm> translations; // additive generators of N
  Perm multiplier;                // order-13 multiplication, w = g^2
  Perm frobenius_map;             // y -> y^3
};
GammaTower gamma_tower();

PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned n);      // order 2n on n points, n >= 3
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);   // n >= 3
PermGroup elementary_abelian_group(unsigned p, unsigned k); // degree p*k
/// Extraspecial p^(1+2) of exponent p (p odd), via the regular
/// representation on p^3 points.
PermGroup extraspecial_group(unsigned p);
/// Dicyclic group of order 4m (m >= 2); dicyclic(2) is the quaternion
/// group Q8. Regular representation on 4m points.
PermGroup dicyclic_group(unsigned m);
/// C_m x| C_k on m points, the k-cycle acting as multiplication by r
/// (k = multiplicative order of r mod m). Requires gcd(r, m) = 1, r != 1.
PermGroup metacyclic_group(unsigned m, unsigned r);
PermGroup direct_product(const PermGroup& A, const PermGroup& B);

/// Named dispatcher used by the catalog and the CLI `construct` command:
///   cyclic n | dihedral n | symmetric n | alternating n | elementary p k |
///   extraspecial p | dicyclic m | metacyclic m r | affine p k m
/// Throws InvalidArgumentError for unknown names or bad parameters.
PermGroup standard_family(const std::string& name,
                          const std::vector<std::uint64_t>& params);

} // namespace hugheslab
