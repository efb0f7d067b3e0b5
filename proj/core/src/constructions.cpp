#include "hugheslab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hugheslab/errors.hpp"
#include "hugheslab/numeric.hpp"

namespace hugheslab {

namespace {

using Poly = std::vector<unsigned>; // coefficients, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t deg_m = m.size() - 1;
  while (a.size() > deg_m) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - deg_m;
      for (std::size_t i = 0; i < m.size(); ++i) {
        // m is monic, so subtracting lead * x^shift * m clears the top term
        a[i + shift] = (a[i + shift] + p * lead - (lead * m[i]) % p) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, unsigned p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic before reducing.
    unsigned lead = b.back();
    if (lead != 1) {
      unsigned inv = 1;
      for (unsigned i = 1; i < p; ++i) {
        if ((lead * i) % p == 1) {
          inv = i;
          break;
        }
      }
      for (unsigned& c : b) c = (c * inv) % p;
    }
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, unsigned p, unsigned k) {
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for primes r|k.
  const Poly x{0, 1};
  Poly xq = poly_powmod(x, checked_pow(p, k), f, p);
  if (xq != poly_mod(x, f, p)) return false;
  for (std::uint64_t r : prime_divisors(k)) {
    Poly xe = poly_powmod(x, checked_pow(p, static_cast<unsigned>(k / r)), f, p);
    // xe - x
    Poly diff = xe;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

} // namespace

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw InvalidArgumentError("FiniteField: p must be prime");
  if (k == 0) throw InvalidArgumentError("FiniteField: k must be positive");
  q_ = checked_pow(p, k);
  if (q_ > 1000000) throw InvalidArgumentError("FiniteField: p^k must be <= 10^6");

  if (k_ == 1) {
    modulus_ = {0, 1}; // the prime field needs no reduction
  } else {
    // Lexicographically first monic irreducible: candidates x^k + sum a_i x^i
    // ordered by the big-endian digit tuple (a_{k-1}, ..., a_0).
    bool found = false;
    for (std::uint64_t code = 1; code < q_ && !found; ++code) {
      Poly f(k + 1, 0);
      f[k] = 1;
      std::uint64_t rest = code;
      for (unsigned i = 0; i < k; ++i) { // big-endian: high coefficient first
        f[k - 1 - i] = static_cast<unsigned>(rest / checked_pow(p, k - 1 - i) % p);
      }
      // decode digits of `code` in base p, most significant digit -> a_{k-1}
      rest = code;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      std::reverse(f.begin(), f.end() - 1); // now f[0..k-1] big-endian decoded
      if (is_irreducible(f, p, k)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw Error("FiniteField: no irreducible modulus found (internal)");
  }

  // Lexicographically first primitive element.
  const std::uint64_t group_order = q_ - 1;
  for (Element a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == group_order) {
      generator_ = a;
      break;
    }
  }
}

std::vector<unsigned> FiniteField::coefficients(Element a) const {
  std::vector<unsigned> coeffs(k_);
  for (unsigned i = 0; i < k_; ++i) {
    coeffs[i] = a % p_;
    a /= p_;
  }
  return coeffs;
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<unsigned>& coeffs) const {
  if (coeffs.size() != k_) throw InvalidArgumentError("coefficient vector length mismatch");
  Element a = 0;
  for (unsigned i = k_; i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgumentError("coefficient out of range");
    a = a * p_ + coeffs[i];
  }
  return a;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  Element out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  Element out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  return add(a, neg(b));
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (k_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  Poly pa = coefficients(a);
  Poly pb = coefficients(b);
  Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  prod.resize(k_, 0);
  std::vector<unsigned> coeffs(prod.begin(), prod.end());
  return from_coefficients(coeffs);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inverse(Element a) const {
  if (a == 0) throw InvalidArgumentError("FiniteField: zero has no inverse");
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw InvalidArgumentError("FiniteField: zero has no multiplicative order");
  std::uint64_t order = 1;
  Element x = a;
  while (x != 1) {
    x = mul(x, a);
    ++order;
  }
  return order;
}

std::string FiniteField::modulus_string() const {
  if (k_ == 1) return "x - x (prime field, arithmetic mod " + std::to_string(p_) + ")";
  std::ostringstream out;
  bool first = true;
  for (unsigned d = k_ + 1; d-- > 0;) {
    unsigned c = d == k_ ? 1u : modulus_[d];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (d == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << "x";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

PermGroup affine_frobenius(unsigned p, unsigned k, std::uint64_t m) {
  FiniteField field(p, k);
  const std::uint64_t q = field.size();
  if (m <= 1) throw InvalidArgumentError("affine_frobenius: m must exceed 1");
  if ((q - 1) % m != 0) {
    throw InvalidArgumentError("affine_frobenius: m must divide p^k - 1");
  }
  std::vector<Perm> gens;
  for (unsigned i = 0; i < k; ++i) {
    const FiniteField::Element basis = static_cast<FiniteField::Element>(checked_pow(p, i));
    std::vector<unsigned> images(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      images[a] = field.add(static_cast<FiniteField::Element>(a), basis);
    }
    gens.emplace_back(std::move(images));
  }
  const FiniteField::Element w = field.pow(field.generator(), (q - 1) / m);
  std::vector<unsigned> mult(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    mult[a] = field.mul(w, static_cast<FiniteField::Element>(a));
  }
  gens.emplace_back(std::move(mult));
  return PermGroup(q, std::move(gens));
}

GammaTower gamma_tower() {
  FiniteField field(3, 3);
  PermGroup gamma0 = affine_frobenius(3, 3, 13);

  std::vector<unsigned> frob(27);
  for (std::uint64_t a = 0; a < 27; ++a) {
    frob[a] = field.pow(static_cast<FiniteField::Element>(a), 3);
  }
  Perm frobenius(std::move(frob));

  std::vector<Perm> gens = gamma0.generators();
  std::vector<Perm> translations(gens.begin(), gens.end() - 1);
  Perm multiplier = gens.back();
  gens.push_back(frobenius);
  PermGroup gamma(27, gens);

  return GammaTower{std::move(gamma0), std::move(gamma), std::move(translations),
                    std::move(multiplier), std::move(frobenius)};
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw InvalidArgumentError("cyclic_group: n must be positive");
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return PermGroup(n, {Perm(std::move(images))});
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw InvalidArgumentError("dihedral_group: n must be >= 3");
  std::vector<unsigned> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw InvalidArgumentError("symmetric_group: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> swap01(n), cycle(n);
  for (unsigned i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return PermGroup(n, {Perm(std::move(swap01))});
  return PermGroup(n, {Perm(std::move(swap01)), Perm(std::move(cycle))});
}

PermGroup alternating_group(unsigned n) {
  if (n < 3) throw InvalidArgumentError("alternating_group: n must be >= 3");
  std::vector<unsigned> three(n);
  std::iota(three.begin(), three.end(), 0u);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return PermGroup(n, {Perm(std::move(three))});
  std::vector<unsigned> big(n);
  std::iota(big.begin(), big.end(), 0u);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) big[i] = (i + 1) % n; // n-cycle, even
  } else {
    for (unsigned i = 1; i < n; ++i) big[i] = i % (n - 1) + 1; // (1..n-1)-cycle
  }
  return PermGroup(n, {Perm(std::move(three)), Perm(std::move(big))});
}

PermGroup elementary_abelian_group(unsigned p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgumentError("elementary_abelian_group: p must be prime");
  if (k == 0) throw InvalidArgumentError("elementary_abelian_group: k must be positive");
  const unsigned degree = p * k;
  std::vector<Perm> gens;
  for (unsigned b = 0; b < k; ++b) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 0; i < p; ++i) images[b * p + i] = b * p + (i + 1) % p;
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

namespace {

/// Left-regular representation from an explicit multiplication table over
/// element codes 0..n-1.
PermGroup regular_rep(unsigned n, const std::vector<unsigned>& generator_codes,
                      const std::function<unsigned(unsigned, unsigned)>& mul) {
  std::vector<Perm> gens;
  for (unsigned g : generator_codes) {
    std::vector<unsigned> images(n);
    for (unsigned h = 0; h < n; ++h) images[h] = mul(g, h);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

} // namespace

PermGroup extraspecial_group(unsigned p) {
  if (!is_prime(p) || p == 2) {
    throw InvalidArgumentError("extraspecial_group: p must be an odd prime");
  }
  const unsigned n = p * p * p;
  // Heisenberg multiplication (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'),
  // element code a + p*b + p^2*c.
  auto mul = [p](unsigned g, unsigned h) -> unsigned {
    unsigned a1 = g % p, b1 = (g / p) % p, c1 = g / (p * p);
    unsigned a2 = h % p, b2 = (h / p) % p, c2 = h / (p * p);
    unsigned a = (a1 + a2) % p;
    unsigned b = (b1 + b2) % p;
    unsigned c = (c1 + c2 + a1 * b2) % p;
    return a + p * b + p * p * c;
  };
  return regular_rep(n, {1u, p}, mul); // X = (1,0,0), Y = (0,1,0)
}

PermGroup dicyclic_group(unsigned m) {
  if (m < 2) throw InvalidArgumentError("dicyclic_group: m must be >= 2");
  const unsigned n = 4 * m;
  const unsigned two_m = 2 * m;
  // Elements a^i b^j (i < 2m, j < 2) coded i + 2m*j, with a^(2m) = 1,
  // b^2 = a^m, b a b^-1 = a^-1.
  auto mul = [two_m, m](unsigned g, unsigned h) -> unsigned {
    unsigned i1 = g % two_m, j1 = g / two_m;
    unsigned i2 = h % two_m, j2 = h / two_m;
    unsigned i, j;
    if (j1 == 0) {
      i = (i1 + i2) % two_m;
      j = j2;
    } else {
      i = (i1 + two_m - i2) % two_m;
      j = 1 + j2;
      if (j == 2) {
        j = 0;
        i = (i + m) % two_m;
      }
    }
    return i + two_m * j;
  };
  return regular_rep(n, {1u, two_m}, mul); // a, b
}

PermGroup metacyclic_group(unsigned m, unsigned r) {
  if (m < 2 || r % m == 0 || std::gcd(m, r) != 1 || r % m == 1) {
    throw InvalidArgumentError("metacyclic_group: need gcd(r, m) = 1 and r != 0, 1 mod m");
  }
  std::vector<unsigned> rot(m), mult(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    mult[i] = static_cast<unsigned>((static_cast<std::uint64_t>(r) * i) % m);
  }
  return PermGroup(m, {Perm(std::move(rot)), Perm(std::move(mult))});
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const std::size_t degree = A.degree() + B.degree();
  std::vector<Perm> gens;
  for (const Perm& a : A.generators()) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 0; i < A.degree(); ++i) images[i] = a[i];
    gens.emplace_back(std::move(images));
  }
  for (const Perm& b : B.generators()) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 0; i < B.degree(); ++i) {
      images[A.degree() + i] = static_cast<unsigned>(A.degree()) + b[i];
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup standard_family(const std::string& name,
                          const std::vector<std::uint64_t>& params) {
  auto arg = [&](std::size_t i) -> unsigned {
    if (i >= params.size()) {
      throw InvalidArgumentError("standard_family: missing parameter for " + name);
    }
    return static_cast<unsigned>(params[i]);
  };
  if (name == "cyclic") return cyclic_group(arg(0));
  if (name == "dihedral") return dihedral_group(arg(0));
  if (name == "symmetric") return symmetric_group(arg(0));
  if (name == "alternating") return alternating_group(arg(0));
  if (name == "elementary") return elementary_abelian_group(arg(0), arg(1));
  if (name == "extraspecial") return extraspecial_group(arg(0));
  if (name == "dicyclic") return dicyclic_group(arg(0));
  if (name == "metacyclic") return metacyclic_group(arg(0), arg(1));
  if (name == "affine") return affine_frobenius(arg(0), arg(1), arg(2));
  throw InvalidArgumentError("standard_family: unknown family '" + name + "'");
}

} // namespace hugheslab
