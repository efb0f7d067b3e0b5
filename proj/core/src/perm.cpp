#include "hugheslab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hugheslab/errors.hpp"

namespace hugheslab {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw InvalidArgumentError("image array is not a bijection on {0..degree-1}");
    }
    seen[image] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point index in cycle notation");
      }
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      if (value >= degree) throw ParseError("cycle point exceeds degree");
      if (used[value]) throw ParseError("point repeated across cycles");
      used[value] = true;
      cycle.push_back(static_cast<unsigned>(value));
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i; // ')'
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) images[cycle[j]] = cycle[j + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::power(std::uint64_t e) const {
  Perm result(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    unsigned point = start;
    while (!seen[point]) {
      seen[point] = true;
      point = images_[point];
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    std::vector<unsigned> cycle;
    unsigned point = start;
    while (!seen[point]) {
      seen[point] = true;
      cycle.push_back(point);
      point = images_[point];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InvalidArgumentError("compose: degree mismatch");
  std::vector<unsigned> images(a.degree());
  for (unsigned i = 0; i < images.size(); ++i) images[i] = a[b[i]];
  return Perm(std::move(images));
}

Perm conjugate(const Perm& g, const Perm& h) {
  return compose(compose(g, h), g.inverse());
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(x.inverse(), compose(y.inverse(), compose(x, y)));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull; // FNV-1a
  for (unsigned image : p.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hugheslab
