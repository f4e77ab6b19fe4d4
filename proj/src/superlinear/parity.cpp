#include "superpair/superlinear/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace superpair {

Scalar eta(std::span<const Parity> parities) {
  if (parities.size() == 2) return Scalar(eta(parities[0], parities[1]));
  if (parities.size() == 3) return Scalar(eta(parities[0], parities[1], parities[2]));
  throw std::invalid_argument("eta takes two or three parities, got " + std::to_string(parities.size()));
}

Scalar eta(std::initializer_list<Parity> parities) {
  return eta(std::span<const Parity>(parities.begin(), parities.size()));
}

SuperSpace::SuperSpace(std::vector<Parity> parities) : parities_(std::move(parities)) {
  for (auto& p : parities_) {
    if (p > 1) throw std::invalid_argument("parity must be 0 or 1");
  }
}

SuperSpace SuperSpace::standard(std::size_t even, std::size_t odd) {
  std::vector<Parity> p(even, 0);
  p.insert(p.end(), odd, 1);
  return SuperSpace(std::move(p));
}

std::size_t SuperSpace::even_dim() const {
  return static_cast<std::size_t>(std::count(parities_.begin(), parities_.end(), Parity{0}));
}

SuperSpace SuperSpace::direct_sum(const SuperSpace& other) const {
  std::vector<Parity> p = parities_;
  p.insert(p.end(), other.parities_.begin(), other.parities_.end());
  return SuperSpace(std::move(p));
}

SuperSpace SuperSpace::tensor(const SuperSpace& other) const {
  std::vector<Parity> p;
  p.reserve(dim() * other.dim());
  for (auto a : parities_) {
    for (auto b : other.parities_) p.push_back(add(a, b));
  }
  return SuperSpace(std::move(p));
}

SuperSpace SuperSpace::shifted(Parity a) const {
  std::vector<Parity> p = parities_;
  for (auto& x : p) x = add(x, a);
  return SuperSpace(std::move(p));
}

}  // namespace superpair
