#include "lipfree/free_element.hpp"

#include <utility>

#include "lipfree/error.hpp"

namespace lipfree {

Rat Representation::mass() const {
  Rat total(0);
  for (const auto& term : terms) total += rat_abs(term.weight);
  return total;
}

FreeElement::FreeElement(SpacePtr space, std::vector<Rat> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != space_->size())
    throw Error(ErrorKind::ParseError, "coefficient vector has wrong length");
  coeffs_[space_->base()] = 0;
}

FreeElement FreeElement::zero(SpacePtr space) {
  std::vector<Rat> coeffs(space->size(), Rat(0));
  return FreeElement(std::move(space), std::move(coeffs));
}

FreeElement FreeElement::dirac(SpacePtr space, int x) {
  check_point(*space, x);
  std::vector<Rat> coeffs(space->size(), Rat(0));
  coeffs[x] = 1;
  return FreeElement(std::move(space), std::move(coeffs));
}

FreeElement FreeElement::molecule(SpacePtr space, PointPair pair) {
  check_pair(*space, pair.x, pair.y);
  std::vector<Rat> coeffs(space->size(), Rat(0));
  const Rat inv = Rat(1) / space->dist(pair.x, pair.y);
  coeffs[pair.x] = inv;
  coeffs[pair.y] = -inv;
  return FreeElement(std::move(space), std::move(coeffs));
}

const Rat& FreeElement::coeff(int i) const {
  check_point(*space_, i);
  return coeffs_[i];
}

bool FreeElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::vector<int> FreeElement::support() const {
  std::vector<int> out;
  for (int i = 0; i < space_->size(); ++i)
    if (coeffs_[i] != 0) out.push_back(i);
  return out;
}

Rat FreeElement::pairing(const LipFunction& f) const {
  if (!same_space(space_, f.space()))
    throw Error(ErrorKind::SpaceMismatch, "pairing across different spaces");
  Rat total(0);
  for (int i = 0; i < space_->size(); ++i)
    if (coeffs_[i] != 0) total += coeffs_[i] * f.value(i);
  return total;
}

FreeElement FreeElement::operator+(const FreeElement& other) const {
  if (!same_space(space_, other.space_))
    throw Error(ErrorKind::SpaceMismatch, "sum across different spaces");
  std::vector<Rat> coeffs(coeffs_);
  for (int i = 0; i < space_->size(); ++i) coeffs[i] += other.coeffs_[i];
  return FreeElement(space_, std::move(coeffs));
}

FreeElement FreeElement::operator-(const FreeElement& other) const {
  return *this + other.scaled(Rat(-1));
}

FreeElement FreeElement::scaled(const Rat& factor) const {
  std::vector<Rat> coeffs(coeffs_);
  for (auto& c : coeffs) c *= factor;
  return FreeElement(space_, std::move(coeffs));
}

FreeElement from_representation(const SpacePtr& M, const Representation& r) {
  std::vector<Rat> coeffs(M->size(), Rat(0));
  for (const auto& term : r.terms) {
    check_pair(*M, term.pair.x, term.pair.y);
    const Rat flow = term.weight / M->dist(term.pair.x, term.pair.y);
    coeffs[term.pair.x] += flow;
    coeffs[term.pair.y] -= flow;
  }
  return FreeElement(M, std::move(coeffs));  // base coefficient dropped
}

FreeElement rebase(const FreeElement& mu, int new_base) {
  const SpacePtr& M = mu.space();
  check_point(*M, new_base);
  if (new_base == M->base()) return mu;
  // In the base-free picture mu is the balanced measure
  //   sum_x c_x (e_x - e_base),
  // so its mass at the old base is -sum c_x and at any other point c_x.
  // Reading those masses off against the new base gives the image.
  Rat total(0);
  for (const auto& c : mu.coeffs()) total += c;
  std::vector<Rat> coeffs(mu.coeffs());
  coeffs[M->base()] = -total;
  return FreeElement(rebased(M, new_base), std::move(coeffs));
}

}  // namespace lipfree
