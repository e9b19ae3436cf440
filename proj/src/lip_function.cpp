#include "lipfree/lip_function.hpp"

#include <utility>

#include "lipfree/error.hpp"

namespace lipfree {

LipFunction::LipFunction(SpacePtr space, std::vector<Rat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != space_->size())
    throw Error(ErrorKind::ParseError, "value vector has wrong length");
  if (values_[space_->base()] != 0)
    throw Error(ErrorKind::NormViolation, "f(base) must be 0",
                space_->base());
}

const Rat& LipFunction::value(int i) const {
  check_point(*space_, i);
  return values_[i];
}

Rat LipFunction::lip_norm() const {
  const int n = space_->size();
  if (n < 2) throw Error(ErrorKind::SingletonSpace, "lip_norm needs n >= 2");
  Rat best(0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rat q = rat_abs(values_[x] - values_[y]) / space_->dist(x, y);
      if (q > best) best = std::move(q);
    }
  return best;
}

Rat LipFunction::pair_quotient(int u, int v) const {
  check_pair(*space_, u, v);
  return (values_[u] - values_[v]) / space_->dist(u, v);
}

LipFunction magic_function(const SpacePtr& M, int p, int q) {
  check_pair(*M, p, q);
  const int n = M->size();
  const int base = M->base();
  // Denominators d(t,q) + d(t,p) >= d(p,q) > 0, so every term is defined.
  auto ratio = [&](int t) {
    return (M->dist(t, q) - M->dist(t, p)) / (M->dist(t, q) + M->dist(t, p));
  };
  const Rat correction = ratio(base);
  const Rat half = M->dist(p, q) / 2;
  std::vector<Rat> values;
  values.reserve(n);
  for (int t = 0; t < n; ++t) values.push_back(half * (ratio(t) - correction));
  return LipFunction(M, std::move(values));
}

}  // namespace lipfree
