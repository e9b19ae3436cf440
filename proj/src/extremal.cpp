#include "lipfree/extremal.hpp"

#include <utility>

#include "lipfree/error.hpp"
#include "lipfree/norms.hpp"
#include "lipfree/simplex.hpp"

namespace lipfree {

Rat exposure_margin(const LipFunction& f, PointPair pair) {
  const auto& M = *f.space();
  check_pair(M, pair.x, pair.y);
  bool first = true;
  Rat margin;
  for (int u = 0; u < M.size(); ++u)
    for (int v = 0; v < M.size(); ++v) {
      if (u == v || (u == pair.x && v == pair.y)) continue;
      Rat gap = Rat(1) - f.pair_quotient(u, v);
      if (first || gap < margin) {
        margin = std::move(gap);
        first = false;
      }
    }
  if (first)
    throw Error(ErrorKind::SingletonSpace, "no competing molecule exists");
  return margin;
}

ExposureCertificate exposure_certificate(const SpacePtr& M, PointPair pair) {
  auto segment = M->segment(pair.x, pair.y);
  if (segment.size() != 2)
    throw Error(ErrorKind::NontrivialSegment,
                "segment has " + std::to_string(segment.size()) +
                    " points; an interior point forces margin 0",
                pair.x, pair.y);
  LipFunction f = magic_function(M, pair.x, pair.y);
  Rat margin = exposure_margin(f, pair);
  if (margin <= 0)
    throw Error(ErrorKind::InvariantViolated,
                "trivial segment must yield a positive margin", pair.x,
                pair.y);
  return {pair, std::move(f), std::move(margin)};
}

bool verify_certificate(const SpacePtr& M, const ExposureCertificate& cert) {
  if (!same_space(M, cert.function.space())) return false;
  if (cert.function.lip_norm() > 1) return false;
  if (cert.function.pair_quotient(cert.pair.x, cert.pair.y) != 1) return false;
  if (exposure_margin(cert.function, cert.pair) != cert.margin) return false;
  return cert.margin > 0;
}

MoleculeReport classify_molecule(const SpacePtr& M, PointPair pair) {
  check_pair(*M, pair.x, pair.y);
  MoleculeReport report;
  report.pair = pair;
  report.segment_points = M->segment(pair.x, pair.y);
  report.is_trivial_segment = report.segment_points.size() == 2;

  if (report.is_trivial_segment) {
    report.is_extreme = report.is_exposed = true;
    report.certificate = exposure_certificate(M, pair);
    return report;
  }

  // Witness in the segment interior minimizing d(p, z); scan order breaks
  // ties at the lowest index.
  int witness = -1;
  for (int z : report.segment_points) {
    if (z == pair.x || z == pair.y) continue;
    if (witness < 0 || M->dist(pair.x, z) < M->dist(pair.x, witness))
      witness = z;
  }
  const Rat& dpq = M->dist(pair.x, pair.y);
  Representation decomposition;
  decomposition.terms.push_back(
      {M->dist(pair.x, witness) / dpq, {pair.x, witness}});
  decomposition.terms.push_back(
      {M->dist(witness, pair.y) / dpq, {witness, pair.y}});
  if (!(from_representation(M, decomposition) ==
        FreeElement::molecule(M, pair)))
    throw Error(ErrorKind::InvariantViolated,
                "decomposition must reproduce the molecule", pair.x, pair.y,
                witness);
  report.witness_point = witness;
  report.decomposition = std::move(decomposition);
  return report;
}

ExtremeDecision brute_force_extreme(const SpacePtr& M, PointPair pair) {
  check_pair(*M, pair.x, pair.y);
  const int n = M->size();
  const int base = M->base();

  std::vector<PointPair> others;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !(u == pair.x && v == pair.y)) others.push_back({u, v});
  const int k = static_cast<int>(others.size());
  if (k == 0) return {true, std::nullopt};

  const FreeElement target = FreeElement::molecule(M, pair);

  // Coefficients of the candidate combination must match the target on
  // every non-base coordinate, and the weights must sum to one.
  LinearProgram lp(k);
  for (int coord = 0; coord < n; ++coord) {
    if (coord == base) continue;
    std::vector<Rat> row(k, Rat(0));
    for (int j = 0; j < k; ++j) {
      const auto& [u, v] = others[j];
      if (u == coord) row[j] += Rat(1) / M->dist(u, v);
      if (v == coord) row[j] -= Rat(1) / M->dist(u, v);
    }
    lp.add_eq(std::move(row), target.coeff(coord));
  }
  lp.add_eq(std::vector<Rat>(k, Rat(1)), Rat(1));

  LpSolution sol = lp.solve();
  if (sol.status == LpStatus::Infeasible) return {true, std::nullopt};
  if (sol.status != LpStatus::Optimal)
    throw Error(ErrorKind::InvariantViolated,
                "feasibility LP cannot be unbounded");

  Representation combination;
  for (int j = 0; j < k; ++j)
    if (sol.x[j] != 0) combination.terms.push_back({sol.x[j], others[j]});
  return {false, std::move(combination)};
}

MassConcentration mass_concentration_check(const std::vector<Rat>& a,
                                           const std::vector<Rat>& b,
                                           const Rat& alpha, const Rat& eps) {
  if (a.size() != b.size())
    throw Error(ErrorKind::NormViolation, "vectors must have equal length");
  if (alpha <= 0 || alpha >= 1 || eps <= 0 || eps >= 1)
    throw Error(ErrorKind::NormViolation, "alpha and eps must lie in (0,1)");
  Rat mass(0);
  for (const auto& ai : a) mass += rat_abs(ai);
  if (mass != 1)
    throw Error(ErrorKind::NormViolation,
                "||a||_1 = " + format_rational(mass) + ", expected 1");
  for (const auto& bi : b)
    if (rat_abs(bi) > 1)
      throw Error(ErrorKind::NormViolation, "||b||_inf exceeds 1");

  Rat inner(0);
  for (size_t i = 0; i < a.size(); ++i) inner += a[i] * b[i];
  if (inner < 1 - alpha * eps)
    throw Error(ErrorKind::PreconditionNotMet,
                "<a,b> = " + format_rational(inner) + " < 1 - alpha*eps");

  Rat tail(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (rat_abs(b[i]) <= 1 - alpha) tail += rat_abs(a[i]);
  return {tail <= eps, std::move(tail), std::move(inner)};
}

SplitResult split_representation(const SpacePtr& M, int p, int q,
                                 const Representation& r, const Rat& alpha,
                                 const Rat& eps) {
  check_pair(*M, p, q);
  const Rat half(1, 2);
  if (alpha <= 0 || alpha >= half || eps <= 0 || eps >= half)
    throw Error(ErrorKind::PreconditionNotMet,
                "alpha and eps must lie in (0, 1/2)");
  if (M->base() != q)
    throw Error(ErrorKind::PreconditionNotMet,
                "the base point must be q; rebase first");
  const Rat budget = Rat(1) / (Rat(1) - eps * alpha);
  if (r.mass() > budget)
    throw Error(ErrorKind::PreconditionNotMet,
                "representation mass " + format_rational(r.mass()) +
                    " exceeds 1/(1 - eps*alpha) = " + format_rational(budget));

  const FreeElement mu = from_representation(M, r);
  const LipFunction f = magic_function(M, p, q);
  if (mu.pairing(f) != 1)
    throw Error(ErrorKind::PreconditionNotMet,
                "<mu, f_pq> = " + format_rational(mu.pairing(f)) +
                    ", expected 1");
  if (primal_norm(mu).value != 1)
    throw Error(ErrorKind::PreconditionNotMet, "||mu|| must be exactly 1");

  const Rat threshold = Rat(1) - alpha;
  SplitResult result;
  result.bad_mass = 0;
  for (const auto& term : r.terms) {
    const Rat quotient = f.pair_quotient(term.pair.x, term.pair.y);
    if (rat_abs(quotient) > threshold) {
      result.good.terms.push_back(term);
    } else {
      result.bad_mass += rat_abs(term.weight);
      result.bad.terms.push_back(term);
    }
  }

  // Both guarantees are theorems; a violation is a defect, not an input
  // error.
  if (result.bad_mass > 2 * eps)
    throw Error(ErrorKind::InvariantViolated,
                "bad mass " + format_rational(result.bad_mass) +
                    " exceeds 2*eps");
  const auto alpha_segment = M->epsilon_segment(p, q, alpha);
  auto inside = [&](int t) {
    for (int z : alpha_segment)
      if (z == t) return true;
    return false;
  };
  for (const auto& term : result.good.terms) {
    if (!inside(term.pair.x) || !inside(term.pair.y))
      throw Error(ErrorKind::InvariantViolated,
                  "good term endpoint outside the alpha-segment",
                  term.pair.x, term.pair.y);
  }
  return result;
}

SplitResult split_optimal(const SpacePtr& M, int p, int q, const Rat& alpha,
                          const Rat& eps) {
  auto rep = primal_norm(FreeElement::molecule(M, {p, q})).representation;
  return split_representation(M, p, q, rep, alpha, eps);
}

}  // namespace lipfree
