#pragma once

#include <utility>
#include <vector>

#include "bezout/polynomial.hpp"

namespace bezout {

struct RootOptions {
  double residual_tolerance = 1e-9;
  /// Roots closer than cluster_tolerance * (1 + cauchy_bound) are flagged.
  double cluster_tolerance = 1e-7;
  int newton_steps = 3;
};

/**
 * Roots of a polynomial together with the evidence that they are roots.
 *
 * residuals[i] = |p(roots[i])|. A root is multiplicity-suspect when another
 * root lies within the cluster radius, or within a few Newton-step lengths
 * (the latter catches triple and higher clusters, whose computed members
 * spread far beyond the fixed radius).
 */
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  std::vector<bool> multiplicity_suspect;
  double cauchy_bound = 0.0;
  /// False when some residual exceeds tol * ||p|| * (1 + |root|)^deg.
  bool verified = false;

  std::size_t size() const noexcept { return roots.size(); }
  bool all_simple() const noexcept;
};

/// Companion-matrix eigenvalues (balanced) followed by Newton polishing.
/// Throws DegreeZero for constants; an unverified set is returned flagged.
RootSet find_roots(const Polynomial& p, const RootOptions& options = {});

/// 1 + ||p|| / |leading|.
double cauchy_bound(const Polynomial& p);

/**
 * Jitter clustered roots apart and rescale to the original coefficient norm.
 *
 * Returns (A', B') with simple roots, ||A'|| = ||A||, ||B'|| = ||B|| and
 * ||A' - A|| + ||B' - B|| <= epsilon (when the jitter needed to separate the
 * cluster fits inside that budget). Already-simple inputs come back unchanged.
 */
std::pair<Polynomial, Polynomial> perturb_to_simple(const Polynomial& A, const Polynomial& B,
                                                    double epsilon,
                                                    const RootOptions& options = {});

}  // namespace bezout
