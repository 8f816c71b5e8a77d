#pragma once

#include <cstdint>
#include <optional>

#include "bezout/polynomial.hpp"
#include "bezout/roots.hpp"

namespace bezout {

/// Raw min{|B(alpha_i)|, |A(beta_j)|} with the root that attains it. Never throws.
struct DeltaValue {
  double value = 0.0;
  Complex witness;
  bool witness_is_root_of_A = true;
};

DeltaValue delta_value(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB);

struct DeltaTildeBracket {
  double lower = 0.0;
  double upper = 0.0;
  Complex witness;
};

struct DeltaReport {
  double delta = 0.0;
  Complex argmin_witness;
  double delta_tilde_lower = 0.0;
  double delta_tilde_upper = 0.0;
  Complex delta_tilde_witness;
  bool sandwich_ok = false;
  std::optional<double> T_bound_note;
};

struct SeparationOptions {
  double common_root_threshold = 1e-12;  // relative to max(||A||, ||B||)
  double sandwich_tolerance = 1e-9;
  int local_iterations = 50;
  double restart_tolerance = 1e-10;
  int max_restarts = 40;
  int grid_per_axis = 8;
};

/// delta(A,B). Throws CommonRoot when the value falls under the zero threshold.
double delta(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB,
             const SeparationOptions& options = {});

/**
 * Bracket for the global minimum of |A| + |B| over the plane.
 *
 * upper: best value from derivative-free simplex descent started at every root
 * of A, B, A', B' and on a grid over the Cauchy disk. lower: delta / 3^max(N,K).
 */
DeltaTildeBracket delta_tilde(const Polynomial& A, const Polynomial& B, const SeparationOptions& options = {});
DeltaTildeBracket delta_tilde(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                              const RootSet& rootsB, double delta_value, const SeparationOptions& options = {});

/// delta, the delta-tilde bracket and the sandwich check in one pass.
DeltaReport analyze_separation(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                               const RootSet& rootsB, const SeparationOptions& options = {});
DeltaReport analyze_separation(const Polynomial& A, const Polynomial& B, const SeparationOptions& options = {});

/// |p(z)| < eps.
bool sublevel_member(const Polynomial& p, double eps, Complex z);

struct SeparationReport {
  std::int64_t samples = 0;
  std::int64_t hits_A = 0;
  std::int64_t hits_B = 0;
  std::int64_t joint_hits = 0;
  double level_A = 0.0;
  double level_B = 0.0;
};

/**
 * Samples points and counts membership in L(A, delta/3^N) and L(B, delta/3^K).
 *
 * Half of the points are a Halton sequence over the Cauchy disk, the rest sit
 * on rings of geometrically spaced radii around every root (where both sets
 * concentrate). Throws SeparationViolation on the first joint hit.
 */
SeparationReport check_separation(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                                  const RootSet& rootsB, double delta, std::int64_t n_samples);

}  // namespace bezout
