#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezout/polynomial.hpp"
#include "bezout/quadrature.hpp"
#include "bezout/regions.hpp"
#include "bezout/roots.hpp"
#include "bezout/solution.hpp"

namespace bezout {

/**
 * g(zeta, z) = (G(zeta) - G(z)) / (zeta - z) as a polynomial in z.
 *
 * For fixed zeta the coefficients come from synthetic division of G by
 * (z - zeta): c_{n-1} = g_n, c_{j-1} = g_j + zeta c_j. At z = zeta the value
 * is G'(zeta).
 */
class DifferenceQuotientKernel {
 public:
  explicit DifferenceQuotientKernel(Polynomial base);

  const Polynomial& base() const noexcept { return base_; }
  /// The kernel as a polynomial of degree deg G - 1 in z.
  Polynomial in_z(Complex zeta) const;
  Complex operator()(Complex zeta, Complex z) const;

 private:
  Polynomial base_;
};

/**
 * Residue evaluation of the contour formulas by barycentric interpolation.
 *
 * S is the degree <= N-1 interpolant of P(alpha_i)/B(alpha_i) at the roots of
 * A, R the degree <= K-1 interpolant of P(beta_j)/A(beta_j) at the roots of B.
 * Throws MultipleRoots for flagged root sets, CommonRoot when delta vanishes,
 * IllConditionedInterpolation when the weights overflow.
 */
BezoutSolution solve_residue(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                             const RootSet& rootsB, const Polynomial& P);

/// Coefficients of S by the literal residue sum over the roots of A of
/// a(alpha, z) P(alpha) / (A'(alpha) B(alpha)). Debug oracle only.
Polynomial residue_sum_S(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const Polynomial& P);

struct ContourPair {
  ContourSystem gamma1;  // winds once around every root of A, excludes B's
  ContourSystem gamma2;  // the same with A and B swapped
};

/// Boundaries of E_A and E_B; loops around holes are kept (clockwise).
ContourPair default_contours(const RootSet& rootsA, const RootSet& rootsB);

/**
 * Quadrature evaluation of the contour formulas.
 *
 * Moments mu_m = (1/2 pi i) * integral over gamma1 of P zeta^m / (A B), then
 * s_j = sum_{k>j} a_k mu_{k-j-1}; R likewise over gamma2. The Gauss-Legendre
 * order per quarter arc doubles until no coefficient moves by more than
 * rule.tolerance (relative to max(1, |coefficients|)).
 * Throws BadContour when a winding check fails, QuadratureNotConverged when
 * max_order is reached.
 */
BezoutSolution solve_quadrature(const Polynomial& A, const Polynomial& B, const RootSet& rootsA,
                                const RootSet& rootsB, const ContourPair& contours, const Polynomial& P,
                                const QuadratureRule& rule = {});

enum class InnerBackend { Sylvester, Residue, Quadrature };

std::string to_string(InnerBackend b);

/**
 * Solve A R + B S = 1 through the reversed pair.
 *
 * Solves Ar Rr + Br Sr = z^(N+K-1) with Ar = z^N A(1/z), Br = z^K B(1/z) and
 * recovers R = z^(K-1) Rr(1/z), S = z^(N-1) Sr(1/z). With a shift z0 the pair
 * is first translated to A(z+z0), B(z+z0). Throws ZeroRoot when A(0) or B(0)
 * vanishes and no shift is given.
 */
BezoutSolution solve_reversed(const Polynomial& A, const Polynomial& B, InnerBackend inner = InnerBackend::Residue,
                              std::optional<Complex> shift = std::nullopt);

struct MainPipelineReport {
  BezoutSolution solution;
  OriginShift shift;
  ContourPair inverted;
  ContourMetrics gamma1_metrics;
};

/**
 * The full large-root construction: shift the origin away from every root,
 * build Gamma1 = boundary of D_A and E_A (Gamma2 likewise), invert both, run
 * the quadrature backend on the reversed pair and undo reversal and shift.
 */
MainPipelineReport solve_main_pipeline(const Polynomial& A, const Polynomial& B, const QuadratureRule& rule = {});

/// Empirical ceiling for ||R|| delta^2 / max(1, ||A||, ||B||) at degrees (N, K),
/// when the table has an entry.
std::optional<double> c_ceiling(int N, int K);
/// Version tag and provenance note of the compiled-in ceiling table.
std::string c_ceiling_table_version();

MainBoundCertificate certify_main_bound(const Polynomial& A, const Polynomial& B, const BezoutSolution& solution,
                                        double delta, std::optional<double> ceiling = std::nullopt);

}  // namespace bezout
