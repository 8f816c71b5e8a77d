#pragma once

#include <vector>

namespace bezout {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule by Newton iteration on P_n; results are cached per n.
const GaussLegendre& gauss_legendre(int n);

/**
 * Per-arc quadrature policy for contour integrals.
 *
 * Arcs are first cut into pieces of sweep at most pi/2; each piece gets an
 * `order`-point Gauss-Legendre rule. The order doubles until no reported
 * coefficient moves by more than `tolerance`, up to `max_order`.
 */
struct QuadratureRule {
  int order = 16;
  int max_order = 1024;
  double tolerance = 1e-9;
};

}  // namespace bezout
